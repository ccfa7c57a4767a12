#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lindecomp/field.hpp"

namespace lindecomp {

// Growing row-reduced basis of a subspace of GF(p)^dim. Elements are inserted
// as flattened row-major vectors; each accepted element is remembered in
// insertion order, and coordinates() expresses targets over exactly those
// stored elements (unique, since only independent elements are stored).
//
// Internally every echelon row carries the combination that produced it from
// the stored elements, so decomposition falls out of the reduction pass.
class IncrementalSpan {
public:
    IncrementalSpan(Fe modulus, std::size_t ambient_dim);

    // Appends the element if it is independent of the current span and
    // returns true; otherwise leaves the span unchanged and returns false.
    bool insert(const std::vector<Fe>& element);

    // Coefficients c over the stored elements (insertion order) with
    // sum(c_i * element_i) == target, or nullopt when target is outside.
    std::optional<std::vector<Fe>> coordinates(const std::vector<Fe>& target) const;

    bool contains(const std::vector<Fe>& target) const;

    std::size_t size() const noexcept { return stored_.size(); }
    std::size_t ambient_dim() const noexcept { return dim_; }
    Fe modulus() const noexcept { return field_.modulus(); }

    const std::vector<std::vector<Fe>>& stored() const noexcept { return stored_; }

    // Pivot columns in echelon-row order; strictly increasing.
    std::vector<std::size_t> pivot_cols() const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<Fe> vec;  // reduced, vec[pivot] == 1
        std::vector<Fe> comb; // vec == sum(comb[j] * stored_[j])
    };

    void check_dim(const std::vector<Fe>& v) const;
    // Reduces v against the echelon rows; returns the residual and the
    // accumulated combination over stored elements.
    std::pair<std::vector<Fe>, std::vector<Fe>> reduce(const std::vector<Fe>& v) const;

    PrimeField field_;
    std::size_t dim_;
    std::vector<Row> rows_;                 // sorted by pivot column
    std::vector<std::vector<Fe>> stored_;   // accepted elements, insertion order
};

} // namespace lindecomp
