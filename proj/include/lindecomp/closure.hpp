#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lindecomp/platform.hpp"
#include "lindecomp/span.hpp"

namespace lindecomp {

// Counters from one saturation run. A list is "productive" when it
// contributed at least one new basis element; their count bounds termination.
struct ClosureStats {
    std::size_t lists_processed = 0;
    std::size_t productive_lists = 0;
    std::uint64_t candidates_examined = 0;
    std::vector<std::uint64_t> per_list_candidates;
};

// Basis of the subspace spanned by all products a*h*b with a, b running over
// a subgroup. Each basis element keeps the multiplier pair that produced it,
// value == left * center * right, which is what makes decomposition
// operators constructible later.
class SandwichBasis {
public:
    struct Entry {
        MatrixF left;
        MatrixF right;
        MatrixF value;
    };

    SandwichBasis(MatrixF center, Fe modulus, std::size_t ambient_dim)
        : center_(std::move(center)), span_(modulus, ambient_dim) {}

    const MatrixF& center() const noexcept { return center_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const IncrementalSpan& span() const noexcept { return span_; }
    const ClosureStats& stats() const noexcept { return stats_; }
    std::size_t dimension() const noexcept { return entries_.size(); }

    // Coefficients over entries() in order, or nullopt when target is
    // outside the span.
    std::optional<std::vector<Fe>> coordinates(const MatrixF& target) const {
        return span_.coordinates(target.flat());
    }
    bool contains(const MatrixF& target) const { return span_.contains(target.flat()); }

    // Saturation certificate: x*e and e*x stay inside the span for every
    // basis value e and every alphabet element x (generators, inverses, 1).
    bool verify_closure(const GeneratorSet& side) const;
    // value == left * center * right, recomputed exactly.
    bool verify_multipliers() const;

private:
    friend SandwichBasis span_closure(const GeneratorSet&, const MatrixF&);

    MatrixF center_;
    std::vector<Entry> entries_;
    IncrementalSpan span_;
    ClosureStats stats_;
};

// One-sided variant for row vectors: basis of the orbit span v*G with the
// right multipliers tracked.
class OrbitBasis {
public:
    struct Entry {
        MatrixF right;
        VectorF value;
    };

    OrbitBasis(VectorF center, Fe modulus, std::size_t ambient_dim)
        : center_(std::move(center)), span_(modulus, ambient_dim) {}

    const VectorF& center() const noexcept { return center_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const IncrementalSpan& span() const noexcept { return span_; }
    const ClosureStats& stats() const noexcept { return stats_; }
    std::size_t dimension() const noexcept { return entries_.size(); }

    std::optional<std::vector<Fe>> coordinates(const VectorF& target) const {
        return span_.coordinates(target.flat());
    }
    bool contains(const VectorF& target) const { return span_.contains(target.flat()); }

    bool verify_closure(const GeneratorSet& side) const;
    bool verify_multipliers() const;

private:
    friend OrbitBasis orbit_closure(const GeneratorSet&, const VectorF&);

    VectorF center_;
    std::vector<Entry> entries_;
    IncrementalSpan span_;
    ClosureStats stats_;
};

// Saturating list construction of a basis of Lin(A h A).
//
// The alphabet X is [1, g1, g1^-1, g2, g2^-1, ...]. The first list holds all
// x*h*y for x, y in X (so h itself is examined first and becomes entry 0);
// each accepted element of list i seeds list i+1 with x*e*y over the same
// alphabet, except that h is never re-expanded because list 1 already was
// its expansion. Processing order is fixed: parents in acceptance order,
// left factor varying slower than the right. The process stops when a list
// adds nothing; productive lists are bounded by the ambient dimension n^2.
SandwichBasis span_closure(const GeneratorSet& side, const MatrixF& h);

// Same saturation for the orbit span Lin(v G), right multiplication only;
// productive lists are bounded by n.
OrbitBasis orbit_closure(const GeneratorSet& side, const VectorF& v);

// The two-sided alphabet [1, g1, g1^-1, ...] in the fixed deterministic order.
std::vector<MatrixF> closure_alphabet(const GeneratorSet& side);

} // namespace lindecomp
