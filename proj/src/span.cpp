#include "lindecomp/span.hpp"

#include <algorithm>

namespace lindecomp {

IncrementalSpan::IncrementalSpan(Fe modulus, std::size_t ambient_dim)
    : field_(modulus), dim_(ambient_dim) {}

void IncrementalSpan::check_dim(const std::vector<Fe>& v) const {
    if (v.size() != dim_)
        throw DimensionMismatch("flattened length " + std::to_string(v.size()) +
                                " does not match ambient dimension " + std::to_string(dim_));
}

std::pair<std::vector<Fe>, std::vector<Fe>> IncrementalSpan::reduce(const std::vector<Fe>& v) const {
    std::vector<Fe> residual = v;
    std::vector<Fe> combo(stored_.size(), 0);
    for (const Row& row : rows_) {
        const Fe factor = residual[row.pivot];
        if (factor == 0)
            continue;
        for (std::size_t j = row.pivot; j < dim_; ++j)
            if (row.vec[j] != 0)
                residual[j] = field_.sub(residual[j], field_.mul(factor, row.vec[j]));
        for (std::size_t j = 0; j < row.comb.size(); ++j)
            if (row.comb[j] != 0)
                combo[j] = field_.add(combo[j], field_.mul(factor, row.comb[j]));
    }
    return {std::move(residual), std::move(combo)};
}

bool IncrementalSpan::insert(const std::vector<Fe>& element) {
    check_dim(element);
    auto [residual, combo] = reduce(element);
    std::size_t pivot = 0;
    while (pivot < dim_ && residual[pivot] == 0)
        ++pivot;
    if (pivot == dim_)
        return false; // dependent, span unchanged

    const Fe scale = field_.inv(residual[pivot]);
    Row row;
    row.pivot = pivot;
    row.vec.resize(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        row.vec[j] = field_.mul(scale, residual[j]);
    // residual == element - sum(combo[j] * stored_[j]); the new row therefore
    // combines the new element (index k) with the previously stored ones.
    row.comb.resize(stored_.size() + 1, 0);
    for (std::size_t j = 0; j < combo.size(); ++j)
        row.comb[j] = field_.neg(field_.mul(scale, combo[j]));
    row.comb.back() = scale;

    for (Row& other : rows_) {
        other.comb.resize(stored_.size() + 1, 0);
        const Fe factor = other.vec[pivot];
        if (factor == 0)
            continue;
        for (std::size_t j = pivot; j < dim_; ++j)
            if (row.vec[j] != 0)
                other.vec[j] = field_.sub(other.vec[j], field_.mul(factor, row.vec[j]));
        for (std::size_t j = 0; j < row.comb.size(); ++j)
            if (row.comb[j] != 0)
                other.comb[j] = field_.sub(other.comb[j], field_.mul(factor, row.comb[j]));
    }

    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(row));
    stored_.push_back(element);
    return true;
}

std::optional<std::vector<Fe>> IncrementalSpan::coordinates(const std::vector<Fe>& target) const {
    check_dim(target);
    auto [residual, combo] = reduce(target);
    for (Fe v : residual)
        if (v != 0)
            return std::nullopt;
    combo.resize(stored_.size(), 0);
    return combo;
}

bool IncrementalSpan::contains(const std::vector<Fe>& target) const {
    return coordinates(target).has_value();
}

std::vector<std::size_t> IncrementalSpan::pivot_cols() const {
    std::vector<std::size_t> cols;
    cols.reserve(rows_.size());
    for (const Row& r : rows_)
        cols.push_back(r.pivot);
    return cols;
}

} // namespace lindecomp
