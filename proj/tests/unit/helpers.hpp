#pragma once

// Shared helpers for the unit tests, including an independent brute-force
// rank routine used as the oracle for the incremental span.

#include <cstdint>
#include <vector>

#include "lindecomp/matrix.hpp"
#include "lindecomp/rng.hpp"

namespace testutil {

using lindecomp::Fe;
using lindecomp::MatrixF;
using lindecomp::Rng;
using lindecomp::VectorF;

// Plain textbook elimination over GF(p), destructive on a copy; deliberately
// written without reusing IncrementalSpan so it can serve as its oracle.
inline std::size_t brute_rank(std::vector<std::vector<std::int64_t>> rows, Fe p) {
    lindecomp::PrimeField f(p);
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<Fe>> m;
    for (auto& r : rows) {
        std::vector<Fe> rr;
        for (std::int64_t v : r)
            rr.push_back(f.reduce(v));
        m.push_back(rr);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[sel], m[row]);
        const Fe inv = f.inv(m[row][col]);
        for (std::size_t j = 0; j < cols; ++j)
            m[row][j] = f.mul(m[row][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            const Fe factor = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline std::size_t brute_rank_flat(const std::vector<std::vector<Fe>>& rows, Fe p) {
    std::vector<std::vector<std::int64_t>> conv;
    for (const auto& r : rows)
        conv.emplace_back(r.begin(), r.end());
    return brute_rank(std::move(conv), p);
}

inline MatrixF random_matrix(Fe p, std::size_t n, Rng& rng) {
    MatrixF m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rng.field_element(p);
    return m;
}

inline VectorF random_vector(Fe p, std::size_t n, Rng& rng) {
    VectorF v(p, n);
    for (std::size_t i = 0; i < n; ++i)
        v.at(i) = rng.field_element(p);
    return v;
}

} // namespace testutil
