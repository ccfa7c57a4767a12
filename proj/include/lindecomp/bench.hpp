#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lindecomp/closure.hpp"

#include "json.hpp"

namespace lindecomp {

struct BenchCell {
    std::size_t n = 2; // matrix size; ambient dimension is r = n^2
    std::size_t k = 1; // generators per side
    Fe p = kDefaultModulus;
};

struct BenchRecord {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    Fe p = 0;
    std::uint64_t seed = 0;
    std::size_t basis_dim = 0;
    std::size_t productive_lists = 0;
    std::uint64_t candidates = 0;
    std::uint64_t micros = 0;
    bool bounds_ok = false; // structural counters within their bounds
    bool failed = false;    // fixture sampling failed; excluded from summaries
};

// Runs span closures over block fixtures on the grid, one record per
// (cell, seed). Structural bounds checked per record: productive lists and
// basis dimension at most r, and each list generated at most (2k+1)^2 * r
// candidates (the two-sided alphabet squared times the parent bound).
// Sampling failures are recorded, not fatal. Counters are deterministic for
// a fixed seed; only micros varies.
std::vector<BenchRecord> bench_span_closure(const std::vector<BenchCell>& grid,
                                            std::size_t seeds_per_cell,
                                            std::uint64_t base_seed);

// CSV with the fixed header n,k,p,seed,basis_dim,productive_lists,candidates,micros.
void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

// Per-cell medians plus an informational log-log fit of time against r for
// each generator count; the quintic envelope is reported, not enforced.
nlohmann::ordered_json bench_summary(const std::vector<BenchRecord>& records);

bool all_bounds_ok(const std::vector<BenchRecord>& records);

} // namespace lindecomp
