#include "lindecomp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>

namespace lindecomp {

namespace {

std::uint64_t median(std::vector<std::uint64_t> values) {
    if (values.empty())
        return 0;
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

} // namespace

std::vector<BenchRecord> bench_span_closure(const std::vector<BenchCell>& grid,
                                            std::size_t seeds_per_cell,
                                            std::uint64_t base_seed) {
    std::vector<BenchRecord> records;
    records.reserve(grid.size() * seeds_per_cell);
    for (const BenchCell& cell : grid) {
        for (std::size_t s = 0; s < seeds_per_cell; ++s) {
            BenchRecord rec;
            rec.n = cell.n;
            rec.r = cell.n * cell.n;
            rec.k = cell.k;
            rec.p = cell.p;
            rec.seed = Rng::split(base_seed, records.size());
            try {
                const std::size_t n1 = (cell.n + 1) / 2;
                const std::size_t n2 = cell.n - n1;
                ProtocolFixture fx =
                    make_block_fixture(n1, n2, cell.k, cell.k, cell.p, rec.seed);
                const auto start = std::chrono::steady_clock::now();
                SandwichBasis basis = span_closure(fx.a_side, *fx.h);
                const auto stop = std::chrono::steady_clock::now();
                rec.micros = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
                rec.basis_dim = basis.dimension();
                rec.productive_lists = basis.stats().productive_lists;
                rec.candidates = basis.stats().candidates_examined;

                const std::uint64_t alphabet = 2 * cell.k + 1;
                const std::uint64_t per_list_bound = alphabet * alphabet * rec.r;
                rec.bounds_ok = rec.productive_lists <= rec.r && rec.basis_dim <= rec.r;
                for (std::uint64_t c : basis.stats().per_list_candidates)
                    if (c > per_list_bound)
                        rec.bounds_ok = false;
            } catch (const SamplingError&) {
                rec.failed = true;
                rec.bounds_ok = true; // nothing to violate
            }
            records.push_back(rec);
        }
    }
    return records;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << "n,k,p,seed,basis_dim,productive_lists,candidates,micros\n";
    for (const BenchRecord& r : records) {
        if (r.failed)
            continue;
        os << r.n << ',' << r.k << ',' << r.p << ',' << r.seed << ',' << r.basis_dim << ','
           << r.productive_lists << ',' << r.candidates << ',' << r.micros << '\n';
    }
}

nlohmann::ordered_json bench_summary(const std::vector<BenchRecord>& records) {
    struct CellKey {
        std::size_t n, k;
        Fe p;
        bool operator<(const CellKey& o) const {
            return std::tie(n, k, p) < std::tie(o.n, o.k, o.p);
        }
    };
    struct CellAgg {
        std::vector<std::uint64_t> micros, candidates, dims, lists;
        std::size_t failures = 0;
    };
    std::map<CellKey, CellAgg> cells;
    for (const BenchRecord& r : records) {
        CellAgg& agg = cells[{r.n, r.k, r.p}];
        if (r.failed) {
            agg.failures++;
            continue;
        }
        agg.micros.push_back(r.micros);
        agg.candidates.push_back(r.candidates);
        agg.dims.push_back(r.basis_dim);
        agg.lists.push_back(r.productive_lists);
    }

    nlohmann::ordered_json summary;
    summary["cells"] = nlohmann::ordered_json::array();
    for (const auto& [key, agg] : cells) {
        nlohmann::ordered_json cell;
        cell["n"] = key.n;
        cell["k"] = key.k;
        cell["p"] = key.p;
        cell["runs"] = agg.micros.size();
        cell["failures"] = agg.failures;
        cell["median_micros"] = median(agg.micros);
        cell["median_candidates"] = median(agg.candidates);
        cell["median_basis_dim"] = median(agg.dims);
        cell["median_productive_lists"] = median(agg.lists);
        summary["cells"].push_back(cell);
    }

    // Least-squares slope of log(median micros) against log(r) per k; the
    // crude analytic envelope grows like r^5, so the slope is reported next
    // to that exponent for eyeballing.
    summary["time_scaling"] = nlohmann::ordered_json::array();
    std::map<std::size_t, std::vector<std::pair<double, double>>> by_k;
    for (const auto& [key, agg] : cells) {
        const std::uint64_t med = median(agg.micros);
        if (!agg.micros.empty() && med > 0)
            by_k[key.k].push_back({std::log(double(key.n * key.n)), std::log(double(med))});
    }
    for (const auto& [k, pts] : by_k) {
        if (pts.size() < 2)
            continue;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, yv] : pts) {
            sx += x;
            sy += yv;
            sxx += x * x;
            sxy += x * yv;
        }
        const double denom = pts.size() * sxx - sx * sx;
        if (denom == 0)
            continue;
        nlohmann::ordered_json fit;
        fit["k"] = k;
        fit["log_time_vs_log_r_slope"] = (pts.size() * sxy - sx * sy) / denom;
        fit["envelope_exponent"] = 5;
        summary["time_scaling"].push_back(fit);
    }
    summary["all_bounds_ok"] = all_bounds_ok(records);
    return summary;
}

bool all_bounds_ok(const std::vector<BenchRecord>& records) {
    for (const BenchRecord& r : records)
        if (!r.bounds_ok)
            return false;
    return true;
}

} // namespace lindecomp
