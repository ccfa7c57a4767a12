// Acceptance suite: exercises the toolkit's end-to-end claims at full scale
// and prints one PASS/FAIL line per criterion. Everything is exact field
// arithmetic; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "lindecomp/attacks.hpp"
#include "lindecomp/bench.hpp"
#include "lindecomp/json_io.hpp"

using namespace lindecomp;

namespace {

const MatrixF& mat(const Payload& p) { return std::get<MatrixF>(p); }

VectorF random_vector(Fe p, std::size_t n, Rng& rng) {
    VectorF v(p, n);
    for (std::size_t i = 0; i < n; ++i)
        v.at(i) = rng.field_element(p);
    return v;
}

MatrixF random_matrix(Fe p, std::size_t n, Rng& rng) {
    MatrixF m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rng.field_element(p);
    return m;
}

int honest_runs_checked = 0;
int honest_runs_agreeing = 0;

void tally_honest(const HonestResult& r) {
    ++honest_runs_checked;
    if (r.key_alice == r.key_bob)
        ++honest_runs_agreeing;
}

// 1. Operator transport: over 100 random block fixtures (n=4, p=1009, k=2),
// the operator derived from (u, a*u*b) maps c*u*d to a*(c*u*d)*b exactly.
bool criterion_operator_transport() {
    Rng rng(10001);
    for (int i = 0; i < 100; ++i) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 20000 + i);
        const MatrixF& u = *fx.h;
        const MatrixF a = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF b = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF c = random_word(fx.b_side, {3, 8}, rng);
        const MatrixF d = random_word(fx.b_side, {3, 8}, rng);

        const SandwichBasis basis = span_closure(fx.a_side, u);
        const SandwichOperator op = derive_operator(basis, a * u * b);
        const MatrixF w = c * u * d;
        if (!(op.apply(w) == a * w * b))
            return false;
    }
    return true;
}

// 2. Four-pass protocol: 100 seeded runs, exact key recovery every time.
bool criterion_wang_attack() {
    int exact = 0;
    for (int i = 0; i < 100; ++i) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 30000 + i);
        Rng rng(40000 + i);
        const HonestResult r = run_wang(fx, rng);
        tally_honest(r);
        if (attack_wang(r.transcript) == mat(r.key_alice))
            ++exact;
    }
    std::cout << "      wang: " << exact << "/100 exact key recoveries\n";
    return exact == 100;
}

// 3. Conjugation protocol: 100 seeded runs plus the GF(5) worked instance.
bool criterion_kolee_attack() {
    int exact = 0;
    for (int i = 0; i < 100; ++i) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 50000 + i);
        Rng rng(60000 + i);
        const HonestResult r = run_kolee(fx, rng);
        tally_honest(r);
        if (attack_kolee(r.transcript) == mat(r.key_alice))
            ++exact;
    }
    std::cout << "      kolee: " << exact << "/100 exact key recoveries\n";

    const MatrixF ga = MatrixF::from_rows(5, {{2, 0}, {0, 1}});
    const MatrixF gb = MatrixF::from_rows(5, {{1, 0}, {0, 2}});
    const MatrixF h = MatrixF::from_rows(5, {{1, 1}, {1, 0}});
    const ProtocolFixture fx = fixture_from_parts(5, {ga}, {gb}, h, {}, 0);
    const MatrixF b = MatrixF::from_rows(5, {{1, 0}, {0, 4}});
    const HonestResult r = run_kolee(fx, KoLeeSecrets{ga, b});
    tally_honest(r);
    const MatrixF expected = ga * b * h * ga.inverse() * b.inverse();
    const bool instance_ok = expected == MatrixF::from_rows(5, {{1, 3}, {2, 0}}) &&
                             attack_kolee(r.transcript) == expected;
    std::cout << "      kolee GF(5) instance recovers [[1,3],[2,0]]: "
              << (instance_ok ? "yes" : "NO") << "\n";
    return exact == 100 && instance_ok;
}

// 4. Vector protocol: 100 seeded runs with random messages in GF(1009)^4.
bool criterion_harley_attack() {
    int exact = 0;
    for (int i = 0; i < 100; ++i) {
        const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 70000 + i);
        Rng rng(80000 + i);
        const VectorF x = random_vector(1009, 4, rng);
        const HonestResult r = run_harley(fx, x, rng);
        tally_honest(r);
        if (attack_harley(r.transcript) == x)
            ++exact;
    }
    std::cout << "      harley: " << exact << "/100 exact message recoveries\n";
    return exact == 100;
}

// 5. Structural bounds of the saturation: productive lists at most n^2 and
// the closure certificate holds, over the full bench grid. Zero violations.
bool criterion_structural_bounds() {
    int violations = 0;
    int closures = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const std::size_t n1 = (n + 1) / 2;
                const ProtocolFixture fx =
                    make_block_fixture(n1, n - n1, k, k, 1009, 90000 + seed);
                const SandwichBasis basis = span_closure(fx.a_side, *fx.h);
                ++closures;
                if (basis.stats().productive_lists > n * n)
                    ++violations;
                if (basis.dimension() > n * n)
                    ++violations;
                if (!basis.verify_closure(fx.a_side))
                    ++violations;
                if (!basis.verify_multipliers())
                    ++violations;
            }
        }
    }
    const std::vector<BenchCell> grid = [] {
        std::vector<BenchCell> g;
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t k = 1; k <= 3; ++k)
                g.push_back({n, k, 1009});
        return g;
    }();
    const auto records = bench_span_closure(grid, 3, 424242);
    if (!all_bounds_ok(records))
        ++violations;
    std::cout << "      " << closures << " closures + " << records.size()
              << " bench records, " << violations << " violations\n";
    return violations == 0;
}

// 6. Honest-protocol correctness: both parties agreed in every run above.
bool criterion_honest_correctness() {
    std::cout << "      " << honest_runs_agreeing << "/" << honest_runs_checked
              << " simulated runs with agreeing keys\n";
    return honest_runs_checked > 0 && honest_runs_agreeing == honest_runs_checked;
}

// 7. Threat model: the attack consumes a transcript reparsed from JSON with
// no in-process private state and still recovers the key.
bool criterion_threat_model() {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 424243);
    Rng rng(424244);
    const HonestResult r = run_wang(fx, rng);
    const std::string wire = transcript_to_json(r.transcript).dump();
    const Transcript reparsed = transcript_from_json(parse_json(wire));
    if (!(attack_wang(reparsed) == mat(r.key_alice)))
        return false;

    const ProtocolFixture pfx = make_polynomial_fixture(4, 1009, 424245);
    Rng prng(424246);
    const VectorF x = random_vector(1009, 4, prng);
    const HonestResult hr = run_harley(pfx, x, prng);
    const Transcript hrep = transcript_from_json(parse_json(transcript_to_json(hr.transcript).dump()));
    return attack_harley(hrep) == x;
}

// 8. Fault injection: replacing one message with a random matrix must cause
// decomposition failure or a key mismatch in at least 95 of 100 trials.
bool criterion_fault_injection() {
    Rng rng(424247);
    int detected = 0;
    for (int i = 0; i < 100; ++i) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 500000 + i);
        Rng run_rng(510000 + i);
        const HonestResult r = run_wang(fx, run_rng);
        Transcript tampered = r.transcript;
        const std::size_t victim = rng.index(tampered.messages.size());
        tampered.messages[victim].payload = random_matrix(1009, 4, rng);
        try {
            if (!(attack_wang(tampered) == mat(r.key_alice)))
                ++detected;
        } catch (const std::exception&) {
            ++detected;
        }
    }
    std::cout << "      " << detected << "/100 injected faults detected\n";
    return detected >= 95;
}

} // namespace

int main() {
    struct Criterion {
        const char* description;
        std::function<bool()> check;
    };
    const std::vector<Criterion> criteria{
        {"1. operator transport equals the secret map on the opposite coset (100 fixtures)",
         criterion_operator_transport},
        {"2. wang attack: exact key recovery in 100/100 seeded runs", criterion_wang_attack},
        {"3. kolee attack: 100/100 runs and the GF(5) worked instance",
         criterion_kolee_attack},
        {"4. harley attack: exact message recovery in 100/100 seeded runs",
         criterion_harley_attack},
        {"5. saturation bounds and closure certificate: zero violations",
         criterion_structural_bounds},
        {"6. honest runs: key_alice == key_bob in every simulation",
         criterion_honest_correctness},
        {"7. threat model: attack succeeds on JSON-reparsed transcripts",
         criterion_threat_model},
        {"8. fault injection: >= 95/100 tampered transcripts detected",
         criterion_fault_injection},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        bool ok = false;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            std::cout << "      unexpected exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS  " : "FAIL  ") << c.description << "\n";
        if (!ok)
            ++failures;
    }
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
