#include "lindecomp/platform.hpp"

namespace lindecomp {

GeneratorSet GeneratorSet::from_generators(Side label, std::vector<MatrixF> gens) {
    GeneratorSet gs;
    gs.label = label;
    gs.inverses.reserve(gens.size());
    for (const MatrixF& g : gens)
        gs.inverses.push_back(g.inverse()); // throws SingularMatrix if not a group element
    gs.gens = std::move(gens);
    return gs;
}

MatrixF random_word(const GeneratorSet& gs, WordLengthRange range, Rng& rng) {
    if (gs.gens.empty())
        throw FixtureError("random_word on an empty generator set");
    if (range.hi < range.lo)
        throw FixtureError("word length range is empty");
    const std::size_t length = range.lo + rng.index(range.hi - range.lo + 1);
    MatrixF word = MatrixF::identity(gs.modulus(), gs.dimension());
    for (std::size_t i = 0; i < length; ++i) {
        const std::size_t pick = rng.index(2 * gs.count());
        const std::size_t gen = pick / 2;
        word = word * (pick % 2 == 0 ? gs.gens[gen] : gs.inverses[gen]);
    }
    return word;
}

MatrixF random_invertible(Fe p, std::size_t n, Rng& rng) {
    for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
        MatrixF m(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = rng.field_element(p);
        try {
            (void)m.inverse();
            return m;
        } catch (const SingularMatrix&) {
            // resample
        }
    }
    throw SamplingError("no invertible matrix found in " + std::to_string(kMaxSampleRetries) +
                        " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

void ProtocolFixture::verify_commutation() const {
    for (const MatrixF& ga : a_side.gens)
        for (const MatrixF& gb : b_side.gens)
            if (!(ga * gb == gb * ga))
                throw FixtureError("fixture sides do not commute elementwise");
}

namespace {

MatrixF embed_block(Fe p, std::size_t n, std::size_t offset, const MatrixF& block) {
    MatrixF m = MatrixF::identity(p, n);
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            m.at(offset + i, offset + j) = block.at(i, j);
    return m;
}

} // namespace

ProtocolFixture make_block_fixture(std::size_t n1, std::size_t n2, std::size_t k_a,
                                   std::size_t k_b, Fe p, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1 || k_a < 1 || k_b < 1)
        throw FixtureError("block fixture needs n1, n2, k_a, k_b >= 1");
    PrimeField field(p); // validates the modulus
    const std::size_t n = n1 + n2;
    Rng rng(seed);

    std::vector<MatrixF> a_gens;
    for (std::size_t i = 0; i < k_a; ++i)
        a_gens.push_back(embed_block(p, n, 0, random_invertible(p, n1, rng)));
    std::vector<MatrixF> b_gens;
    for (std::size_t i = 0; i < k_b; ++i)
        b_gens.push_back(embed_block(p, n, n1, random_invertible(p, n2, rng)));

    ProtocolFixture fx;
    fx.modulus = field.modulus();
    fx.dimension = n;
    fx.a_side = GeneratorSet::from_generators(Side::a, std::move(a_gens));
    fx.b_side = GeneratorSet::from_generators(Side::b, std::move(b_gens));
    fx.h = random_invertible(p, n, rng);
    fx.seed = seed;
    fx.verify_commutation();
    return fx;
}

ProtocolFixture make_polynomial_fixture(std::size_t n, Fe p, std::uint64_t seed, std::size_t k) {
    if (n < 2)
        throw FixtureError("polynomial fixture needs n >= 2");
    if (k < 1)
        throw FixtureError("polynomial fixture needs at least one generator");
    PrimeField field(p);
    Rng rng(seed);

    // One shared matrix M; every generator is an invertible q(M), so the
    // whole platform group is commutative.
    MatrixF m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rng.field_element(p);
    const MatrixF m2 = m * m;

    std::vector<MatrixF> gens;
    for (std::size_t g = 0; g < k; ++g) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxSampleRetries && !found; ++attempt) {
            MatrixF cand = MatrixF::identity(p, n).scaled(rng.field_element(p));
            cand = cand + m.scaled(rng.field_element(p));
            cand = cand + m2.scaled(rng.field_element(p));
            try {
                (void)cand.inverse();
                gens.push_back(cand);
                found = true;
            } catch (const SingularMatrix&) {
            }
        }
        if (!found)
            throw SamplingError("no invertible polynomial generator found in " +
                                std::to_string(kMaxSampleRetries) + " attempts");
    }

    ProtocolFixture fx;
    fx.modulus = field.modulus();
    fx.dimension = n;
    fx.a_side = GeneratorSet::from_generators(Side::a, gens);
    fx.b_side = GeneratorSet::from_generators(Side::b, gens);
    fx.h = random_invertible(p, n, rng);
    VectorF y(p, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            y.at(i) = rng.field_element(p);
    } while (y.is_zero());
    fx.y = y;
    fx.seed = seed;
    fx.verify_commutation();
    return fx;
}

ProtocolFixture fixture_from_parts(Fe p, std::vector<MatrixF> a_gens,
                                   std::vector<MatrixF> b_gens, std::optional<MatrixF> h,
                                   std::optional<VectorF> y, std::uint64_t seed) {
    PrimeField field(p);
    if (a_gens.empty() || b_gens.empty())
        throw FixtureError("fixture needs at least one generator per side");
    ProtocolFixture fx;
    fx.modulus = field.modulus();
    fx.dimension = a_gens.front().rows();
    fx.a_side = GeneratorSet::from_generators(Side::a, std::move(a_gens));
    fx.b_side = GeneratorSet::from_generators(Side::b, std::move(b_gens));
    fx.h = std::move(h);
    fx.y = std::move(y);
    fx.seed = seed;
    fx.verify_commutation();
    return fx;
}

} // namespace lindecomp
