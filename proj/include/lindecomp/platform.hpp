#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindecomp/matrix.hpp"
#include "lindecomp/rng.hpp"

namespace lindecomp {

enum class Side { a, b };

inline const char* side_name(Side s) { return s == Side::a ? "A" : "B"; }

// Finitely generated subgroup given by its generating set; inverses are
// precomputed so word sampling and two-sided alphabets stay cheap.
struct GeneratorSet {
    Side label = Side::a;
    std::vector<MatrixF> gens;
    std::vector<MatrixF> inverses;

    static GeneratorSet from_generators(Side label, std::vector<MatrixF> gens);

    std::size_t count() const noexcept { return gens.size(); }
    std::size_t dimension() const { return gens.empty() ? 0 : gens.front().rows(); }
    Fe modulus() const { return gens.empty() ? 0 : gens.front().modulus(); }
};

// The two-sided multiplication f -> left * f * right with invertible factors.
struct SandwichMap {
    MatrixF left;
    MatrixF right;

    MatrixF apply(const MatrixF& f) const { return left * f * right; }
    SandwichMap inverse() const { return {left.inverse(), right.inverse()}; }

    static SandwichMap identity(Fe modulus, std::size_t n) {
        return {MatrixF::identity(modulus, n), MatrixF::identity(modulus, n)};
    }

    bool operator==(const SandwichMap& rhs) const noexcept = default;
};

// compose(outer, inner) is the map f -> outer(inner(f)). Applying first
// {a,b} and then {c,d} therefore yields {c*a, b*d}.
inline SandwichMap compose(const SandwichMap& outer, const SandwichMap& inner) {
    return {outer.left * inner.left, inner.right * outer.right};
}

struct WordLengthRange {
    std::size_t lo = 3;
    std::size_t hi = 8;
};

// Product of uniformly chosen generators/inverses of uniform length in the
// range. Length 0 (identity) only occurs when the range allows it.
MatrixF random_word(const GeneratorSet& gs, WordLengthRange range, Rng& rng);

// Platform setup shared by the protocol simulators: two commuting subgroups,
// the public base element h, and (for the vector protocol) the public vector y.
struct ProtocolFixture {
    Fe modulus = 0;
    std::size_t dimension = 0;
    GeneratorSet a_side;
    GeneratorSet b_side;
    std::optional<MatrixF> h;
    std::optional<VectorF> y;
    std::uint64_t seed = 0;

    const GeneratorSet& side(Side s) const { return s == Side::a ? a_side : b_side; }

    // Elementwise commutation across sides; throws FixtureError on violation.
    void verify_commutation() const;
};

// Builds commuting sides out of block-diagonal generators: A acts on the top
// n1 x n1 block, B on the bottom n2 x n2 block, so every cross pair commutes.
// h is a random invertible dense matrix of size n1+n2.
ProtocolFixture make_block_fixture(std::size_t n1, std::size_t n2, std::size_t k_a,
                                   std::size_t k_b, Fe p, std::uint64_t seed);

// Builds one commutative group: all generators are invertible polynomial
// evaluations q(M) of a single random matrix M, so everything commutes.
// Both sides share the generator list; h and a nonzero y are included.
ProtocolFixture make_polynomial_fixture(std::size_t n, Fe p, std::uint64_t seed,
                                        std::size_t k = 2);

// Assembles a fixture from explicit parts and re-verifies commutation.
ProtocolFixture fixture_from_parts(Fe p, std::vector<MatrixF> a_gens,
                                   std::vector<MatrixF> b_gens, std::optional<MatrixF> h,
                                   std::optional<VectorF> y, std::uint64_t seed);

// Rejection-sampling retry budget for invertible candidates.
inline constexpr int kMaxSampleRetries = 100;

MatrixF random_invertible(Fe p, std::size_t n, Rng& rng);

} // namespace lindecomp
