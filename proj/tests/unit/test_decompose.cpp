#include "doctest.h"

#include "helpers.hpp"
#include "lindecomp/decompose.hpp"

using namespace lindecomp;
using testutil::random_matrix;
using testutil::random_vector;

TEST_SUITE("decompose") {

TEST_CASE("pair (u, u) yields the identity operator") {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 101);
    const SandwichBasis basis = span_closure(fx.a_side, *fx.h);
    const SandwichOperator op = derive_operator(basis, *fx.h);
    // coordinates of the center are the unit vector on entry 0 = (1, I, I)
    CHECK(op.terms()[0].coeff == 1);
    CHECK(op.terms()[0].left.is_identity());
    CHECK(op.terms()[0].right.is_identity());
    for (std::size_t i = 1; i < op.terms().size(); ++i)
        CHECK(op.terms()[i].coeff == 0);
    CHECK(op.apply(*fx.h) == *fx.h);

    Rng rng(1);
    const MatrixF w = random_matrix(1009, 4, rng);
    CHECK(op.apply(w) == w);
}

TEST_CASE("basis values decompose to unit coefficients") {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 103);
    const SandwichBasis basis = span_closure(fx.a_side, *fx.h);
    REQUIRE(basis.dimension() >= 2);
    const SandwichOperator op = derive_operator(basis, basis.entries()[1].value);
    CHECK(op.terms()[1].coeff == 1);
    CHECK(op.terms()[0].coeff == 0);
    // zero coefficients are retained, aligned with the basis
    CHECK(op.terms().size() == basis.dimension());
}

TEST_CASE("fixture-generated images decompose and round trip") {
    Rng rng(107);
    for (std::uint64_t seed : {109u, 113u, 127u}) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, seed);
        const MatrixF& u = *fx.h;
        const SandwichBasis basis = span_closure(fx.a_side, u);
        const MatrixF a = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF b = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF v = a * u * b;
        const SandwichOperator op = derive_operator(basis, v);
        CHECK(op.apply(u) == v); // round trip, always exact
    }
}

TEST_CASE("transport to the opposite coset matches the secret map") {
    Rng rng(131);
    for (int trial = 0; trial < 25; ++trial) {
        const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 1000 + trial);
        const MatrixF& u = *fx.h;
        const MatrixF a = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF b = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF c = random_word(fx.b_side, {3, 8}, rng);
        const MatrixF d = random_word(fx.b_side, {3, 8}, rng);

        const SandwichBasis basis = span_closure(fx.a_side, u);
        const SandwichOperator op = derive_operator(basis, a * u * b);
        const MatrixF w = c * u * d;
        CHECK(op.apply(w) == a * w * b);
    }
}

TEST_CASE("operator application is linear") {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 137);
    const SandwichBasis basis = span_closure(fx.a_side, *fx.h);
    Rng rng(139);
    const MatrixF a = random_word(fx.a_side, {3, 8}, rng);
    const MatrixF b = random_word(fx.a_side, {3, 8}, rng);
    const SandwichOperator op = derive_operator(basis, a * *fx.h * b);
    for (int i = 0; i < 10; ++i) {
        const MatrixF w1 = random_matrix(1009, 4, rng);
        const MatrixF w2 = random_matrix(1009, 4, rng);
        const Fe lambda = rng.field_element(1009);
        CHECK(op.apply(w1.scaled(lambda) + w2) == op.apply(w1).scaled(lambda) + op.apply(w2));
    }
}

TEST_CASE("sequential application transports composed maps") {
    Rng rng(149);
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 151);
    const MatrixF& u = *fx.h;
    const MatrixF a1 = random_word(fx.a_side, {3, 8}, rng);
    const MatrixF b1 = random_word(fx.a_side, {3, 8}, rng);
    const MatrixF a2 = random_word(fx.a_side, {3, 8}, rng);
    const MatrixF b2 = random_word(fx.a_side, {3, 8}, rng);

    const MatrixF u1 = a1 * u * b1;
    const SandwichOperator op1 = derive_operator(span_closure(fx.a_side, u), u1);
    const SandwichOperator op2 = derive_operator(span_closure(fx.a_side, u1), a2 * u1 * b2);
    const SandwichOperator composed =
        derive_operator(span_closure(fx.a_side, u), a2 * a1 * u * b1 * b2);

    const MatrixF c = random_word(fx.b_side, {3, 8}, rng);
    const MatrixF d = random_word(fx.b_side, {3, 8}, rng);
    const MatrixF w = c * u * d;
    CHECK(op2.apply(op1.apply(w)) == composed.apply(w));
}

TEST_CASE("targets outside the span are rejected") {
    const Fe p = 1009;
    GeneratorSet scalar =
        GeneratorSet::from_generators(Side::a, {MatrixF::identity(p, 3).scaled(5)});
    Rng rng(157);
    const MatrixF u = random_invertible(p, 3, rng);
    const SandwichBasis basis = span_closure(scalar, u); // dimension 1
    REQUIRE(basis.dimension() == 1);
    const MatrixF outside = random_matrix(p, 3, rng);
    CHECK_THROWS_AS(derive_operator(basis, outside), NotInSpanError);
}

TEST_CASE("right operator identity and orbit members") {
    const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 163);
    Rng rng(167);
    VectorF u = random_vector(1009, 4, rng);
    REQUIRE_FALSE(u.is_zero());
    const OrbitBasis basis = orbit_closure(fx.a_side, u);

    const RightOperator id_op = derive_right_operator(basis, u);
    CHECK(id_op.apply(u) == u);
    Rng rng2(173);
    const VectorF w = random_vector(1009, 4, rng2);
    CHECK(id_op.apply(w) == w * MatrixF::identity(1009, 4)); // identity on everything

    const VectorF member = u * fx.a_side.gens[0];
    CHECK_NOTHROW(derive_right_operator(basis, member));
}

TEST_CASE("right operator transports commutative factors") {
    const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 179);
    Rng rng(181);
    VectorF u = random_vector(1009, 4, rng);
    REQUIRE_FALSE(u.is_zero());
    const MatrixF c = random_word(fx.a_side, {2, 6}, rng);
    const MatrixF d = random_word(fx.a_side, {2, 6}, rng);

    const OrbitBasis basis = orbit_closure(fx.a_side, u);
    const RightOperator op = derive_right_operator(basis, u * c);
    // in a commutative group, applying to u*d must give u*d*c
    CHECK(op.apply(u * d) == u * d * c);
}

TEST_CASE("right operator is linear") {
    const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 191);
    Rng rng(193);
    VectorF u = random_vector(1009, 4, rng);
    REQUIRE_FALSE(u.is_zero());
    const OrbitBasis basis = orbit_closure(fx.a_side, u);
    const RightOperator op =
        derive_right_operator(basis, u * random_word(fx.a_side, {2, 6}, rng));
    for (int i = 0; i < 10; ++i) {
        const VectorF w1 = random_vector(1009, 4, rng);
        const VectorF w2 = random_vector(1009, 4, rng);
        CHECK(op.apply(w1 + w2) == op.apply(w1) + op.apply(w2));
    }
}

TEST_CASE("masked message recovery step") {
    // operator from (x*a*b1 -> x*a) applied to x*b1 recovers x, because
    // x*b1 = x*a*b1*a^-1 lives on the same orbit
    const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 197);
    Rng rng(199);
    VectorF x = random_vector(1009, 4, rng);
    REQUIRE_FALSE(x.is_zero());
    const MatrixF a = random_word(fx.a_side, {2, 6}, rng);
    const MatrixF b1 = random_word(fx.a_side, {2, 6}, rng);

    const VectorF xab1 = x * a * b1;
    const OrbitBasis basis = orbit_closure(fx.a_side, xab1);
    const RightOperator op = derive_right_operator(basis, x * a);
    CHECK(op.apply(x * b1) == x);
}

} // TEST_SUITE
