#include "doctest.h"

#include "helpers.hpp"
#include "lindecomp/platform.hpp"

using namespace lindecomp;
using testutil::random_matrix;

TEST_SUITE("platform") {

TEST_CASE("sandwich map basics") {
    Rng rng(3);
    const Fe p = 1009;
    const MatrixF f = random_matrix(p, 3, rng);
    const SandwichMap id = SandwichMap::identity(p, 3);
    CHECK(id.apply(f) == f);

    const MatrixF a = random_invertible(p, 3, rng);
    const MatrixF b = random_invertible(p, 3, rng);
    const SandwichMap map{a, b};
    CHECK(map.inverse().apply(map.apply(f)) == f);
    CHECK(map.apply(map.inverse().apply(f)) == f);
}

TEST_CASE("composition law") {
    Rng rng(4);
    const Fe p = 1009;
    for (int trial = 0; trial < 10; ++trial) {
        const SandwichMap first{random_invertible(p, 3, rng), random_invertible(p, 3, rng)};
        const SandwichMap then{random_invertible(p, 3, rng), random_invertible(p, 3, rng)};
        const MatrixF f = random_matrix(p, 3, rng);
        const SandwichMap composed = compose(then, first);
        // applying {a,b} then {c,d} is the single map {c*a, b*d}
        CHECK(composed.left == then.left * first.left);
        CHECK(composed.right == first.right * then.right);
        CHECK(composed.apply(f) == then.apply(first.apply(f)));
    }
}

TEST_CASE("random words") {
    Rng rng(5);
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 11);

    SUBCASE("length one yields a generator or its inverse") {
        GeneratorSet single = GeneratorSet::from_generators(Side::a, {fx.a_side.gens[0]});
        for (int i = 0; i < 10; ++i) {
            const MatrixF w = random_word(single, {1, 1}, rng);
            CHECK((w == single.gens[0] || w == single.inverses[0]));
        }
    }

    SUBCASE("length zero yields the identity when configured") {
        const MatrixF w = random_word(fx.a_side, {0, 0}, rng);
        CHECK(w.is_identity());
    }

    SUBCASE("fixed seed reproduces the word") {
        Rng r1(99), r2(99);
        CHECK(random_word(fx.a_side, {3, 8}, r1) == random_word(fx.a_side, {3, 8}, r2));
    }

    SUBCASE("words are invertible") {
        for (int i = 0; i < 10; ++i)
            CHECK_NOTHROW(random_word(fx.a_side, {3, 8}, rng).inverse());
    }

    SUBCASE("empty generator set is an error") {
        GeneratorSet empty;
        CHECK_THROWS_AS(random_word(empty, {1, 2}, rng), FixtureError);
    }
}

TEST_CASE("block fixture commutes elementwise") {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 17);
    CHECK_NOTHROW(fx.verify_commutation());
    for (const MatrixF& ga : fx.a_side.gens)
        for (const MatrixF& gb : fx.b_side.gens)
            CHECK(ga * gb == gb * ga);
}

TEST_CASE("1x1 blocks give diagonal generators") {
    const ProtocolFixture fx = make_block_fixture(1, 1, 1, 1, 101, 5);
    CHECK(fx.dimension == 2);
    for (const MatrixF& g : fx.a_side.gens) {
        CHECK(g.at(0, 1) == 0);
        CHECK(g.at(1, 0) == 0);
    }
    CHECK_NOTHROW(fx.verify_commutation());
}

TEST_CASE("2x2 block side is non-abelian") {
    // generic pairs of random 2x2 blocks do not commute with each other
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 23);
    CHECK_FALSE(fx.a_side.gens[0] * fx.a_side.gens[1] ==
                fx.a_side.gens[1] * fx.a_side.gens[0]);
}

TEST_CASE("fixture commutation holds for random words") {
    const ProtocolFixture fx = make_block_fixture(2, 2, 2, 2, 1009, 29);
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const MatrixF wa = random_word(fx.a_side, {3, 8}, rng);
        const MatrixF wb = random_word(fx.b_side, {3, 8}, rng);
        CHECK(wa * wb == wb * wa);
    }
}

TEST_CASE("identity is always a valid generator") {
    // the constant-1 polynomial evaluation
    GeneratorSet gs = GeneratorSet::from_generators(Side::a, {MatrixF::identity(1009, 4)});
    CHECK(gs.inverses[0].is_identity());
}

TEST_CASE("polynomial fixture is commutative") {
    const ProtocolFixture fx = make_polynomial_fixture(4, 1009, 37);
    CHECK(fx.a_side.count() == fx.b_side.count());
    for (const MatrixF& g1 : fx.a_side.gens)
        for (const MatrixF& g2 : fx.a_side.gens)
            CHECK(g1 * g2 == g2 * g1);
    CHECK_NOTHROW(fx.verify_commutation());
    REQUIRE(fx.h);
    CHECK_NOTHROW(fx.h->inverse());
    REQUIRE(fx.y);
    CHECK_FALSE(fx.y->is_zero());
}

TEST_CASE("fixture_from_parts re-verifies commutation") {
    // diag blocks commute; full matrices generally do not
    const MatrixF a = MatrixF::from_rows(7, {{2, 0}, {0, 1}});
    const MatrixF bad = MatrixF::from_rows(7, {{1, 1}, {0, 1}});
    CHECK_THROWS_AS(fixture_from_parts(7, {a}, {bad}, MatrixF::identity(7, 2), {}, 0),
                    FixtureError);
    CHECK_NOTHROW(fixture_from_parts(7, {a}, {MatrixF::from_rows(7, {{1, 0}, {0, 3}})},
                                     MatrixF::identity(7, 2), {}, 0));
}

TEST_CASE("fixture parameters are validated") {
    CHECK_THROWS_AS(make_block_fixture(0, 1, 1, 1, 7, 1), FixtureError);
    CHECK_THROWS_AS(make_block_fixture(1, 1, 0, 1, 7, 1), FixtureError);
    CHECK_THROWS_AS(make_block_fixture(1, 1, 1, 1, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_polynomial_fixture(1, 7, 1), FixtureError);
}

} // TEST_SUITE
