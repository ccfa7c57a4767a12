#include "doctest.h"

#include "helpers.hpp"
#include "lindecomp/matrix.hpp"

using namespace lindecomp;
using testutil::random_matrix;

TEST_SUITE("matrix") {

TEST_CASE("identity is neutral") {
    Rng rng(7);
    const MatrixF m = random_matrix(1009, 4, rng);
    const MatrixF id = MatrixF::identity(1009, 4);
    CHECK(id * m == m);
    CHECK(m * id == m);
}

TEST_CASE("upper triangular square over GF(5)") {
    const MatrixF m = MatrixF::from_rows(5, {{1, 1}, {0, 1}});
    CHECK(m * m == MatrixF::from_rows(5, {{1, 2}, {0, 1}}));
}

TEST_CASE("inverse examples") {
    CHECK(MatrixF::identity(7, 3).inverse() == MatrixF::identity(7, 3));
    // 2*3 = 6 = 1 mod 5
    CHECK(MatrixF::from_rows(5, {{2, 0}, {0, 1}}).inverse() ==
          MatrixF::from_rows(5, {{3, 0}, {0, 1}}));
}

TEST_CASE("random invertible round trips through its inverse") {
    Rng rng(11);
    const MatrixF id = MatrixF::identity(1009, 4);
    int checked = 0;
    while (checked < 25) {
        const MatrixF m = random_matrix(1009, 4, rng);
        MatrixF inv;
        try {
            inv = m.inverse();
        } catch (const SingularMatrix&) {
            continue;
        }
        CHECK(m * inv == id);
        CHECK(inv * m == id);
        ++checked;
    }
}

TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(MatrixF(7, 3, 3).inverse(), SingularMatrix);
    // second row is twice the first
    CHECK_THROWS_AS(MatrixF::from_rows(7, {{1, 2}, {2, 4}}).inverse(), SingularMatrix);
}

TEST_CASE("shape and modulus mismatches") {
    const MatrixF a(7, 2, 3);
    const MatrixF b(7, 2, 3);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
    CHECK_THROWS_AS(a + MatrixF(7, 3, 2), DimensionMismatch);
    CHECK_THROWS_AS(a + MatrixF(11, 2, 3), DimensionMismatch);
    CHECK_THROWS_AS(MatrixF(7, 2, 3).inverse(), DimensionMismatch);
}

TEST_CASE("flattening is row-major") {
    const MatrixF m = MatrixF::from_rows(7, {{1, 2}, {3, 4}});
    CHECK(m.flat() == std::vector<Fe>{1, 2, 3, 4});
}

TEST_CASE("vector times matrix") {
    const VectorF v = VectorF::from_ints(7, {1, 2});
    const MatrixF m = MatrixF::from_rows(7, {{1, 2}, {3, 4}});
    // (1*1+2*3, 1*2+2*4) = (7, 10) = (0, 3) mod 7
    CHECK(v * m == VectorF::from_ints(7, {0, 3}));
    CHECK_THROWS_AS(VectorF::from_ints(7, {1, 2, 3}) * m, DimensionMismatch);
}

TEST_CASE("vector arithmetic") {
    const VectorF a = VectorF::from_ints(5, {1, 4, 2});
    const VectorF b = VectorF::from_ints(5, {3, 3, 3});
    CHECK(a + b == VectorF::from_ints(5, {4, 2, 0}));
    CHECK(a - b == VectorF::from_ints(5, {3, 1, 4}));
    CHECK(a.scaled(2) == VectorF::from_ints(5, {2, 3, 4}));
    CHECK((a - a).is_zero());
}

} // TEST_SUITE
