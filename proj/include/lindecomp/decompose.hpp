#pragma once

#include <vector>

#include "lindecomp/closure.hpp"

namespace lindecomp {

// Reconstruction of a secret two-sided map from one known (input, output)
// pair: the output is expressed over a sandwich basis of the input, and the
// resulting combination w -> sum(alpha_i * L_i * w * R_i) reproduces the
// secret map on the whole opposite double coset.
//
// Zero coefficients are kept so term indices stay aligned with the basis
// entries they came from.
class SandwichOperator {
public:
    struct Term {
        Fe coeff;
        MatrixF left;
        MatrixF right;
    };

    SandwichOperator(std::vector<Term> terms, MatrixF source_center)
        : terms_(std::move(terms)), source_center_(std::move(source_center)) {}

    MatrixF apply(const MatrixF& w) const;

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const MatrixF& source_center() const noexcept { return source_center_; }

private:
    std::vector<Term> terms_;
    MatrixF source_center_;
};

// One-sided analogue for orbit spans: w -> sum(gamma_i * w * R_i), i.e.
// right multiplication by a fixed combination of group elements.
class RightOperator {
public:
    struct Term {
        Fe coeff;
        MatrixF right;
    };

    RightOperator(std::vector<Term> terms, VectorF source_center)
        : terms_(std::move(terms)), source_center_(std::move(source_center)) {}

    VectorF apply(const VectorF& w) const;

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const VectorF& source_center() const noexcept { return source_center_; }

private:
    std::vector<Term> terms_;
    VectorF source_center_;
};

// Expresses v over the basis of Lin(A u A); throws NotInSpanError when v does
// not decompose (wrong owner side or corrupted transcript).
SandwichOperator derive_operator(const SandwichBasis& basis, const MatrixF& v);

// Expresses v over the orbit basis of Lin(u G); throws NotInSpanError.
RightOperator derive_right_operator(const OrbitBasis& basis, const VectorF& v);

} // namespace lindecomp
