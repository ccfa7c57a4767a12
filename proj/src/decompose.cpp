#include "lindecomp/decompose.hpp"

namespace lindecomp {

MatrixF SandwichOperator::apply(const MatrixF& w) const {
    MatrixF acc(w.modulus(), w.rows(), w.cols());
    for (const Term& t : terms_) {
        if (t.coeff == 0)
            continue;
        acc = acc + (t.left * w * t.right).scaled(t.coeff);
    }
    return acc;
}

VectorF RightOperator::apply(const VectorF& w) const {
    VectorF acc(w.modulus(), w.size());
    for (const Term& t : terms_) {
        if (t.coeff == 0)
            continue;
        acc = acc + (w * t.right).scaled(t.coeff);
    }
    return acc;
}

SandwichOperator derive_operator(const SandwichBasis& basis, const MatrixF& v) {
    auto coords = basis.coordinates(v);
    if (!coords)
        throw NotInSpanError("image does not decompose over the sandwich basis");
    std::vector<SandwichOperator::Term> terms;
    terms.reserve(coords->size());
    for (std::size_t i = 0; i < coords->size(); ++i) {
        const auto& e = basis.entries()[i];
        terms.push_back({(*coords)[i], e.left, e.right});
    }
    return SandwichOperator(std::move(terms), basis.center());
}

RightOperator derive_right_operator(const OrbitBasis& basis, const VectorF& v) {
    auto coords = basis.coordinates(v);
    if (!coords)
        throw NotInSpanError("image does not decompose over the orbit basis");
    std::vector<RightOperator::Term> terms;
    terms.reserve(coords->size());
    for (std::size_t i = 0; i < coords->size(); ++i)
        terms.push_back({(*coords)[i], basis.entries()[i].right});
    return RightOperator(std::move(terms), basis.center());
}

} // namespace lindecomp
