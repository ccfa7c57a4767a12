#include "lindecomp/closure.hpp"

#include <set>

namespace lindecomp {

std::vector<MatrixF> closure_alphabet(const GeneratorSet& side) {
    std::vector<MatrixF> alphabet;
    alphabet.reserve(2 * side.count() + 1);
    alphabet.push_back(MatrixF::identity(side.modulus(), side.dimension()));
    for (std::size_t i = 0; i < side.count(); ++i) {
        alphabet.push_back(side.gens[i]);
        alphabet.push_back(side.inverses[i]);
    }
    return alphabet;
}

SandwichBasis span_closure(const GeneratorSet& side, const MatrixF& h) {
    if (h.is_zero())
        throw std::invalid_argument("span_closure needs a nonzero center");
    if (side.gens.empty())
        throw FixtureError("span_closure on an empty generator set");
    if (h.rows() != side.dimension() || h.cols() != side.dimension())
        throw DimensionMismatch("center does not match generator dimension");

    const std::vector<MatrixF> alphabet = closure_alphabet(side);
    SandwichBasis basis(h, h.modulus(), h.rows() * h.cols());

    // Parents of the current list; the first list expands the center itself.
    std::vector<SandwichBasis::Entry> parents;
    parents.push_back({alphabet[0], alphabet[0], h});
    bool first_list = true;

    while (!parents.empty()) {
        std::vector<SandwichBasis::Entry> accepted;
        std::set<std::vector<Fe>> seen; // duplicate values within this list
        std::uint64_t list_candidates = 0;

        for (const auto& parent : parents) {
            for (const MatrixF& x : alphabet) {
                const MatrixF left = x * parent.left;
                const MatrixF partial = x * parent.value;
                for (const MatrixF& y : alphabet) {
                    ++list_candidates;
                    MatrixF value = partial * y;
                    if (!seen.insert(value.flat()).second)
                        continue;
                    if (basis.span_.insert(value.flat())) {
                        SandwichBasis::Entry entry{left, parent.right * y, std::move(value)};
                        basis.entries_.push_back(entry);
                        accepted.push_back(std::move(entry));
                    }
                }
            }
        }

        basis.stats_.lists_processed++;
        basis.stats_.candidates_examined += list_candidates;
        basis.stats_.per_list_candidates.push_back(list_candidates);
        if (!accepted.empty())
            basis.stats_.productive_lists++;

        if (first_list && !accepted.empty()) {
            // The first list was the expansion of the center, so the center
            // itself never seeds another list.
            if (accepted.front().value == h)
                accepted.erase(accepted.begin());
            first_list = false;
        }
        parents = std::move(accepted);
    }
    return basis;
}

OrbitBasis orbit_closure(const GeneratorSet& side, const VectorF& v) {
    if (v.is_zero())
        throw std::invalid_argument("orbit_closure needs a nonzero center");
    if (side.gens.empty())
        throw FixtureError("orbit_closure on an empty generator set");
    if (v.size() != side.dimension())
        throw DimensionMismatch("center does not match generator dimension");

    const std::vector<MatrixF> alphabet = closure_alphabet(side);
    OrbitBasis basis(v, v.modulus(), v.size());

    std::vector<OrbitBasis::Entry> parents;
    parents.push_back({alphabet[0], v});
    bool first_list = true;

    while (!parents.empty()) {
        std::vector<OrbitBasis::Entry> accepted;
        std::set<std::vector<Fe>> seen;
        std::uint64_t list_candidates = 0;

        for (const auto& parent : parents) {
            for (const MatrixF& y : alphabet) {
                ++list_candidates;
                VectorF value = parent.value * y;
                if (!seen.insert(value.flat()).second)
                    continue;
                if (basis.span_.insert(value.flat())) {
                    OrbitBasis::Entry entry{parent.right * y, std::move(value)};
                    basis.entries_.push_back(entry);
                    accepted.push_back(std::move(entry));
                }
            }
        }

        basis.stats_.lists_processed++;
        basis.stats_.candidates_examined += list_candidates;
        basis.stats_.per_list_candidates.push_back(list_candidates);
        if (!accepted.empty())
            basis.stats_.productive_lists++;

        if (first_list && !accepted.empty()) {
            if (accepted.front().value == v)
                accepted.erase(accepted.begin());
            first_list = false;
        }
        parents = std::move(accepted);
    }
    return basis;
}

bool SandwichBasis::verify_closure(const GeneratorSet& side) const {
    for (const MatrixF& x : closure_alphabet(side))
        for (const Entry& e : entries_)
            if (!contains(x * e.value) || !contains(e.value * x))
                return false;
    return true;
}

bool SandwichBasis::verify_multipliers() const {
    for (const Entry& e : entries_)
        if (!(e.left * center_ * e.right == e.value))
            return false;
    return true;
}

bool OrbitBasis::verify_closure(const GeneratorSet& side) const {
    for (const MatrixF& x : closure_alphabet(side))
        for (const Entry& e : entries_)
            if (!contains(e.value * x))
                return false;
    return true;
}

bool OrbitBasis::verify_multipliers() const {
    for (const Entry& e : entries_)
        if (!(center_ * e.right == e.value))
            return false;
    return true;
}

} // namespace lindecomp
