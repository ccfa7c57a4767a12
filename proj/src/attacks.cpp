#include "lindecomp/attacks.hpp"

#include <map>
#include <set>

namespace lindecomp {

void validate_plan(const Transcript& t, const AttackPlan& plan) {
    if (plan.steps.empty())
        throw PlanError("attack plan has no steps");
    std::set<std::string> produced;
    auto resolvable = [&](const std::string& ref) {
        return t.find(ref) != nullptr || produced.count(ref) > 0;
    };
    for (const AttackStep& s : plan.steps) {
        if (s.name.empty())
            throw PlanError("attack step needs a result name");
        if (!resolvable(s.center))
            throw PlanError("step '" + s.name + "': unresolved center '" + s.center + "'");
        if (!resolvable(s.image))
            throw PlanError("step '" + s.name + "': unresolved image '" + s.image + "'");
        if (!resolvable(s.target))
            throw PlanError("step '" + s.name + "': unresolved target '" + s.target + "'");
        if (t.find(s.name) != nullptr || !produced.insert(s.name).second)
            throw PlanError("duplicate result name '" + s.name + "'");
    }
    if (!produced.count(plan.output))
        throw PlanError("plan output '" + plan.output + "' is not produced by any step");
}

MatrixF execute_plan(const Transcript& t, const AttackPlan& plan) {
    validate_plan(t, plan);

    std::map<std::string, MatrixF> results;
    auto resolve = [&](const std::string& ref) -> const MatrixF& {
        auto it = results.find(ref);
        if (it != results.end())
            return it->second;
        return t.matrix(ref);
    };

    // Bases are cached per (owner, center label); cheap for the fixed plans,
    // useful for user-supplied plans that revisit a pair.
    std::map<std::pair<Side, std::string>, SandwichBasis> bases;

    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        const AttackStep& step = plan.steps[i];
        try {
            const MatrixF& center = resolve(step.center);
            const MatrixF& image = resolve(step.image);
            const MatrixF& target = resolve(step.target);

            auto key = std::make_pair(step.owner, step.center);
            auto it = bases.find(key);
            if (it == bases.end()) {
                GeneratorSet side = t.fixture.side(step.owner);
                it = bases.emplace(key, span_closure(side, center)).first;
            }
            SandwichOperator op = derive_operator(it->second, image);
            results.emplace(step.name, op.apply(target));
        } catch (const NotInSpanError& e) {
            throw AttackError("attack failed at step " + std::to_string(i) + " ('" + step.name +
                                  "'): " + e.what(),
                              i);
        }
    }
    return results.at(plan.output);
}

AttackPlan wang_plan() {
    // The published pair (z, v) exhibits Bob's unmasking map; applied to y it
    // bares the inner element. The pairs (h, x) and (w, u) then exhibit
    // Alice's masking and unmasking maps, whose transport yields the key.
    AttackPlan plan;
    plan.steps.push_back({"z", "v", Side::b, "y", "inner"});
    plan.steps.push_back({"h", "x", Side::a, "inner", "masked"});
    plan.steps.push_back({"w", "u", Side::a, "masked", "key"});
    plan.output = "key";
    return plan;
}

AttackPlan kolee_plan() {
    AttackPlan plan;
    plan.steps.push_back({"h", "ha", Side::a, "hb", "key"});
    plan.output = "key";
    return plan;
}

MatrixF attack_wang(const Transcript& t) {
    if (t.protocol != ProtocolId::wang)
        throw PlanError("transcript is not a wang run");
    return execute_plan(t, wang_plan());
}

MatrixF attack_kolee(const Transcript& t) {
    if (t.protocol != ProtocolId::kolee)
        throw PlanError("transcript is not a kolee run");
    return execute_plan(t, kolee_plan());
}

VectorF attack_harley(const Transcript& t) {
    if (t.protocol != ProtocolId::harley)
        throw PlanError("transcript is not a harley run");

    const GeneratorSet group = t.fixture.side(Side::a);
    const VectorF& yb = t.vector("yb");
    const VectorF& xa = t.vector("xa");
    const VectorF& yba1 = t.vector("yba1");
    const VectorF& xab1 = t.vector("xab1");
    const VectorF& ya1b2 = t.vector("ya1b2");
    const VectorF& diff = t.vector("xb1-yb2");

    try {
        // Undo the a1 factor on the orbit of yba1, exposing yb2.
        const OrbitBasis orbit_y = orbit_closure(group, yba1);
        const RightOperator undo_a1 = derive_right_operator(orbit_y, yb);
        const VectorF yb2 = undo_a1.apply(ya1b2);

        // The remaining mask is b1; its undo lives on the orbit of xab1. A
        // zero xab1 means the message itself was zero.
        const VectorF xb1 = diff + yb2;
        if (xab1.is_zero())
            return VectorF(xb1.modulus(), xb1.size());
        const OrbitBasis orbit_x = orbit_closure(group, xab1);
        const RightOperator undo_b1 = derive_right_operator(orbit_x, xa);
        return undo_b1.apply(xb1);
    } catch (const NotInSpanError& e) {
        throw AttackError(std::string("message recovery failed: ") + e.what(), 0);
    }
}

} // namespace lindecomp
