#pragma once

#include <string>
#include <vector>

#include "lindecomp/decompose.hpp"
#include "lindecomp/protocols.hpp"

namespace lindecomp {

// One application of the decomposition rule: from the known public pair
// (center, image) of a secret map owned by one side, transport the map to a
// new target lying in the opposite side's double coset of center.
struct AttackStep {
    std::string center; // label of the known pair's input
    std::string image;  // label of the known pair's output
    Side owner = Side::a; // whose subgroup spans the basis
    std::string target; // transcript label or earlier step result
    std::string name;   // result name for later steps
};

struct AttackPlan {
    std::vector<AttackStep> steps;
    std::string output; // name of the step result returned
};

// Structural checks: names unique, references resolve (to transcript labels
// or earlier results), output produced. Throws PlanError.
void validate_plan(const Transcript& t, const AttackPlan& plan);

// Runs the plan against the public transcript alone: per step, a sandwich
// basis around the pair's center, an operator derived from the image, and
// one application to the target. Decomposition failure aborts with
// AttackError carrying the step index.
MatrixF execute_plan(const Transcript& t, const AttackPlan& plan);

// The fixed plans used by the concrete attacks.
AttackPlan wang_plan();
AttackPlan kolee_plan();

// Key recovery for the four-pass protocol: three operator derivations.
MatrixF attack_wang(const Transcript& t);

// Key recovery for the conjugation protocol: a single derivation.
MatrixF attack_kolee(const Transcript& t);

// Message recovery for the vector protocol: two orbit bases and two right
// operators; the published difference collapses into one application.
VectorF attack_harley(const Transcript& t);

} // namespace lindecomp
