#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lindecomp {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

// A decomposition target fell outside the constructed subspace. During an
// attack this signals a transcript that does not match the claimed protocol.
struct NotInSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its retry budget.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FixtureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ScheduleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PlanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Attack aborted; carries the index of the failing plan step.
struct AttackError : std::runtime_error {
    AttackError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_index(step) {}
    std::size_t step_index;
};

// Malformed input file or JSON document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lindecomp
