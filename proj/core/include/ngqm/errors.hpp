#pragma once

#include <stdexcept>
#include <string>

namespace ngqm {

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonpositiveMass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonpositiveWavenumber : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The linear-dispersion well (j = 1) admits no standing solutions, so bound
// state queries are rejected rather than answered with zeros.
struct NoBoundStates : std::domain_error {
    using std::domain_error::domain_error;
};

// Closed forms exist only for j in {2,3,4}; higher orders have no printed
// solution family to evaluate.
struct UnsupportedGeometry : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnnormalizedState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedPower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepUnderflow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ngqm
