#pragma once

#include <stdexcept>
#include <string>

namespace dynalg {

// Thrown when two values that must share a spatial dimension do not.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed piecewise-polynomial input (overlapping pieces, bad interval).
struct InvalidPiecewise : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A loop construction was requested for densities whose first two moments
// differ; the resulting path would not return to zero.
struct MomentMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Loop path fails its continuity or compact-support requirements.
struct InvalidLoop : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A symbolic operation only defined for potential-free functionals was
// handed a functional with potential terms.
struct NotLinearSector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A path does not cover the support of the functional being evaluated.
struct DomainTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Wavefunction amplitude at the periodic boundary exceeded the guard
// threshold; results would be contaminated by wrap-around.
struct TailOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Propagation window does not contain the support of the functional.
struct SupportNotCovered : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Causal factorization requested with supports in the wrong temporal order.
struct OrderingViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad scenario / CLI / file input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dynalg
