// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace qzc {

// An input failed a precondition; the message names the offending field.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value handed to an operation violates a type invariant (norm, trace, ...).
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed: no convergence, instability, or a
// self-check that did not reach its tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct instability_error : numerical_error {
    using numerical_error::numerical_error;
};

struct tolerance_failure : numerical_error {
    using numerical_error::numerical_error;
};

// Measurement interval landed exactly on a node of the survival amplitude,
// so the effective decay rate is undefined.
struct singular_rate_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace qzc
