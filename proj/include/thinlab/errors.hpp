#pragma once

#include <stdexcept>

namespace thinlab {

struct NegativeWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroMass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A thinning fraction outside [0,1], or a kernel argument outside its domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// alpha = 0 (or an endpoint) passed to a functional that carries 1/alpha factors.
struct DegenerateAlpha : std::domain_error {
    using std::domain_error::domain_error;
};

// relative_entropy(f, g) with f putting mass where g has none.
struct SupportViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// A verifier called outside the regime where its inequality is established
// (non-ULC input, alpha + beta > 1, ...).
struct PreconditionFailed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad RunConfig or malformed CLI input; maps to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace thinlab
