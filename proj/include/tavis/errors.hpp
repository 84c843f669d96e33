#pragma once

#include <stdexcept>
#include <string>

namespace tavis {

// Precondition violated by a caller (negative time, sector index out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Poisson mass above n_max exceeds the configured tail tolerance.
struct TruncationTooTight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigensolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Observable series is too short for the requested feature windows.
struct InsufficientSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tavis
