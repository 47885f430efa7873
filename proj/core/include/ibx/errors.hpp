#pragma once

#include <stdexcept>
#include <string>

namespace ibx {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Invalid configuration or inconsistent inputs (dimension mismatch, bad
// basis spec, unknown config key, ...).
struct ConfigError : Error {
    using Error::Error;
};

// A numerical procedure failed to converge or produced a degenerate result.
struct NumericalError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ibx
