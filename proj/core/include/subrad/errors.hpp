#pragma once

#include <stdexcept>
#include <string>

namespace subrad {

/// Malformed or rejected run configuration (unknown key, missing field, bad value).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested Hilbert-space dimension exceeds the configured cap.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical diagnostic failure (trace drift, negativity) that survived step-size reduction.
struct NumericsError : std::runtime_error {
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subrad
