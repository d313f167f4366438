#pragma once

#include <stdexcept>
#include <string>

namespace gem {

// Raised for schema violations, invalid parameter combinations and
// infeasible protocol requests. CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised for numerical failures: stability bound violations, singular
// denominators, non-converging refinement. CLI maps this to exit code 2.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gem
