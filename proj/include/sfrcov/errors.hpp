#pragma once

#include <stdexcept>
#include <string>

namespace sfrcov {

/// Bad configuration document or parameter values. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid configuration that an operation cannot evaluate
/// (e.g. unequal path-loss exponents on the analytic path). Exit code 2.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values or non-convergence during evaluation. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sfrcov
