#pragma once

#include <stdexcept>
#include <string>

namespace centrefall {

/// Bad input: violated precondition, malformed file, unknown name.
/// CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Physically meaningful refusal: the requested quantity does not exist
/// for these inputs (imaginary falling time, drive below the falling
/// limit, degenerate normalization, unusable grid).
/// CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Drive is at or below the quantum falling limit. Carries the thresholds
/// so callers can report how far below the limit the request was.
class BelowFallingLimitError : public DomainError {
public:
    BelowFallingLimitError(const std::string& msg, double threshold_voltage,
                           double universal_critical_voltage)
        : DomainError(msg),
          threshold_voltage_V(threshold_voltage),
          universal_critical_voltage_V(universal_critical_voltage) {}

    double threshold_voltage_V;           // voltage making <H> = 0 for the used trial exponent
    double universal_critical_voltage_V;  // voltage at the universal minimum coupling
};

/// Grid cannot resolve the requested state. Carries a usable suggestion.
class GridError : public ValidationError {
public:
    GridError(const std::string& msg, std::size_t suggested_n, double suggested_dr)
        : ValidationError(msg), suggested_n(suggested_n), suggested_dr(suggested_dr) {}

    std::size_t suggested_n;
    double suggested_dr;
};

}  // namespace centrefall
