#pragma once

#include <stdexcept>
#include <string>

namespace nslb {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyActionSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by tuning::optimal_gamma when the closed form leaves (0,1),
// i.e. the drift budget is too large for the horizon.
struct InvalidRegime : std::domain_error {
    using std::domain_error::domain_error;
};

struct OracleFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_number(line) {}
    std::size_t line_number;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nslb
