#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Input file could not be parsed. line == 0 means the error is not tied to a
// specific line (e.g. JSON structure problems).
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

// A computation exceeded its configured size cap or time/space budget.
// Computations never return partial results; they throw this instead.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bei
