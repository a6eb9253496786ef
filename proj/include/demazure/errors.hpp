#pragma once

#include <stdexcept>
#include <string>

namespace demazure {

// Enumeration/search exceeded its configured budget (CLI exit code 3).
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Compositions with different sorted shapes cannot be compared.
struct IncomparableShapes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A signed polynomial has no lattice-cloud interpretation.
struct NegativeCoefficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace demazure
