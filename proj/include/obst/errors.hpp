#pragma once

#include <stdexcept>
#include <string>

namespace obst {

/// Malformed input: bad JSON shape, unparsable rational, out-of-range index.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold (non-simple embedding,
/// non-admissible sextuple, duplicate points, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bounded search ran out of attempts.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what, long long residual_count = -1)
        : std::runtime_error(what), residual(residual_count) {}

    /// For perturbation failures: degenerate sextuples still present.
    long long residual;
};

} // namespace obst
