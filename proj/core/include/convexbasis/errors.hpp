#pragma once

#include <stdexcept>
#include <string>

namespace cvb {

// No block index (multiple of stride) falls in [ceil(theta*n), n].
struct NoBlocksError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No gap of the earlier sequence nests inside a gap of the later one.
// Raised by assemble with the failing block pair attached; signals
// parameters outside the construction's feasible regime.
struct NoNestingError : std::runtime_error {
    long k_from;
    long k_to;
    NoNestingError(long from, long to, const std::string& what)
        : std::runtime_error(what), k_from(from), k_to(to) {}
};

// A SplicePoint does not satisfy the nesting invariant against X, Y.
struct NestingViolatedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The exact convexity re-check of a splice output failed. Unreachable if
// inputs satisfy the documented preconditions; treated as an internal fault.
struct ConvexityBrokenError : std::logic_error {
    using std::logic_error::logic_error;
};

// audit_bounds called with (k, k+stride) not inside [ceil(theta*n), n].
struct PairOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An oracle/statistics operation would exceed its explicit budget.
struct BudgetExceededError : std::runtime_error {
    long long required;
    long long budget;
    BudgetExceededError(long long required_, long long budget_, const std::string& what)
        : std::runtime_error(what), required(required_), budget(budget_) {}
};

}  // namespace cvb
