#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convexbasis/construction.hpp"
#include "convexbasis/splice.hpp"

namespace cvb {

// True iff every consecutive gap is strictly smaller than the next.
// Length <= 2 is vacuously convex. The input must be sorted
// (non-decreasing); unsorted input throws std::invalid_argument.
bool is_convex(std::span<const ScaledInt> sorted_values);

struct WitnessReport {
    bool pass = true;
    std::size_t first_bad = 0;  // index of the first failing element
    std::string message;
};

// Recomputes x_{i} + y_{j} for every element's witness (i, j) and compares
// exactly; also range-checks i, j in [-2n, 2n]. O(|A|), no sumset
// materialization. Empty chain passes.
WitnessReport check_witnesses(const Chain& chain, const Basis& basis);

// One audited inequality: exact pass/fail plus the exact rational margin
// (negative when violated). For two-sided interval checks the slack is the
// distance to the nearer endpoint.
struct CheckResult {
    std::string name;
    bool pass = false;
    mpq_class slack;
};

// The paper-mode inequality ledger for the merge pair (k, k+stride).
struct AuditReport {
    long n = 0;
    long k = 0;
    long stride = 0;
    mpq_class theta;

    // The nine asserted checks, in ledger order: lower_bound, upper_bound,
    // containment, delta1, delta2, start_dist, window_overtake, tail_bound,
    // index_bound.
    std::vector<CheckResult> checks;

    // Informational only (never affects all_pass): the paper's intermediate
    // expressions evaluated as written.
    std::vector<CheckResult> info;

    // The quantities the ledger is built from, at scale D.
    ScaledInt delta_max;   // max consecutive gap of B_k      (delta)
    ScaledInt delta_min;   // min consecutive gap of B_{k+s}  (Delta)
    long v_index = 0;      // paper's v: least i with b^{(k)}_i > b^{(k+s)}_{-n}
    bool v_exists = false;
    ScaledInt d;           // b^{(k)}_v - b^{(k+s)}_{-n}
    long m = 0;            // ceil(n/2) + 1

    bool all_pass() const;
    const CheckResult& check(std::string_view name) const;
};

// Evaluates the nine inequalities exactly for the pair (k, k+stride).
// All nine are evaluated even after a failure; the slack profile is the
// scientific output. Throws PairOutOfRangeError unless
// ceil(theta*n) <= k and k+stride <= n.
AuditReport audit_bounds(const Params& params, long k);

// Exact sizes and density of an assembled chain.
struct Measurement {
    long long size_a = 0;
    long long size_b = 0;
    mpq_class density;  // |A| / n^2

    // Per block k: how many chain elements originate from B_k.
    std::vector<std::pair<long, long long>> per_block_kept;

    // Per block k: chain elements inside the middle interval
    // [k-1+eps, k+1-eps] (endpoints included).
    std::vector<std::pair<long, long long>> middle_interval_counts;
};

Measurement measure(const Chain& chain, const Basis& basis);

}  // namespace cvb
