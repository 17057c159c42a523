#pragma once

#include <span>
#include <utility>
#include <vector>

#include "convexbasis/scaled_int.hpp"

namespace cvb {

// Multiplicity histogram of positive pairwise differences of a set:
// r(x) = #{(a1, a2) : a1 - a2 = x, x > 0}. Report-only statistics for the
// popular-difference behaviour of assembled chains.
struct DiffStats {
    // (difference, multiplicity), increasing in difference.
    std::vector<std::pair<ScaledInt, long long>> multiplicities;
    long long threshold = 0;
    long long popular_count = 0;  // #{x : r(x) >= threshold}
    long long pair_count = 0;     // sum of all multiplicities

    long long multiplicity_of(const ScaledInt& x) const;
};

// Sort-and-count over all generated pairs, guarded by an explicit pair
// budget: requires |a|*(|a|-1)/2 <= max_pairs, else BudgetExceededError
// carrying the required budget. Input must be sorted ascending.
DiffStats diff_popularity(std::span<const ScaledInt> sorted_values,
                          long long threshold,
                          long long max_pairs);

}  // namespace cvb
