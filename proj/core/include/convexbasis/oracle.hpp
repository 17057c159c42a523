#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "convexbasis/scaled_int.hpp"

namespace cvb {

// Brute-force ground truth for small n. Everything here materializes what
// the main pipeline deliberately avoids, so every operation carries an
// explicit budget.

inline constexpr long long kDefaultSumsetPairBudget = 12'500'000;  // ~|b| = 5000
inline constexpr std::size_t kDefaultLcsBudget = 12'000;

// All pairwise sums b_i + b_j (i <= j), sorted and deduplicated.
struct SortedSums {
    std::vector<ScaledInt> values;

    std::size_t size() const { return values.size(); }
};

// Requires |b|*(|b|+1)/2 <= max_pairs, else BudgetExceededError with the
// required budget. The input need not be sorted or deduplicated.
SortedSums sumset(std::span<const ScaledInt> b,
                  long long max_pairs = kDefaultSumsetPairBudget);

struct LcsResult {
    std::size_t length = 0;
    std::vector<std::size_t> witness;  // indices into s, one maximiser
};

// Longest subsequence with strictly increasing gaps, by DP over ending
// pairs (j, i) with a monotone predecessor pointer per j: O(|s|^2) time,
// O(|s|^2) bytes of 16-bit lengths. Requires |s| <= max_size, else
// BudgetExceededError. Lengths <= 2 are handled as base cases.
LcsResult lcs_dp(const SortedSums& s, std::size_t max_size = kDefaultLcsBudget);

// Exhaustive subset enumeration; validation oracle for lcs_dp.
// Requires |s| <= 20.
std::size_t lcs_exhaustive(const SortedSums& s);

}  // namespace cvb
