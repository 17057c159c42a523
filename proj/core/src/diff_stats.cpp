#include "convexbasis/diff_stats.hpp"

#include <algorithm>
#include <stdexcept>

#include "convexbasis/errors.hpp"

namespace cvb {

long long DiffStats::multiplicity_of(const ScaledInt& x) const {
    auto it = std::lower_bound(multiplicities.begin(), multiplicities.end(), x,
                               [](const auto& entry, const ScaledInt& key) {
                                   return entry.first < key;
                               });
    if (it != multiplicities.end() && it->first == x) return it->second;
    return 0;
}

DiffStats diff_popularity(std::span<const ScaledInt> sorted_values,
                          long long threshold,
                          long long max_pairs) {
    if (threshold < 1) throw std::invalid_argument("diff_popularity: threshold must be >= 1");
    for (std::size_t t = 1; t < sorted_values.size(); ++t) {
        if (sorted_values[t] < sorted_values[t - 1]) {
            throw std::invalid_argument("diff_popularity: input is not sorted");
        }
    }

    const long long count = static_cast<long long>(sorted_values.size());
    const long long required = count * (count - 1) / 2;
    if (required > max_pairs) {
        throw BudgetExceededError(required, max_pairs,
                                  "diff_popularity: " + std::to_string(required) +
                                      " pairs exceed budget " + std::to_string(max_pairs));
    }

    std::vector<mpz_class> diffs;
    diffs.reserve(static_cast<std::size_t>(required));
    for (std::size_t a = 0; a < sorted_values.size(); ++a) {
        for (std::size_t b = a + 1; b < sorted_values.size(); ++b) {
            mpz_class d = sorted_values[b].num - sorted_values[a].num;
            if (d > 0) diffs.push_back(std::move(d));  // equal values give x = 0, excluded
        }
    }
    std::sort(diffs.begin(), diffs.end());

    DiffStats stats;
    stats.threshold = threshold;
    for (std::size_t t = 0; t < diffs.size();) {
        std::size_t r = t;
        while (r < diffs.size() && diffs[r] == diffs[t]) ++r;
        const long long mult = static_cast<long long>(r - t);
        stats.multiplicities.emplace_back(ScaledInt(diffs[t]), mult);
        stats.pair_count += mult;
        if (mult >= threshold) ++stats.popular_count;
        t = r;
    }
    return stats;
}

}  // namespace cvb
