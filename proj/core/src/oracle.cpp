#include "convexbasis/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "convexbasis/errors.hpp"

namespace cvb {

SortedSums sumset(std::span<const ScaledInt> b, long long max_pairs) {
    const long long count = static_cast<long long>(b.size());
    const long long required = count * (count + 1) / 2;
    if (required > max_pairs) {
        throw BudgetExceededError(required, max_pairs,
                                  "sumset: " + std::to_string(required) +
                                      " pairs exceed budget " + std::to_string(max_pairs));
    }

    SortedSums out;
    out.values.reserve(static_cast<std::size_t>(required));
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
            out.values.push_back(b[i] + b[j]);
        }
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

namespace {

using int128 = __int128;

// Checked narrowing: the DP runs on native integers. Anything feeding the
// oracle sits far below 2^126 (the budget caps |s|, and pipeline values are
// ~1000*n^4), so a failure here means the caller bypassed the budget.
int128 to_int128(const mpz_class& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) {
        throw std::overflow_error("lcs_dp: value exceeds 126 bits");
    }
    mpz_class abs_v = abs(v);
    mpz_class hi_z = abs_v >> 64;
    mpz_class lo_z = abs_v - (hi_z << 64);
    int128 r = (static_cast<int128>(hi_z.get_ui()) << 64) +
               static_cast<int128>(lo_z.get_ui());
    return sgn(v) < 0 ? -r : r;
}

}  // namespace

LcsResult lcs_dp(const SortedSums& s, std::size_t max_size) {
    const std::size_t L = s.values.size();
    if (L > max_size) {
        throw BudgetExceededError(static_cast<long long>(L), static_cast<long long>(max_size),
                                  "lcs_dp: input size " + std::to_string(L) +
                                      " exceeds budget " + std::to_string(max_size));
    }
    for (std::size_t t = 1; t < L; ++t) {
        if (!(s.values[t - 1] < s.values[t])) {
            throw std::invalid_argument("lcs_dp: input must be strictly increasing");
        }
    }

    LcsResult res;
    if (L <= 2) {
        res.length = L;
        for (std::size_t t = 0; t < L; ++t) res.witness.push_back(t);
        return res;
    }

    std::vector<int128> v(L);
    for (std::size_t t = 0; t < L; ++t) v[t] = to_int128(s.values[t].num);

    // dp[j*L + i] = longest convex subsequence ending with (s_j, s_i), j < i.
    // Transition: 1 + max dp[p*L + j] over p < j with s_p > 2 s_j - s_i.
    // For fixed j the threshold decreases as i grows, so a pointer moving
    // down from j-1 visits each p once: O(L^2) total.
    std::vector<std::uint16_t> dp(L * L, 0);
    std::size_t best_len = 2;
    std::size_t best_j = 0, best_i = 1;
    for (std::size_t j = 0; j < L; ++j) {
        std::size_t p = j;  // predecessor pointer (p-1 is next candidate)
        std::uint16_t run_max = 1;
        for (std::size_t i = j + 1; i < L; ++i) {
            const int128 threshold = 2 * v[j] - v[i];
            while (p > 0 && v[p - 1] > threshold) {
                --p;
                run_max = std::max(run_max, dp[p * L + j]);
            }
            const std::uint16_t len = static_cast<std::uint16_t>(run_max + 1);
            dp[j * L + i] = len;
            if (len > best_len) {
                best_len = len;
                best_j = j;
                best_i = i;
            }
        }
    }

    // Reconstruct one maximiser by walking predecessors: at (j, i) with
    // length l > 2 there is some p < j with s_p > 2 s_j - s_i and
    // dp[p][j] == l - 1; take the largest such p for determinism.
    std::vector<std::size_t> rev{best_i, best_j};
    std::size_t j = best_j, i = best_i;
    std::uint16_t len = dp[j * L + i];
    while (len > 2) {
        const int128 threshold = 2 * v[j] - v[i];
        std::size_t p = j;
        bool found = false;
        while (p > 0) {
            --p;
            if (v[p] > threshold && dp[p * L + j] == len - 1) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("lcs_dp: broken predecessor chain");
        rev.push_back(p);
        i = j;
        j = p;
        len = static_cast<std::uint16_t>(len - 1);
    }

    res.length = best_len;
    res.witness.assign(rev.rbegin(), rev.rend());
    return res;
}

std::size_t lcs_exhaustive(const SortedSums& s) {
    const std::size_t L = s.values.size();
    if (L > 20) {
        throw std::invalid_argument("lcs_exhaustive: size " + std::to_string(L) + " > 20");
    }
    if (L <= 2) return L;

    std::vector<int128> v(L);
    for (std::size_t t = 0; t < L; ++t) v[t] = to_int128(s.values[t].num);

    std::size_t best = 2;
    const std::uint32_t full = static_cast<std::uint32_t>(1u << L);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::size_t len = 0;
        int128 prev = 0, prev_gap = -1;
        bool ok = true;
        for (std::size_t t = 0; t < L && ok; ++t) {
            if (!(mask >> t & 1u)) continue;
            if (len >= 1) {
                const int128 gap = v[t] - prev;
                if (len >= 2 && gap <= prev_gap) ok = false;
                prev_gap = gap;
            }
            prev = v[t];
            ++len;
        }
        if (ok && len > best) best = len;
    }
    return best;
}

}  // namespace cvb
