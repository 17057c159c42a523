#include "convexbasis/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "convexbasis/errors.hpp"

namespace cvb {

bool is_convex(std::span<const ScaledInt> sorted_values) {
    for (std::size_t t = 1; t < sorted_values.size(); ++t) {
        if (sorted_values[t] < sorted_values[t - 1]) {
            throw std::invalid_argument("is_convex: input is not sorted");
        }
    }
    if (sorted_values.size() <= 2) return true;
    mpz_class prev_gap = sorted_values[1].num - sorted_values[0].num;
    for (std::size_t t = 2; t < sorted_values.size(); ++t) {
        mpz_class gap = sorted_values[t].num - sorted_values[t - 1].num;
        if (gap <= prev_gap) return false;
        prev_gap = std::move(gap);
    }
    return true;
}

WitnessReport check_witnesses(const Chain& chain, const Basis& basis) {
    const Params& p = basis.params;
    const long range = 2 * p.n;
    for (std::size_t t = 0; t < chain.size(); ++t) {
        const long i = chain.witness_i[t];
        const long j = chain.witness_j[t];
        if (i < -range || i > range || j < -range || j > range) {
            return WitnessReport{false, t,
                                 "witness (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") outside [-2n, 2n] at element " + std::to_string(t)};
        }
        if (!(basis.x(i) + basis.y(j) == chain.values[t])) {
            return WitnessReport{false, t,
                                 "x(" + std::to_string(i) + ") + y(" + std::to_string(j) +
                                     ") != element " + std::to_string(t)};
        }
    }
    return WitnessReport{};
}

bool AuditReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const CheckResult& AuditReport::check(std::string_view name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) return c;
    }
    for (const CheckResult& c : info) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("AuditReport: no check named " + std::string(name));
}

namespace {

// Slack of lo <= value <= hi at scale D: distance to the nearer endpoint.
mpq_class interval_slack(const mpz_class& value, const mpz_class& lo, const mpz_class& hi,
                         const mpz_class& D) {
    mpz_class s = std::min(mpz_class(value - lo), mpz_class(hi - value));
    mpq_class q(s, D);
    q.canonicalize();
    return q;
}

mpq_class over_d(const mpz_class& num, const mpz_class& D) {
    mpq_class q(num, D);
    q.canonicalize();
    return q;
}

}  // namespace

AuditReport audit_bounds(const Params& params, long k) {
    const long n = params.n;
    const long kp = k + params.stride;

    // Both k and k+stride must lie in [ceil(theta*n), n].
    mpq_class lo_bound = params.theta * n;
    if (mpq_class(k) < lo_bound || kp > n) {
        throw PairOutOfRangeError("audit_bounds: pair (" + std::to_string(k) + ", " +
                                  std::to_string(kp) + ") outside [theta*n, n] for n = " +
                                  std::to_string(n));
    }

    AuditReport rep;
    rep.n = n;
    rep.k = k;
    rep.stride = params.stride;
    rep.theta = params.theta;
    rep.m = (n + 1) / 2 + 1;  // ceil(n/2) + 1

    const mpz_class& D = params.D;
    const mpz_class n3 = mpz_class(n) * n * n;

    Block bk = build_block(params, k);
    Block bkp = build_block(params, kp);

    // (1) b_{-n} in [k-3, k-2.9]
    {
        const mpz_class& val = bk.min_value().num;
        mpz_class lo = D * (k - 3);
        mpz_class hi = D * k - 2900 * n3;
        rep.checks.push_back({"lower_bound", lo <= val && val <= hi,
                              interval_slack(val, lo, hi, D)});
    }
    // (2) b_{2n} in [k+2.9, k+3.1]
    {
        const mpz_class& val = bk.max_value().num;
        mpz_class lo = D * k + 2900 * n3;
        mpz_class hi = D * k + 3100 * n3;
        rep.checks.push_back({"upper_bound", lo <= val && val <= hi,
                              interval_slack(val, lo, hi, D)});
    }
    // (3) every block value in [k-3-eps, k+3+eps]
    {
        mpz_class lo = D * (k - 3) - params.eps_scaled;
        mpz_class hi = D * (k + 3) + params.eps_scaled;
        const mpz_class* mn = &bk.entries.front().value.num;
        const mpz_class* mx = mn;
        for (const BlockEntry& e : bk.entries) {
            if (e.value.num < *mn) mn = &e.value.num;
            if (e.value.num > *mx) mx = &e.value.num;
        }
        mpz_class s = std::min(mpz_class(*mn - lo), mpz_class(hi - *mx));
        rep.checks.push_back({"containment", lo <= *mn && *mx <= hi, over_d(s, D)});
    }

    // delta = max gap of B_k, Delta = min gap of B_{k+stride}, both over the
    // actual consecutive-pair indices i in [-n, 2n-1]. Gaps are linear in i
    // with positive slope, so the extremes sit at the ends; the scan below
    // keeps the audit independent of that observation.
    mpz_class delta = block_gap(params, k, -n).num;
    for (long i = -n; i <= 2 * n - 1; ++i) {
        mpz_class g = block_gap(params, k, i).num;
        if (g > delta) delta = g;
    }
    mpz_class Delta = block_gap(params, kp, -n).num;
    for (long i = -n; i <= 2 * n - 1; ++i) {
        mpz_class g = block_gap(params, kp, i).num;
        if (g < Delta) Delta = g;
    }
    rep.delta_max = ScaledInt(delta);
    rep.delta_min = ScaledInt(Delta);

    // (4) delta < 2.1/n   <=>  delta_num < 2100 n^2 (since D = 1000 n^3)
    {
        mpz_class bound = 2100 * mpz_class(n) * n;
        rep.checks.push_back({"delta1", delta < bound, over_d(bound - delta, D)});
    }
    // (5) Delta - delta > 6/n^2  <=>  (Delta-delta)_num > 6000 n
    {
        mpz_class lhs = Delta - delta;
        mpz_class bound = 6000 * mpz_class(n);
        rep.checks.push_back({"delta2", lhs > bound, over_d(lhs - bound, D)});
    }

    // v: least element of B_k strictly greater than b^{(k+stride)}_{-n}.
    const mpz_class& next_min = bkp.min_value().num;
    rep.v_exists = false;
    {
        // Entries are strictly increasing; binary search the first > next_min.
        std::size_t lo = 0, hi = bk.entries.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (bk.entries[mid].value.num > next_min) hi = mid; else lo = mid + 1;
        }
        if (lo < bk.entries.size()) {
            rep.v_exists = true;
            rep.v_index = bk.entries[lo].i;
            rep.d = ScaledInt(mpz_class(bk.entries[lo].value.num - next_min));
        }
    }

    if (rep.v_exists) {
        // (6) 0 <= d <= delta
        {
            mpz_class s = std::min(rep.d.num, mpz_class(delta - rep.d.num));
            rep.checks.push_back({"start_dist", rep.d.num >= 0 && rep.d.num <= delta,
                                  over_d(s, D)});
        }
        // (7) b^{(k+stride)}_{-n+m} > b^{(k)}_{v+m}; evaluated via the
        // closed form, which extends past the truncation if v+m > 2n.
        const long v = rep.v_index;
        const long m = rep.m;
        {
            mpz_class lhs = block_value(params, kp, -n + m).num;
            mpz_class rhs = block_value(params, k, v + m).num;
            rep.checks.push_back({"window_overtake", lhs > rhs, over_d(lhs - rhs, D)});
        }
        // (8) b^{(k)}_{v+m} < k + 2.2
        {
            mpz_class val = block_value(params, k, v + m).num;
            mpz_class bound = D * k + 2200 * n3;
            rep.checks.push_back({"tail_bound", val < bound, over_d(bound - val, D)});
        }
        // (9) v + m < 2n
        {
            mpq_class s(2 * n - (v + m));
            rep.checks.push_back({"index_bound", v + m < 2 * n, s});
        }
    } else {
        // No element of B_k exceeds the next block's minimum: the whole
        // pigeonhole argument is vacuous. Report the (negative) gap between
        // the blocks as the slack of start_dist and fail the dependents.
        mpq_class gap_slack = over_d(mpz_class(bk.max_value().num - next_min), D);
        rep.checks.push_back({"start_dist", false, gap_slack});
        rep.checks.push_back({"window_overtake", false, gap_slack});
        rep.checks.push_back({"tail_bound", false, gap_slack});
        rep.checks.push_back({"index_bound", false, gap_slack});
    }

    // Informational: the paper's intermediate expressions, as written.
    {
        // delta < 3n*gamma + 2k*alpha (undercounts the top gap index for
        // n > 1; recorded, not asserted)
        mpz_class bound = 3 * mpz_class(n) + 2000 * mpz_class(n) * k;
        rep.info.push_back({"delta1_intermediate", delta < bound, over_d(bound - delta, D)});
    }
    {
        // Delta - delta > 8*alpha - 10n*gamma
        mpz_class lhs = Delta - delta;
        mpz_class bound = 8000 * mpz_class(n) - 10 * mpz_class(n);
        rep.info.push_back({"delta2_intermediate", lhs > bound, over_d(lhs - bound, D)});
    }
    {
        // alpha k^2 in [0.99, 1] as written: 990 n^3 <= 1000 n k^2 <= 1000 n^3
        mpz_class val = 1000 * mpz_class(n) * k * k;
        mpz_class lo = 990 * n3;
        mpz_class hi = 1000 * n3;
        rep.info.push_back({"alpha_k_squared", lo <= val && val <= hi,
                            interval_slack(val, lo, hi, D)});
    }

    return rep;
}

Measurement measure(const Chain& chain, const Basis& basis) {
    const Params& p = chain.params;
    Measurement m;
    m.size_a = static_cast<long long>(chain.size());
    m.size_b = static_cast<long long>(basis.elements.size());
    m.density = mpq_class(mpz_class(m.size_a), mpz_class(p.n) * p.n);
    m.density.canonicalize();

    for (long k : p.block_ks) {
        long long kept = 0;
        for (long o : chain.origin_k) {
            if (o == k) ++kept;
        }
        m.per_block_kept.emplace_back(k, kept);

        // Middle interval [k-1+eps, k+1-eps], scaled; values are sorted.
        mpz_class lo = p.D * (k - 1) + p.eps_scaled;
        mpz_class hi = p.D * (k + 1) - p.eps_scaled;
        auto first = std::lower_bound(chain.values.begin(), chain.values.end(), ScaledInt(lo));
        auto last = std::upper_bound(chain.values.begin(), chain.values.end(), ScaledInt(hi));
        m.middle_interval_counts.emplace_back(k, static_cast<long long>(last - first));
    }
    return m;
}

}  // namespace cvb
