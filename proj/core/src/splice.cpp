#include "convexbasis/splice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "convexbasis/errors.hpp"
#include "convexbasis/verify.hpp"

namespace cvb {

ConvexSeq ConvexSeq::from_values(std::vector<ScaledInt> v) {
    if (!is_convex(v)) {
        throw std::invalid_argument("ConvexSeq: gaps are not strictly increasing");
    }
    ConvexSeq s;
    s.values = std::move(v);
    return s;
}

std::optional<SplicePoint> find_nesting(std::span<const ScaledInt> xs,
                                        std::span<const ScaledInt> ys) {
    if (xs.size() < 2 || ys.size() < 2) return std::nullopt;
    // For fixed u the smallest candidate v is the least one with
    // y_{v+1} >= x_{u+1}; that cutoff is nondecreasing in u, so a single
    // monotone pointer covers the scan.
    std::size_t v = 0;
    for (std::size_t u = 0; u + 1 < xs.size(); ++u) {
        while (v + 1 < ys.size() && ys[v + 1] < xs[u + 1]) ++v;
        if (v + 1 >= ys.size()) return std::nullopt;  // Y ends below x_{u+1}, and x only grows
        if (ys[v] <= xs[u]) return SplicePoint{u, v};
    }
    return std::nullopt;
}

namespace {

void require_nesting(std::span<const ScaledInt> xs, std::span<const ScaledInt> ys,
                     SplicePoint p) {
    if (p.u + 1 >= xs.size() || p.v + 1 >= ys.size()) {
        throw NestingViolatedError("splice point indices out of range");
    }
    if (!(ys[p.v] <= xs[p.u] && xs[p.u + 1] <= ys[p.v + 1])) {
        throw NestingViolatedError("gap [x_u, x_u+1] is not nested in [y_v, y_v+1]");
    }
}

}  // namespace

ConvexSeq splice_at(const ConvexSeq& X, const ConvexSeq& Y, SplicePoint p) {
    require_nesting(X.values, Y.values, p);
    ConvexSeq out;
    out.values.reserve(p.u + 1 + (Y.values.size() - (p.v + 1)));
    out.values.insert(out.values.end(), X.values.begin(),
                      X.values.begin() + static_cast<std::ptrdiff_t>(p.u + 1));
    out.values.insert(out.values.end(),
                      Y.values.begin() + static_cast<std::ptrdiff_t>(p.v + 1),
                      Y.values.end());
    if (!is_convex(out.values)) {
        throw ConvexityBrokenError("splice output failed the exact convexity re-check");
    }
    return out;
}

Chain assemble(const Params& params) {
    if (params.block_ks.empty()) {
        throw NoBlocksError("assemble: no multiple of stride " + std::to_string(params.stride) +
                            " in [ceil(theta*n), n] for n = " + std::to_string(params.n));
    }

    Chain chain;
    chain.params = params;

    const long k0 = params.block_ks.front();
    Block first = build_block(params, k0);
    chain.values.reserve(first.entries.size());
    for (const BlockEntry& e : first.entries) {
        chain.values.push_back(e.value);
        chain.witness_i.push_back(e.witness_i);
        chain.witness_j.push_back(e.witness_j);
        chain.origin_k.push_back(k0);
    }

    long prev_k = k0;
    for (std::size_t t = 1; t < params.block_ks.size(); ++t) {
        const long k = params.block_ks[t];
        Block next = build_block(params, k);

        std::vector<ScaledInt> yvals;
        yvals.reserve(next.entries.size());
        for (const BlockEntry& e : next.entries) yvals.push_back(e.value);

        // Only the chain tail at or above the new block's minimum can host
        // a nesting (every nesting has x_u >= y_0), so the scan starts at
        // the paper's window rather than at the head of the chain.
        const ScaledInt& ymin = yvals.front();
        const auto start_it = std::lower_bound(chain.values.begin(), chain.values.end(), ymin);
        const std::size_t start = static_cast<std::size_t>(start_it - chain.values.begin());

        auto found = find_nesting(
            std::span<const ScaledInt>(chain.values).subspan(start), yvals);
        if (!found) {
            std::string msg = "assemble: no nesting between blocks " + std::to_string(prev_k) +
                              " and " + std::to_string(k);
            if (!params.theta_overlap_ok) {
                msg += " (theta <= stride/6: consecutive block ranges need not overlap)";
            }
            throw NoNestingError(prev_k, k, msg);
        }
        const std::size_t u = start + found->u;
        const std::size_t v = found->v;

        // Start distance d: least chain element strictly above the new
        // block minimum, minus that minimum.
        const auto above_it = std::upper_bound(chain.values.begin(), chain.values.end(), ymin);
        ScaledInt d = above_it != chain.values.end() ? (*above_it - ymin) : ScaledInt(0);

        chain.values.resize(u + 1);
        chain.witness_i.resize(u + 1);
        chain.witness_j.resize(u + 1);
        chain.origin_k.resize(u + 1);
        for (std::size_t s = v + 1; s < next.entries.size(); ++s) {
            const BlockEntry& e = next.entries[s];
            chain.values.push_back(e.value);
            chain.witness_i.push_back(e.witness_i);
            chain.witness_j.push_back(e.witness_j);
            chain.origin_k.push_back(k);
        }

        if (!is_convex(chain.values)) {
            throw ConvexityBrokenError("assemble: merged chain failed the exact convexity re-check");
        }
        chain.splice_log.push_back(SpliceRecord{prev_k, k, u, v, d});
        prev_k = k;
    }
    return chain;
}

}  // namespace cvb
