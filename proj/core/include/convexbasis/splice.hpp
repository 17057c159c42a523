#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "convexbasis/construction.hpp"
#include "convexbasis/params.hpp"
#include "convexbasis/scaled_int.hpp"

namespace cvb {

// A finite sequence with strictly increasing consecutive gaps. Length <= 2
// is vacuously convex.
struct ConvexSeq {
    std::vector<ScaledInt> values;

    // Validating factory; throws std::invalid_argument if v is not convex.
    static ConvexSeq from_values(std::vector<ScaledInt> v);

    std::size_t size() const { return values.size(); }
};

// Indices of a nested gap pair: [x_u, x_{u+1}] inside [y_v, y_{v+1}],
// i.e. y_v <= x_u and x_{u+1} <= y_{v+1}. Boundary equality is allowed;
// the spliced output is strictly convex either way.
struct SplicePoint {
    std::size_t u = 0;
    std::size_t v = 0;
};

// One chain merge: blocks k_from -> k_to glued at (u, v) in chain/block
// coordinates; d is the start distance b^{(k_from-chain)}_v' - min(B_{k_to})
// taken at the least chain element exceeding the new block's minimum.
struct SpliceRecord {
    long k_from = 0;
    long k_to = 0;
    std::size_t u = 0;
    std::size_t v = 0;
    ScaledInt d;
};

// The assembled convex sequence A with per-element sum witnesses and the
// block each element came from.
struct Chain {
    Params params;
    std::vector<ScaledInt> values;
    std::vector<long> witness_i;
    std::vector<long> witness_j;
    std::vector<long> origin_k;
    std::vector<SpliceRecord> splice_log;

    std::size_t size() const { return values.size(); }
};

// Smallest u (ties: smallest v) with [x_u, x_{u+1}] nested in [y_v, y_{v+1}];
// linear two-pointer scan. nullopt when no nesting exists.
std::optional<SplicePoint> find_nesting(std::span<const ScaledInt> xs,
                                        std::span<const ScaledInt> ys);

// Prefix of X through u concatenated with the suffix of Y from v+1.
// Throws NestingViolatedError if p fails its invariant against X, Y, and
// ConvexityBrokenError if the exact output re-check fails (unreachable
// for convex inputs; defense for the internal-fault exit path).
ConvexSeq splice_at(const ConvexSeq& X, const ConvexSeq& Y, SplicePoint p);

// Builds every block B_k for k in params.block_ks in increasing order and
// glues them left to right, recording one SpliceRecord per merge.
// Throws NoBlocksError / NoNestingError.
Chain assemble(const Params& params);

}  // namespace cvb
