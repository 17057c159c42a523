#pragma once

#include <vector>

#include "convexbasis/params.hpp"
#include "convexbasis/scaled_int.hpp"

namespace cvb {

// The basis B = {x_i}_{-2n..2n} union {y_j}_{-2n..2n} with
//   x_i = i + (alpha+gamma) i^2,   y_j = j - alpha j^2.
struct Basis {
    Params params;
    std::vector<ScaledInt> xs;        // index i+2n holds x_i, i in [-2n, 2n]
    std::vector<ScaledInt> ys;        // index j+2n holds y_j
    std::vector<ScaledInt> elements;  // sorted, deduplicated union

    // Exact build-time monotonicity scan. Both hold iff n >= 4; for
    // n <= 3 the quadratic terms dominate and the sequences fold back.
    bool xs_strictly_increasing = false;
    bool ys_strictly_increasing = false;

    const ScaledInt& x(long i) const { return xs[static_cast<std::size_t>(i + 2 * params.n)]; }
    const ScaledInt& y(long j) const { return ys[static_cast<std::size_t>(j + 2 * params.n)]; }
};

struct BlockEntry {
    long i;
    ScaledInt value;
    // Sum witness: value == x_{witness_i} + y_{witness_j} with
    // witness_i == i and witness_j == k - i, both in [-2n, 2n].
    long witness_i;
    long witness_j;
};

// The truncated convex block B_k = {b_i}_{i=-n..2n},
//   b_i = (k - alpha k^2) + gamma i^2 + 2 i k alpha,
// every element of which is x_i + y_{k-i}, an element of B+B.
struct Block {
    long k = 0;
    std::vector<BlockEntry> entries;  // increasing in i and in value

    const ScaledInt& min_value() const { return entries.front().value; }
    const ScaledInt& max_value() const { return entries.back().value; }
};

// x_i at scale D: num = D*i + (1000n+1)*i^2. Requires i in [-2n, 2n].
ScaledInt x_value(const Params& params, long i);

// y_j at scale D: num = D*j - 1000n*j^2. Requires j in [-2n, 2n].
ScaledInt y_value(const Params& params, long j);

// Closed-form block element at scale D for ANY integer index i:
// num = D*k - 1000n*k^2 + i^2 + 2000n*k*i. The audit evaluates this beyond
// the truncation range; build_block restricts i to [-n, 2n].
ScaledInt block_value(const Params& params, long k, long i);

// Consecutive difference b_{i+1} - b_i at scale D: num = (2i+1) + 2000n*k.
// Requires i in [-n, 2n-1], the gap indices of the truncated block.
ScaledInt block_gap(const Params& params, long k, long i);

Basis build_basis(const Params& params);

// Requires 0 < k <= n (this keeps every witness pair inside [-2n, 2n]).
Block build_block(const Params& params, long k);

}  // namespace cvb
