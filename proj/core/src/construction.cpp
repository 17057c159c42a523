#include "convexbasis/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cvb {

namespace {

void require_index(long i, long lo, long hi, const char* what) {
    if (i < lo || i > hi) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

bool strictly_increasing(const std::vector<ScaledInt>& v) {
    for (std::size_t t = 1; t < v.size(); ++t) {
        if (!(v[t - 1] < v[t])) return false;
    }
    return true;
}

}  // namespace

ScaledInt x_value(const Params& params, long i) {
    require_index(i, -2 * params.n, 2 * params.n, "x_value");
    const mpz_class iz(i);
    // D*i + (1000n + 1)*i^2  ==  (i + (alpha+gamma) i^2) * D
    return ScaledInt(mpz_class(params.D * iz + (params.alpha_scaled + 1) * iz * iz));
}

ScaledInt y_value(const Params& params, long j) {
    require_index(j, -2 * params.n, 2 * params.n, "y_value");
    const mpz_class jz(j);
    return ScaledInt(mpz_class(params.D * jz - params.alpha_scaled * jz * jz));
}

ScaledInt block_value(const Params& params, long k, long i) {
    const mpz_class kz(k), iz(i);
    // (k - alpha k^2 + gamma i^2 + 2 i k alpha) * D
    return ScaledInt(mpz_class(params.D * kz - params.alpha_scaled * kz * kz + iz * iz +
                               2 * params.alpha_scaled * kz * iz));
}

ScaledInt block_gap(const Params& params, long k, long i) {
    require_index(i, -params.n, 2 * params.n - 1, "block_gap");
    // (gamma (2i+1) + 2 k alpha) * D
    return ScaledInt(mpz_class(mpz_class(2 * i + 1) + 2 * params.alpha_scaled * k));
}

Basis build_basis(const Params& params) {
    Basis b;
    b.params = params;
    const long n = params.n;
    b.xs.reserve(static_cast<std::size_t>(4 * n + 1));
    b.ys.reserve(static_cast<std::size_t>(4 * n + 1));
    for (long i = -2 * n; i <= 2 * n; ++i) b.xs.push_back(x_value(params, i));
    for (long j = -2 * n; j <= 2 * n; ++j) b.ys.push_back(y_value(params, j));

    b.xs_strictly_increasing = strictly_increasing(b.xs);
    b.ys_strictly_increasing = strictly_increasing(b.ys);

    b.elements.reserve(b.xs.size() + b.ys.size());
    b.elements.insert(b.elements.end(), b.xs.begin(), b.xs.end());
    b.elements.insert(b.elements.end(), b.ys.begin(), b.ys.end());
    std::sort(b.elements.begin(), b.elements.end());
    b.elements.erase(std::unique(b.elements.begin(), b.elements.end()), b.elements.end());
    return b;
}

Block build_block(const Params& params, long k) {
    if (k <= 0 || k > params.n) {
        throw std::invalid_argument("build_block: k = " + std::to_string(k) +
                                    " outside (0, " + std::to_string(params.n) + "]");
    }
    const long n = params.n;
    Block block;
    block.k = k;
    block.entries.reserve(static_cast<std::size_t>(3 * n + 1));

    // Incremental generation: b_{i+1} = b_i + gap(k, i). The gap numerator
    // is (2i+1) + 2000nk, so each step is one small addition.
    ScaledInt value = block_value(params, k, -n);
    const mpz_class two_k_alpha = 2 * params.alpha_scaled * k;
    for (long i = -n; i <= 2 * n; ++i) {
        block.entries.push_back(BlockEntry{i, value, i, k - i});
        if (i < 2 * n) value = ScaledInt(mpz_class(value.num + mpz_class(2 * i + 1) + two_k_alpha));
    }
    return block;
}

}  // namespace cvb
