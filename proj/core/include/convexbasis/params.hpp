#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace cvb {

// Run parameters plus the derived exact scale.
//
// Every sequence value in the pipeline is stored as an integer numerator at
// the common denominator D = 1000*n^3. The three constants
//     alpha = 1/n^2,  gamma = 1/(1000*n^3),  eps = 1/10
// all clear to integers at D:
//     alpha_scaled = 1000*n,  gamma_scaled = 1,  eps_scaled = 100*n^3,
// which makes every comparison and every audited inequality an exact
// integer test.
struct Params {
    long n = 0;
    mpq_class theta;  // lower end of the block range, as a fraction of n
    long stride = 0;  // block spacing (k ranges over multiples of stride)

    mpz_class D;
    mpz_class alpha_scaled;
    mpz_class gamma_scaled;
    mpz_class eps_scaled;

    // Multiples of stride in [ceil(theta*n), n], increasing.
    std::vector<long> block_ks;

    // theta > stride/6, the value-range overlap precheck for consecutive
    // blocks. A warning flag, not a hard error: the exact nesting search in
    // assemble is the ground truth.
    bool theta_overlap_ok = false;

    bool has_blocks() const { return !block_ks.empty(); }
    bool has_audit_pair() const { return block_ks.size() >= 2; }

    // Exact p/q at scale D, i.e. p*D/q. Requires q | p*D (true for every
    // decimal constant in the audit since 10 | D); throws otherwise.
    mpz_class scaled_fraction(long p, long q) const;
};

// Validates n >= 1, 0 < theta <= 1, stride >= 1 and derives the scale.
// Infeasibility (no block index, theta <= stride/6) is recorded in flags,
// never an error here.
Params make_params(long n, const mpq_class& theta, long stride);

// Exact rational from "p/q" or a decimal string ("0.999" -> 999/1000).
// No binary floating point is involved. Throws std::invalid_argument on
// malformed input or zero denominator.
mpq_class parse_rational(std::string_view text);

}  // namespace cvb
