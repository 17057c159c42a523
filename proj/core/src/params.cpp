#include "convexbasis/params.hpp"

#include <stdexcept>
#include <string>

namespace cvb {

mpz_class Params::scaled_fraction(long p, long q) const {
    mpz_class num = p * D;
    mpz_class r = num % q;
    if (r != 0) {
        throw std::invalid_argument("scaled_fraction: " + std::to_string(q) +
                                    " does not divide " + std::to_string(p) + "*D");
    }
    return num / q;
}

Params make_params(long n, const mpq_class& theta, long stride) {
    if (n < 1) throw std::invalid_argument("make_params: n must be >= 1");
    if (theta <= 0 || theta > 1) {
        throw std::invalid_argument("make_params: theta must be in (0, 1]");
    }
    if (stride < 1) throw std::invalid_argument("make_params: stride must be >= 1");

    Params p;
    p.n = n;
    p.theta = theta;
    p.theta.canonicalize();
    p.stride = stride;

    const mpz_class nz(n);
    p.D = 1000 * nz * nz * nz;
    p.alpha_scaled = 1000 * nz;    // D / n^2
    p.gamma_scaled = 1;            // D / (1000 n^3)
    p.eps_scaled = 100 * nz * nz * nz;  // D / 10

    // k_min = ceil(theta * n), exact.
    mpq_class tn = p.theta * n;
    mpz_class kmin_z;
    mpz_cdiv_q(kmin_z.get_mpz_t(), tn.get_num_mpz_t(), tn.get_den_mpz_t());
    long kmin = static_cast<long>(kmin_z.get_si());
    if (kmin < 1) kmin = 1;

    long k = ((kmin + stride - 1) / stride) * stride;
    for (; k <= n; k += stride) p.block_ks.push_back(k);

    p.theta_overlap_ok = p.theta * 6 > stride;
    return p;
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty number");
    mpz_class v;
    if (v.set_str(std::string(s), 10) != 0) {
        throw std::invalid_argument("parse_rational: bad integer '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.find_first_of("+-.") != std::string_view::npos || frac.empty()) {
            throw std::invalid_argument("parse_rational: bad decimal '" + std::string(text) + "'");
        }
        bool negative = !whole.empty() && whole.front() == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole = negative ? "-0" : "0";
        mpz_class w = parse_integer(whole);
        mpz_class f = parse_integer(frac);
        mpz_class den = 1;
        for (std::size_t t = 0; t < frac.size(); ++t) den *= 10;
        mpz_class num = w * den + (negative ? -f : f);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(parse_integer(text));
}

}  // namespace cvb
