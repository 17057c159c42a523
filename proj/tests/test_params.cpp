#include <doctest.h>

#include <random>
#include <stdexcept>

#include "convexbasis/params.hpp"
#include "convexbasis/scaled_int.hpp"

using namespace cvb;

TEST_CASE("make_params derives the exact scale") {
    // n=2: clear denominators of alpha=1/4, gamma=1/8000, eps=1/10 at D=1000n^3
    Params p = make_params(2, mpq_class(999, 1000), 4);
    CHECK(p.D == 8000);
    CHECK(p.alpha_scaled == 2000);
    CHECK(p.gamma_scaled == 1);
    CHECK(p.eps_scaled == 800);

    Params q = make_params(1, mpq_class(1), 4);
    CHECK(q.D == 1000);
    CHECK(q.alpha_scaled == 1000);
    CHECK(q.gamma_scaled == 1);
    CHECK(q.eps_scaled == 100);
}

TEST_CASE("make_params rejects bad arguments") {
    CHECK_THROWS_AS(make_params(0, mpq_class(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(make_params(-3, mpq_class(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(make_params(4, mpq_class(0), 4), std::invalid_argument);
    CHECK_THROWS_AS(make_params(4, mpq_class(-1, 2), 4), std::invalid_argument);
    CHECK_THROWS_AS(make_params(4, mpq_class(11, 10), 4), std::invalid_argument);
    CHECK_THROWS_AS(make_params(4, mpq_class(1), 0), std::invalid_argument);
}

TEST_CASE("scale identities hold for a sweep of n") {
    for (long n = 1; n <= 200; ++n) {
        Params p = make_params(n, mpq_class(999, 1000), 4);
        mpz_class nz(n);
        CHECK(p.alpha_scaled * nz * nz == p.D);
        CHECK(p.gamma_scaled * 1000 * nz * nz * nz == p.D);
        CHECK(p.eps_scaled * 10 == p.D);
    }
}

TEST_CASE("block index ranges and feasibility flags") {
    // paper mode
    Params p = make_params(4000, mpq_class(999, 1000), 4);
    CHECK(p.block_ks == std::vector<long>{3996, 4000});
    CHECK(p.theta_overlap_ok);
    CHECK(p.has_audit_pair());

    // no multiple of 4 in [ceil(1.998), 2] = [2, 2]
    Params q = make_params(2, mpq_class(999, 1000), 4);
    CHECK(q.block_ks.empty());
    CHECK_FALSE(q.has_blocks());

    // theta <= stride/6 flips the overlap flag but is not an error
    Params r = make_params(64, mpq_class(1, 2), 4);
    CHECK_FALSE(r.theta_overlap_ok);
    CHECK(r.block_ks.size() == 9);  // 32, 36, ..., 64

    Params s = make_params(64, mpq_class(7, 8), 4);
    CHECK(s.theta_overlap_ok);
    CHECK(s.block_ks == std::vector<long>{56, 60, 64});
}

TEST_CASE("scaled_fraction clears decimal constants exactly") {
    Params p = make_params(7, mpq_class(999, 1000), 4);
    // 2.1 * D = 21 * D / 10
    CHECK(p.scaled_fraction(21, 10) * 10 == 21 * p.D);
    CHECK(p.scaled_fraction(29, 10) * 10 == 29 * p.D);
    CHECK_THROWS_AS(p.scaled_fraction(1, 7000000), std::invalid_argument);
}

TEST_CASE("cmp is an exact total order consistent with rational value order") {
    // x1 vs y1 at n=2 (numerators from the construction examples)
    CHECK(cmp(ScaledInt(10001L), ScaledInt(6000L)) == std::strong_ordering::greater);
    CHECK(cmp(ScaledInt(5L), ScaledInt(7L)) == std::strong_ordering::less);
    CHECK(cmp(ScaledInt(-3L), ScaledInt(-3L)) == std::strong_ordering::equal);

    std::mt19937_64 rng(20250810);
    std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
    const mpz_class D = 1000 * mpz_class(37) * 37 * 37;
    for (int t = 0; t < 2000; ++t) {
        long long a = dist(rng), b = dist(rng), c = dist(rng);
        ScaledInt sa{mpz_class(static_cast<long>(a))}, sb{mpz_class(static_cast<long>(b))};
        // consistency with the rational reference a/D vs b/D
        mpq_class qa(static_cast<long>(a)), qb(static_cast<long>(b));
        qa /= mpq_class(D);
        qb /= mpq_class(D);
        if (qa < qb) CHECK(cmp(sa, sb) == std::strong_ordering::less);
        if (qa == qb) CHECK(cmp(sa, sb) == std::strong_ordering::equal);
        if (qa > qb) CHECK(cmp(sa, sb) == std::strong_ordering::greater);

        // antisymmetry and transitivity on the triple
        ScaledInt sc{mpz_class(static_cast<long>(c))};
        if (cmp(sa, sb) == std::strong_ordering::less) {
            CHECK(cmp(sb, sa) == std::strong_ordering::greater);
        }
        if (sa <= sb && sb <= sc) CHECK(sa <= sc);
    }
}

TEST_CASE("parse_rational handles fractions and decimals exactly") {
    CHECK(parse_rational("999/1000") == mpq_class(999, 1000));
    CHECK(parse_rational("0.999") == mpq_class(999, 1000));
    CHECK(parse_rational(".5") == mpq_class(1, 2));
    CHECK(parse_rational("1") == mpq_class(1));
    CHECK(parse_rational("7/8") == mpq_class(7, 8));
    CHECK(parse_rational("-0.25") == mpq_class(-1, 4));
    CHECK(parse_rational("2/4") == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}
