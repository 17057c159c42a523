#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "convexbasis/construction.hpp"
#include "convexbasis/verify.hpp"

using namespace cvb;

namespace {

// Independent oracle: evaluate x_i, y_j, b_i^(k) in plain rational
// arithmetic and clear the denominator afterwards. This never touches the
// pre-cleared integer formulas under test.
mpq_class alpha_q(long n) { return mpq_class(1, n * n); }
mpq_class gamma_q(long n) { return mpq_class(1, 1000 * n * n * n); }

mpz_class to_num(const mpq_class& value, const Params& p) {
    mpq_class scaled = value * mpq_class(p.D);
    scaled.canonicalize();
    REQUIRE(scaled.get_den() == 1);
    return scaled.get_num();
}

mpq_class x_rational(long n, long i) {
    return i + (alpha_q(n) + gamma_q(n)) * i * i;
}
mpq_class y_rational(long n, long j) { return j - alpha_q(n) * j * j; }
mpq_class block_rational(long n, long k, long i) {
    return (k - alpha_q(n) * k * k) + gamma_q(n) * i * i + 2 * i * k * alpha_q(n);
}

}  // namespace

TEST_CASE("x_value and y_value match the rational-evaluation oracle") {
    Params p = make_params(2, mpq_class(999, 1000), 4);
    CHECK(x_value(p, 1).num == 10001);   // 8000 + 2001
    CHECK(x_value(p, 0).num == 0);
    CHECK(x_value(p, -1).num == -5999);  // -8000 + 2001
    CHECK(y_value(p, 1).num == 6000);    // y_1 = 3/4
    CHECK(y_value(p, 0).num == 0);
    CHECK(y_value(p, -2).num == -24000);

    for (long n : {1L, 2L, 3L, 7L, 16L}) {
        Params q = make_params(n, mpq_class(999, 1000), 4);
        for (long i = -2 * n; i <= 2 * n; ++i) {
            CHECK(x_value(q, i).num == to_num(x_rational(n, i), q));
            CHECK(y_value(q, i).num == to_num(y_rational(n, i), q));
        }
    }
}

TEST_CASE("x_value and y_value reject out-of-range indices") {
    Params p = make_params(4, mpq_class(999, 1000), 4);
    CHECK_THROWS_AS(x_value(p, 9), std::invalid_argument);
    CHECK_THROWS_AS(x_value(p, -9), std::invalid_argument);
    CHECK_THROWS_AS(y_value(p, 9), std::invalid_argument);
}

TEST_CASE("build_basis enumerates and deduplicates") {
    // n=1: 5 xs + 5 ys generated; y_1 = 0 = y_0 and y_2 = y_{-1} collide
    Params p1 = make_params(1, mpq_class(1), 4);
    Basis b1 = build_basis(p1);
    CHECK(b1.xs.size() == 5);
    CHECK(b1.ys.size() == 5);
    CHECK(b1.elements.size() == 7);

    // n=2: the spec's own enumeration oracle gives 15 (not 8n+1 = 17):
    // alpha = 1/4 makes y_1 = y_3 = 3/4 and y_4 = y_0 = 0.
    Params p2 = make_params(2, mpq_class(999, 1000), 4);
    Basis b2 = build_basis(p2);
    CHECK(b2.elements.size() == 15);
    CHECK(b2.y(1) == b2.y(3));
    CHECK(b2.y(4).num == 0);

    // n=5: full enumeration gives the collision-free maximum 8n+1 = 41
    Params p5 = make_params(5, mpq_class(999, 1000), 4);
    Basis b5 = build_basis(p5);
    CHECK(b5.elements.size() == 41);

    // cross-check against the independent rational enumeration
    for (long n : {1L, 2L, 5L, 9L}) {
        Params p = make_params(n, mpq_class(999, 1000), 4);
        Basis b = build_basis(p);
        std::set<mpz_class> oracle;
        for (long i = -2 * n; i <= 2 * n; ++i) {
            oracle.insert(to_num(x_rational(n, i), p));
            oracle.insert(to_num(y_rational(n, i), p));
        }
        REQUIRE(b.elements.size() == oracle.size());
        std::size_t t = 0;
        for (const mpz_class& v : oracle) CHECK(b.elements[t++].num == v);
        CHECK(b.elements.size() <= static_cast<std::size_t>(8 * n + 1));
    }
}

TEST_CASE("basis monotonicity flags flip exactly at n = 4") {
    for (long n = 1; n <= 12; ++n) {
        Params p = make_params(n, mpq_class(999, 1000), 4);
        Basis b = build_basis(p);
        CHECK(b.xs_strictly_increasing == (n >= 4));
        CHECK(b.ys_strictly_increasing == (n >= 4));
    }
}

TEST_CASE("build_block matches eq:block and its sum identity at n=2") {
    Params p = make_params(2, mpq_class(999, 1000), 4);
    Block b = build_block(p, 2);
    REQUIRE(b.entries.size() == 7);  // i in [-2, 4]

    auto at = [&](long i) -> const BlockEntry& {
        return b.entries[static_cast<std::size_t>(i + p.n)];
    };
    CHECK(at(0).value.num == 8000);   // b_0 = k - alpha k^2 = 1
    CHECK(at(1).value.num == 16001);  // = x_1 + y_1 = 10001 + 6000
    CHECK(at(-1).value.num == 1);     // = x_{-1} + y_3 = -5999 + 6000
    CHECK(at(1).witness_i == 1);
    CHECK(at(1).witness_j == 1);
    CHECK(at(-1).witness_j == 3);

    CHECK_THROWS_AS(build_block(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_block(p, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_block(p, -1), std::invalid_argument);
}

TEST_CASE("block gaps: value, positivity, monotonicity") {
    Params p = make_params(2, mpq_class(999, 1000), 4);
    CHECK(block_gap(p, 2, 0).num == 8001);   // 16001 - 8000
    CHECK(block_gap(p, 2, -1).num == 7999);  // 8000 - 1
    CHECK_THROWS_AS(block_gap(p, 2, 4), std::invalid_argument);

    for (long n : {2L, 5L, 16L}) {
        Params q = make_params(n, mpq_class(1, 2), 4);
        for (long k = 1; k <= n; ++k) {
            Block blk = build_block(q, k);
            for (long i = -n; i < 2 * n; ++i) {
                const auto& lo = blk.entries[static_cast<std::size_t>(i + n)];
                const auto& hi = blk.entries[static_cast<std::size_t>(i + n + 1)];
                ScaledInt g = block_gap(q, k, i);
                CHECK(hi.value - lo.value == g);
                CHECK(g.num > 0);
                if (i < 2 * n - 1) {
                    CHECK(block_gap(q, k, i + 1).num - g.num == 2);  // slope 2*gamma
                }
            }
        }
    }
}

TEST_CASE("sum identity x_i + y_{k-i} = b_i^(k) over full ranges") {
    for (long n : {2L, 5L, 16L}) {
        Params p = make_params(n, mpq_class(1, 2), 4);
        for (long k = 1; k <= n; ++k) {
            Block blk = build_block(p, k);
            for (const BlockEntry& e : blk.entries) {
                CHECK(e.witness_i == e.i);
                CHECK(e.witness_j == k - e.i);
                CHECK(x_value(p, e.witness_i) + y_value(p, e.witness_j) == e.value);
                CHECK(e.witness_i >= -2 * n);
                CHECK(e.witness_i <= 2 * n);
                CHECK(e.witness_j >= -2 * n);
                CHECK(e.witness_j <= 2 * n);
            }
        }
    }
}

TEST_CASE("blocks are convex and match the rational oracle") {
    for (long n : {3L, 8L}) {
        Params p = make_params(n, mpq_class(1, 2), 4);
        for (long k = 1; k <= n; ++k) {
            Block blk = build_block(p, k);
            std::vector<ScaledInt> vals;
            for (const BlockEntry& e : blk.entries) {
                CHECK(e.value.num == to_num(block_rational(n, k, e.i), p));
                vals.push_back(e.value);
            }
            CHECK(is_convex(vals));
        }
    }
}
