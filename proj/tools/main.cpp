// convexbasis: construct a convex sequence of size ~c*n^2 inside the sumset
// of an O(n)-element basis, verify it in exact arithmetic, and audit the
// underlying inequality ledger.
//
// Subcommands: construct, audit, oracle, sweep, diffstats.
// Exit codes: 0 success, 1 usage error, 2 infeasible / budget exceeded,
// 3 internal verification fault.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convexbasis/construction.hpp"
#include "convexbasis/diff_stats.hpp"
#include "convexbasis/errors.hpp"
#include "convexbasis/manifest.hpp"
#include "convexbasis/oracle.hpp"
#include "convexbasis/params.hpp"
#include "convexbasis/splice.hpp"
#include "convexbasis/verify.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitFault = 3;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string rat(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

cvb::Params params_or_usage(long n, const std::string& theta_text, long stride) {
    mpq_class theta = cvb::parse_rational(theta_text);
    return cvb::make_params(n, theta, stride);
}

void print_audit(const cvb::AuditReport& a) {
    std::printf("pair (%ld, %ld): m=%ld v=%s d_num=%s\n", a.k, a.k + a.stride, a.m,
                a.v_exists ? std::to_string(a.v_index).c_str() : "-", a.d.str().c_str());
    std::printf("  %-22s %-5s %-22s %s\n", "check", "pass", "slack", "slack (exact)");
    auto row = [](const cvb::CheckResult& c, const char* mark) {
        std::printf("  %-22s %-5s %-22s %s%s\n", c.name.c_str(), c.pass ? "yes" : "NO",
                    cvb::decimal_string(c.slack, 12).c_str(), rat(c.slack).c_str(), mark);
    };
    for (const auto& c : a.checks) row(c, "");
    for (const auto& c : a.info) row(c, "  [info]");
}

struct PipelineResult {
    cvb::Params params;
    cvb::Basis basis;
    cvb::Chain chain;
    cvb::Measurement measurement;
    std::vector<std::pair<std::string, double>> timings;
};

// build_basis -> assemble -> is_convex -> check_witnesses -> measure.
// Throws the library errors through; a failed exact check throws
// ConvexityBrokenError so all callers share the fault path.
PipelineResult run_pipeline(const cvb::Params& params) {
    PipelineResult r{params, {}, {}, {}, {}};

    auto t = Clock::now();
    r.basis = cvb::build_basis(params);
    r.timings.emplace_back("build_basis", ms_since(t));

    t = Clock::now();
    r.chain = cvb::assemble(params);
    r.timings.emplace_back("assemble", ms_since(t));

    t = Clock::now();
    if (!cvb::is_convex(r.chain.values)) {
        throw cvb::ConvexityBrokenError("assembled chain is not convex");
    }
    cvb::WitnessReport wr = cvb::check_witnesses(r.chain, r.basis);
    if (!wr.pass) {
        throw cvb::ConvexityBrokenError("witness check failed: " + wr.message);
    }
    r.timings.emplace_back("verify", ms_since(t));

    t = Clock::now();
    r.measurement = cvb::measure(r.chain, r.basis);
    r.timings.emplace_back("measure", ms_since(t));
    return r;
}

cvb::RunManifest base_manifest(const cvb::Params& p) {
    cvb::RunManifest m;
    m.n = p.n;
    m.theta = p.theta;
    m.stride = p.stride;
    m.D = p.D;
    m.block_ks = p.block_ks;
    return m;
}

int cmd_construct(long n, const std::string& theta_text, long stride, const std::string& out) {
    cvb::Params params = params_or_usage(n, theta_text, stride);
    PipelineResult r = run_pipeline(params);

    fs::create_directories(out);
    cvb::RunManifest m = base_manifest(params);
    m.splice_log = r.chain.splice_log;
    m.measurement = r.measurement;
    m.exit_status = "ok";
    m.timings_ms = r.timings;

    cvb::write_manifest(fs::path(out) / "manifest.json", m);
    cvb::write_chain_csv(fs::path(out) / "A.csv", r.chain);
    cvb::write_basis_csv(fs::path(out) / "B.csv", r.basis);

    std::printf("n=%ld theta=%s stride=%ld D=%s\n", params.n, rat(params.theta).c_str(),
                params.stride, params.D.get_str().c_str());
    std::printf("blocks:");
    for (long k : params.block_ks) std::printf(" %ld", k);
    std::printf("  splices: %zu\n", r.chain.splice_log.size());
    std::printf("|A| = %lld  |B| = %lld  density = %s (~%s)\n", r.measurement.size_a,
                r.measurement.size_b, rat(r.measurement.density).c_str(),
                cvb::decimal_string(r.measurement.density, 6).c_str());
    std::printf("convexity: exact pass  witnesses: exact pass\n");
    std::printf("wrote %s/manifest.json, A.csv, B.csv\n", out.c_str());
    return kExitOk;
}

int cmd_audit(long n, const std::string& theta_text, long stride,
              const std::optional<std::string>& out) {
    cvb::Params params = params_or_usage(n, theta_text, stride);
    if (!params.has_audit_pair()) {
        std::fprintf(stderr,
                     "audit: no consecutive block pair in [ceil(theta*n), n] = "
                     "[%s*%ld, %ld] with stride %ld\n",
                     rat(params.theta).c_str(), n, n, stride);
        return kExitInfeasible;
    }

    std::vector<cvb::AuditReport> audits;
    bool all = true;
    for (std::size_t t = 0; t + 1 < params.block_ks.size(); ++t) {
        cvb::AuditReport a = cvb::audit_bounds(params, params.block_ks[t]);
        all = all && a.all_pass();
        print_audit(a);
        audits.push_back(std::move(a));
    }

    if (out) {
        fs::create_directories(*out);
        cvb::RunManifest m = base_manifest(params);
        m.audits = std::move(audits);
        m.exit_status = all ? "ok" : "checks-failed";
        cvb::write_manifest(fs::path(*out) / "manifest.json", m);
        std::printf("wrote %s/manifest.json\n", out->c_str());
    }

    if (!all) {
        std::fprintf(stderr, "audit: some checks failed (see slack table)\n");
        return kExitInfeasible;
    }
    std::printf("all checks pass\n");
    return kExitOk;
}

int cmd_oracle(long n, const std::string& theta_text, long stride, long long pair_budget,
               long long lcs_budget, const std::optional<std::string>& out) {
    cvb::Params params = params_or_usage(n, theta_text, stride);

    auto t = Clock::now();
    cvb::Basis basis = cvb::build_basis(params);
    cvb::SortedSums sums = cvb::sumset(basis.elements, pair_budget);
    double sumset_ms = ms_since(t);

    t = Clock::now();
    cvb::LcsResult lcs = cvb::lcs_dp(sums, static_cast<std::size_t>(lcs_budget));
    double dp_ms = ms_since(t);

    std::optional<long long> chain_size;
    try {
        cvb::Chain chain = cvb::assemble(params);
        chain_size = static_cast<long long>(chain.size());
    } catch (const cvb::NoBlocksError&) {
    } catch (const cvb::NoNestingError&) {
    }

    std::printf("|B| = %zu  |B+B| = %zu  lcs_dp = %zu\n", basis.elements.size(),
                sums.size(), lcs.length);
    if (chain_size) {
        std::printf("|A| = %lld  (lcs_dp >= |A|: %s)\n", *chain_size,
                    static_cast<long long>(lcs.length) >= *chain_size ? "yes" : "NO");
        if (static_cast<long long>(lcs.length) < *chain_size) {
            std::fprintf(stderr,
                         "oracle: DP found a shorter convex subsequence than the "
                         "assembled chain -- internal fault\n");
            return kExitFault;
        }
    } else {
        std::printf("|A| = (construction infeasible at these parameters)\n");
    }

    if (out) {
        fs::create_directories(*out);
        cvb::RunManifest m = base_manifest(params);
        cvb::RunManifest::OracleComparison oc;
        oc.basis_size = static_cast<long long>(basis.elements.size());
        oc.sumset_size = static_cast<long long>(sums.size());
        oc.lcs_length = static_cast<long long>(lcs.length);
        oc.lcs_witness_length = static_cast<long long>(lcs.witness.size());
        oc.chain_size = chain_size;
        m.oracle = oc;
        m.exit_status = "ok";
        m.timings_ms = {{"sumset", sumset_ms}, {"lcs_dp", dp_ms}};
        cvb::write_manifest(fs::path(*out) / "manifest.json", m);
        std::printf("wrote %s/manifest.json\n", out->c_str());
    }
    return kExitOk;
}

int cmd_sweep(const std::vector<long>& ns, const std::string& theta_text, long stride,
              const std::string& out) {
    std::vector<cvb::SweepRow> rows;
    std::optional<long long> prev_size;
    for (long n : ns) {
        cvb::SweepRow row;
        row.n = n;
        try {
            cvb::Params params = params_or_usage(n, theta_text, stride);
            PipelineResult r = run_pipeline(params);
            row.status = "ok";
            row.size_a = r.measurement.size_a;
            row.size_b = r.measurement.size_b;
            row.density = r.measurement.density;
            row.blocks = static_cast<long long>(params.block_ks.size());
            row.splices = static_cast<long long>(r.chain.splice_log.size());
            if (prev_size) {
                mpq_class ratio(mpz_class(row.size_a), mpz_class(*prev_size));
                ratio.canonicalize();
                row.growth_ratio = ratio;
            }
            prev_size = row.size_a;
        } catch (const cvb::NoBlocksError&) {
            row.status = "no-blocks";
        } catch (const cvb::NoNestingError&) {
            row.status = "no-nesting";
        } catch (const cvb::ConvexityBrokenError& e) {
            row.status = "verification-fault";
            std::fprintf(stderr, "sweep: n=%ld: %s\n", n, e.what());
        }
        rows.push_back(std::move(row));
    }

    fs::create_directories(out);
    cvb::write_sweep_csv(fs::path(out) / "sweep.csv", rows);

    std::printf("%-8s %-18s %-10s %-10s %-12s %-8s %-8s %s\n", "n", "status", "|A|", "|B|",
                "density", "blocks", "splices", "growth");
    for (const cvb::SweepRow& r : rows) {
        if (r.status == "ok") {
            std::printf("%-8ld %-18s %-10lld %-10lld %-12s %-8lld %-8lld %s\n", r.n,
                        r.status.c_str(), r.size_a, r.size_b,
                        cvb::decimal_string(r.density, 6).c_str(), r.blocks, r.splices,
                        r.growth_ratio ? cvb::decimal_string(*r.growth_ratio, 4).c_str() : "-");
        } else {
            std::printf("%-8ld %-18s\n", r.n, r.status.c_str());
        }
    }
    std::printf("wrote %s/sweep.csv\n", out.c_str());
    return kExitOk;
}

int cmd_diffstats(long n, const std::string& theta_text, long stride, long long threshold,
                  long long pair_budget, const std::string& out) {
    cvb::Params params = params_or_usage(n, theta_text, stride);
    PipelineResult r = run_pipeline(params);

    long long T = threshold;
    if (T <= 0) {
        // default: ceil(sqrt(|A|)), the scale of the popularity statement
        T = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(r.measurement.size_a))));
        if (T < 1) T = 1;
    }
    cvb::DiffStats stats = cvb::diff_popularity(r.chain.values, T, pair_budget);

    fs::create_directories(out);
    cvb::write_diffstats_csv(fs::path(out) / "diffstats.csv", stats, params);
    cvb::RunManifest m = base_manifest(params);
    m.splice_log = r.chain.splice_log;
    m.measurement = r.measurement;
    cvb::RunManifest::DiffSummary ds;
    ds.threshold = T;
    ds.popular_count = stats.popular_count;
    ds.pair_count = stats.pair_count;
    ds.distinct_differences = static_cast<long long>(stats.multiplicities.size());
    m.diffs = ds;
    m.exit_status = "ok";
    m.timings_ms = r.timings;
    cvb::write_manifest(fs::path(out) / "manifest.json", m);

    std::printf("|A| = %lld  pairs = %lld  distinct positive differences = %lld\n",
                r.measurement.size_a, stats.pair_count,
                static_cast<long long>(stats.multiplicities.size()));
    std::printf("popular differences (multiplicity >= %lld): %lld  [sqrt(|A|) ~ %.1f]\n", T,
                stats.popular_count, std::sqrt(static_cast<double>(r.measurement.size_a)));
    std::printf("wrote %s/diffstats.csv, manifest.json\n", out.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction of a large convex sequence inside B+B"};
    app.require_subcommand(1);

    long n = 0;
    std::string theta = "999/1000";
    long stride = 4;
    std::string out = "out";
    std::optional<std::string> out_opt;
    std::vector<long> ns;
    long long pair_budget = cvb::kDefaultSumsetPairBudget;
    long long lcs_budget = static_cast<long long>(cvb::kDefaultLcsBudget);
    long long diff_budget = 10'000'000;
    long long threshold = 0;

    auto* construct = app.add_subcommand("construct", "build, verify and persist a chain");
    construct->add_option("--n", n, "size parameter")->required();
    construct->add_option("--theta", theta, "block range fraction (p/q or decimal)");
    construct->add_option("--stride", stride, "block spacing");
    construct->add_option("--out", out, "output directory");

    auto* audit = app.add_subcommand("audit", "evaluate the inequality ledger per block pair");
    audit->add_option("--n", n, "size parameter")->required();
    audit->add_option("--theta", theta, "block range fraction");
    audit->add_option("--stride", stride, "block spacing");
    audit->add_option("--out", out_opt, "optional output directory for manifest.json");

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-check on materialized B+B");
    oracle->add_option("--n", n, "size parameter")->required();
    oracle->add_option("--theta", theta, "block range fraction");
    oracle->add_option("--stride", stride, "block spacing");
    oracle->add_option("--budget", pair_budget, "max pairwise sums to materialize");
    oracle->add_option("--lcs-budget", lcs_budget, "max sumset size for the DP");
    oracle->add_option("--out", out_opt, "optional output directory for manifest.json");

    auto* sweep = app.add_subcommand("sweep", "construct+measure across several n");
    sweep->add_option("--n", ns, "comma-separated n list")->required()->delimiter(',');
    sweep->add_option("--theta", theta, "block range fraction");
    sweep->add_option("--stride", stride, "block spacing");
    sweep->add_option("--out", out, "output directory");

    auto* diffstats = app.add_subcommand("diffstats", "difference multiplicity histogram of A");
    diffstats->add_option("--n", n, "size parameter")->required();
    diffstats->add_option("--theta", theta, "block range fraction");
    diffstats->add_option("--stride", stride, "block spacing");
    diffstats->add_option("--threshold", threshold, "popularity threshold (default ceil(sqrt(|A|)))");
    diffstats->add_option("--budget", diff_budget, "max difference pairs");
    diffstats->add_option("--out", out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(construct)) return cmd_construct(n, theta, stride, out);
        if (app.got_subcommand(audit)) return cmd_audit(n, theta, stride, out_opt);
        if (app.got_subcommand(oracle)) {
            return cmd_oracle(n, theta, stride, pair_budget, lcs_budget, out_opt);
        }
        if (app.got_subcommand(sweep)) {
            for (long v : ns) {
                if (v < 1) {
                    std::fprintf(stderr, "sweep: n must be >= 1 (got %ld)\n", v);
                    return kExitUsage;
                }
            }
            return cmd_sweep(ns, theta, stride, out);
        }
        if (app.got_subcommand(diffstats)) {
            return cmd_diffstats(n, theta, stride, threshold, diff_budget, out);
        }
    } catch (const cvb::PairOutOfRangeError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const cvb::NoBlocksError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kExitInfeasible;
    } catch (const cvb::NoNestingError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kExitInfeasible;
    } catch (const cvb::BudgetExceededError& e) {
        std::fprintf(stderr, "budget exceeded: %s (required %lld, budget %lld)\n", e.what(),
                     e.required, e.budget);
        return kExitInfeasible;
    } catch (const cvb::ConvexityBrokenError& e) {
        std::fprintf(stderr, "internal verification fault: %s\n", e.what());
        return kExitFault;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFault;
    }
    return kExitUsage;
}
