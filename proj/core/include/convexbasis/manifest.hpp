#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexbasis/construction.hpp"
#include "convexbasis/diff_stats.hpp"
#include "convexbasis/splice.hpp"
#include "convexbasis/verify.hpp"

namespace cvb {

// Everything needed to reproduce and audit a run. Re-running with the
// recorded params yields byte-identical sequence CSVs; timings are
// informational and excluded from that contract.
struct RunManifest {
    long n = 0;
    mpq_class theta;
    long stride = 0;
    mpz_class D;

    std::vector<long> block_ks;
    std::vector<SpliceRecord> splice_log;
    std::optional<Measurement> measurement;
    std::vector<AuditReport> audits;

    struct OracleComparison {
        long long basis_size = 0;
        long long sumset_size = 0;
        long long lcs_length = 0;
        long long lcs_witness_length = 0;
        std::optional<long long> chain_size;  // |A| when assemble succeeded
    };
    std::optional<OracleComparison> oracle;

    struct DiffSummary {
        long long threshold = 0;
        long long popular_count = 0;
        long long pair_count = 0;
        long long distinct_differences = 0;
    };
    std::optional<DiffSummary> diffs;

    std::string exit_status;  // "ok", "infeasible", "verification-fault", ...
    std::vector<std::pair<std::string, double>> timings_ms;
};

std::string manifest_to_json(const RunManifest& m);
void write_manifest(const std::filesystem::path& path, const RunManifest& m);

// Chain dump: index,numerator,witness_i,witness_j,block with D in the
// header comment.
void write_chain_csv(const std::filesystem::path& path, const Chain& chain);

// Basis dump: index,numerator over the sorted deduplicated elements.
void write_basis_csv(const std::filesystem::path& path, const Basis& basis);

// Block dump: index,numerator (index is the paper's i).
void write_block_csv(const std::filesystem::path& path, const Block& block,
                     const Params& params);

// Difference histogram: difference_numerator,multiplicity.
void write_diffstats_csv(const std::filesystem::path& path, const DiffStats& stats,
                         const Params& params);

struct SweepRow {
    long n = 0;
    std::string status;  // "ok" or an error tag
    long long size_a = 0;
    long long size_b = 0;
    mpq_class density;
    long long blocks = 0;
    long long splices = 0;
    std::optional<mpq_class> growth_ratio;  // |A|(n) / |A|(previous ok n)
};

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows);

// Fixed-point decimal rendering of an exact rational (round half away from
// zero), used anywhere a human-readable approximation accompanies the exact
// value. Deterministic; no binary floating point.
std::string decimal_string(const mpq_class& q, int digits);

}  // namespace cvb
