#include "convexbasis/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cvb {

namespace {

using json = nlohmann::ordered_json;

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json check_to_json(const CheckResult& c) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["slack"] = rational_string(c.slack);
    j["slack_decimal"] = decimal_string(c.slack, 12);
    return j;
}

json audit_to_json(const AuditReport& a) {
    json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["k_next"] = a.k + a.stride;
    j["stride"] = a.stride;
    j["theta"] = rational_string(a.theta);
    j["all_pass"] = a.all_pass();
    j["delta_max_num"] = a.delta_max.str();
    j["delta_min_next_num"] = a.delta_min.str();
    j["v_exists"] = a.v_exists;
    j["v_index"] = a.v_index;
    j["d_num"] = a.d.str();
    j["m"] = a.m;
    json checks = json::array();
    for (const CheckResult& c : a.checks) checks.push_back(check_to_json(c));
    j["checks"] = checks;
    json info = json::array();
    for (const CheckResult& c : a.info) info.push_back(check_to_json(c));
    j["info"] = info;
    return j;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical across platforms
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::string decimal_string(const mpq_class& q, int digits) {
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    const bool negative = num < 0;
    if (negative) num = -num;

    mpz_class scale = 1;
    for (int t = 0; t < digits; ++t) scale *= 10;

    // round half away from zero
    mpz_class scaled = (num * scale * 2 + den) / (2 * den);
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;

    std::string f = frac.get_str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    std::string out = (negative && (whole != 0 || frac != 0) ? "-" : "") + whole.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

std::string manifest_to_json(const RunManifest& m) {
    json j;
    j["params"]["n"] = m.n;
    j["params"]["theta"] = rational_string(m.theta);
    j["params"]["stride"] = m.stride;
    j["params"]["D"] = m.D.get_str();
    j["block_indices"] = m.block_ks;

    json log = json::array();
    for (const SpliceRecord& r : m.splice_log) {
        json e;
        e["k_from"] = r.k_from;
        e["k_to"] = r.k_to;
        e["u"] = r.u;
        e["v"] = r.v;
        e["d_num"] = r.d.str();
        log.push_back(e);
    }
    j["splice_log"] = log;

    if (m.measurement) {
        const Measurement& mm = *m.measurement;
        json e;
        e["size_a"] = mm.size_a;
        e["size_b"] = mm.size_b;
        e["density"] = rational_string(mm.density);
        e["density_decimal"] = decimal_string(mm.density, 9);
        json kept = json::array();
        for (auto& [k, c] : mm.per_block_kept) kept.push_back(json::array({k, c}));
        e["per_block_kept"] = kept;
        json mid = json::array();
        for (auto& [k, c] : mm.middle_interval_counts) mid.push_back(json::array({k, c}));
        e["middle_interval_counts"] = mid;
        j["measurement"] = e;
    }

    if (!m.audits.empty()) {
        json audits = json::array();
        for (const AuditReport& a : m.audits) audits.push_back(audit_to_json(a));
        j["audits"] = audits;
    }

    if (m.oracle) {
        json e;
        e["basis_size"] = m.oracle->basis_size;
        e["sumset_size"] = m.oracle->sumset_size;
        e["lcs_length"] = m.oracle->lcs_length;
        e["lcs_witness_length"] = m.oracle->lcs_witness_length;
        if (m.oracle->chain_size) e["chain_size"] = *m.oracle->chain_size;
        j["oracle"] = e;
    }

    if (m.diffs) {
        json e;
        e["threshold"] = m.diffs->threshold;
        e["popular_count"] = m.diffs->popular_count;
        e["pair_count"] = m.diffs->pair_count;
        e["distinct_differences"] = m.diffs->distinct_differences;
        j["diff_stats"] = e;
    }

    j["exit_status"] = m.exit_status;
    json times;
    for (auto& [name, ms] : m.timings_ms) times[name] = ms;
    j["timings_ms"] = times;
    return j.dump(2) + "\n";
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
    open_out(path) << manifest_to_json(m);
}

void write_chain_csv(const std::filesystem::path& path, const Chain& chain) {
    auto out = open_out(path);
    out << "# convex chain A; value = numerator / D\n";
    out << "# D=" << chain.params.D.get_str() << "\n";
    out << "index,numerator,witness_i,witness_j,block\n";
    for (std::size_t t = 0; t < chain.size(); ++t) {
        out << t << ',' << chain.values[t].str() << ',' << chain.witness_i[t] << ','
            << chain.witness_j[t] << ',' << chain.origin_k[t] << '\n';
    }
}

void write_basis_csv(const std::filesystem::path& path, const Basis& basis) {
    auto out = open_out(path);
    out << "# basis B, deduplicated and sorted; value = numerator / D\n";
    out << "# D=" << basis.params.D.get_str() << "\n";
    out << "index,numerator\n";
    for (std::size_t t = 0; t < basis.elements.size(); ++t) {
        out << t << ',' << basis.elements[t].str() << '\n';
    }
}

void write_block_csv(const std::filesystem::path& path, const Block& block,
                     const Params& params) {
    auto out = open_out(path);
    out << "# block B_" << block.k << "; value = numerator / D\n";
    out << "# D=" << params.D.get_str() << "\n";
    out << "index,numerator\n";
    for (const BlockEntry& e : block.entries) {
        out << e.i << ',' << e.value.str() << '\n';
    }
}

void write_diffstats_csv(const std::filesystem::path& path, const DiffStats& stats,
                         const Params& params) {
    auto out = open_out(path);
    out << "# positive pairwise differences; difference = numerator / D\n";
    out << "# D=" << params.D.get_str() << "\n";
    out << "difference_numerator,multiplicity\n";
    for (const auto& [diff, mult] : stats.multiplicities) {
        out << diff.str() << ',' << mult << '\n';
    }
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows) {
    auto out = open_out(path);
    out << "n,status,size_a,size_b,density,blocks,splices,growth_ratio\n";
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.status << ',';
        if (r.status == "ok") {
            out << r.size_a << ',' << r.size_b << ',' << decimal_string(r.density, 9) << ','
                << r.blocks << ',' << r.splices << ',';
            if (r.growth_ratio) out << decimal_string(*r.growth_ratio, 4);
        } else {
            out << ",,,,,";
        }
        out << '\n';
    }
}

}  // namespace cvb
