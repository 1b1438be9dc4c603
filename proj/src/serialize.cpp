#include "brouwer/serialize.hpp"

#include <sstream>

namespace brouwer {

using nlohmann::ordered_json;

ordered_json to_json(const ExcessProfile& p) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "excess_profile";
    j["n"] = p.n;
    j["m"] = p.m;
    j["tol"] = p.tol;
    j["excess"] = p.excess;
    ordered_json verdicts = ordered_json::array();
    for (auto v : p.verdicts) verdicts.push_back(verdict_name(v));
    j["verdicts"] = verdicts;
    j["max_excess"] = {{"k", p.max_k}, {"value", p.max_excess}};
    j["violated_k"] = p.violated_k();
    j["tight_k"] = p.tight_k();
    return j;
}

ordered_json to_json(const Spectrum& s) {
    ordered_json j;
    j["kind"] = spectrum_kind_name(s.kind);
    j["values"] = s.values;
    j["trace"] = s.trace;
    return j;
}

ordered_json to_json(const Certificate& c) {
    ordered_json j;
    j["id"] = cert_id_name(c.id);
    j["covered_k"] = c.covered_list();
    j["evidence"] = c.evidence;
    return j;
}

ordered_json to_json(const CoverageReport& c) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "coverage_report";
    j["n"] = c.n;
    j["m"] = c.m;
    ordered_json certs = ordered_json::array();
    for (const auto& cert : c.certificates) certs.push_back(to_json(cert));
    j["certificates"] = certs;
    j["uncovered_k"] = c.uncovered;
    j["residual_band"] = {{"lo", c.band_lo}, {"hi", c.band_hi}};
    j["t_used"] = c.t_used;
    j["t_exact"] = c.t_exact;
    return j;
}

ordered_json to_json(const CorpusViolation& v) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "violation";
    j["line"] = v.line_no;
    j["graph6"] = v.graph6;
    j["k"] = v.k;
    j["excess"] = v.excess;
    return j;
}

ordered_json to_json(const CorpusReport& r) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "corpus_report";
    j["total_graphs"] = r.total_graphs;
    j["total_pairs"] = r.total_pairs;
    ordered_json viols = ordered_json::array();
    for (const auto& v : r.violations)
        viols.push_back({{"line", v.line_no}, {"graph6", v.graph6}, {"k", v.k}, {"excess", v.excess}});
    j["violations"] = viols;
    j["tight_graphs"] = r.tight_graphs;
    ordered_json tights = ordered_json::array();
    for (const auto& t : r.tight_samples)
        tights.push_back({{"line", t.line_no}, {"graph6", t.graph6}, {"k", t.k}});
    j["tight_samples"] = tights;
    ordered_json hist;
    for (const auto& [name, pairs] : r.covered_pairs) {
        hist[name] = {{"covered_pairs", pairs}, {"fraction", r.coverage_fraction(name)}};
    }
    j["coverage_histogram"] = hist;
    j["eigensolved"] = r.eigensolved;
    ordered_json skipped = ordered_json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"line", s.line_no}, {"error", s.error}});
    j["skipped_lines"] = skipped;
    j["wall_time_s"] = r.wall_time_s;
    return j;
}

ordered_json to_json(const McRecord& r) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "mc_record";
    j["n"] = r.n;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["kstar"] = r.kstar;
    j["max_excess"] = r.max_excess;
    j["excess_at_predicted_k"] = r.excess_at_predicted_k;
    return j;
}

ordered_json to_json(const McSummary& s) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "mc_summary";
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["master_seed"] = s.master_seed;
    j["mean_max_excess"] = s.mean_max_excess;
    j["min_max_excess"] = s.min_max_excess;
    j["max_max_excess"] = s.max_max_excess;
    j["mean_kstar"] = s.mean_kstar;
    j["mean_excess_at_predicted_k"] = s.mean_excess_at_predicted_k;
    j["predicted_k"] = s.predicted_k;
    j["predicted_excess"] = s.predicted_excess;
    return j;
}

ordered_json verdict_rows_json(const ExcessProfile& p, const CoverageReport& c) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : verdict_rows(p, c)) {
        ordered_json row;
        row["k"] = r.k;
        row["status"] = verdict_name(r.status);
        row["excess"] = r.excess;
        ordered_json ids = ordered_json::array();
        for (CertId id : r.certificate_ids) ids.push_back(cert_id_name(id));
        row["certificates"] = ids;
        rows.push_back(row);
    }
    return rows;
}

std::string mc_csv(const std::vector<McRecord>& records) {
    std::ostringstream out;
    out << "n,trial,seed,kstar,max_excess,excess_at_predicted_k\n";
    out.precision(17);
    for (const auto& r : records)
        out << r.n << ',' << r.trial << ',' << r.seed << ',' << r.kstar << ',' << r.max_excess
            << ',' << r.excess_at_predicted_k << '\n';
    return out.str();
}

}  // namespace brouwer
