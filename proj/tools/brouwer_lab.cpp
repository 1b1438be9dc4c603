// brouwer-lab: command-line front door for the conjecture toolkit.
//
// Subcommands: check, certify, enumerate, signed-mc, signed-min, report.
// Exit codes: 0 = no violations, 2 = a violated index was found,
// 1 = I/O or parse failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include "brouwer/certificates.hpp"
#include "brouwer/conjecture.hpp"
#include "brouwer/corpus.hpp"
#include "brouwer/graph6.hpp"
#include "brouwer/serialize.hpp"
#include "brouwer/signed_graphs.hpp"

using nlohmann::ordered_json;
using namespace brouwer;

namespace {

int default_workers() {
    if (const char* env = std::getenv("BROUWER_LAB_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

bool file_exists(const std::string& path) {
    struct stat st {};
    return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

// The input argument is either a file of lines or one literal line.
std::vector<std::string> input_lines(const std::string& input, bool& io_error) {
    std::vector<std::string> lines;
    io_error = false;
    if (file_exists(input)) {
        std::ifstream in(input);
        if (!in) {
            io_error = true;
            return lines;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
        return lines;
    }
    if (input.find('.') != std::string::npos && input.find('\t') == std::string::npos) {
        // looks like a file name, but it does not exist
        io_error = true;
        return lines;
    }
    lines.push_back(input);
    return lines;
}

struct CommonOpts {
    int workers = default_workers();
    int t_exact_limit = 18;
    int arb_exact_limit = 20;
    bool assume_planar = false;
    double tol = -1.0;
    std::string format = "jsonl";
};

void add_limit_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--workers", o.workers, "Worker thread count (env BROUWER_LAB_WORKERS)");
    cmd->add_option("--t-exact-limit", o.t_exact_limit,
                    "Max n for exact subgraph spectral density");
    cmd->add_option("--arb-exact-limit", o.arb_exact_limit, "Max n for exact arboricity");
    cmd->add_flag("--assume-planar", o.assume_planar,
                  "Trust (unverified) that inputs are planar: arboricity <= 3");
    cmd->add_option("--tol", o.tol, "Verdict tolerance override (default 1e-6*max(1,n))");
}

CoverageOptions coverage_options(const CommonOpts& o) {
    CoverageOptions c;
    c.t_exact_limit = o.t_exact_limit;
    c.arboricity_exact_limit = o.arb_exact_limit;
    c.assume_planar = o.assume_planar;
    c.workers = o.workers;
    return c;
}

ordered_json config_header(const std::string& command, const CommonOpts& o,
                           const ordered_json& extra = {}) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "config";
    j["command"] = command;
    j["workers"] = o.workers;
    j["t_exact_limit"] = o.t_exact_limit;
    j["arb_exact_limit"] = o.arb_exact_limit;
    j["assume_planar"] = o.assume_planar;
    j["tol_override"] = o.tol;
    j["format"] = o.format;
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

int run_check(const std::string& input, bool signed_input, const CommonOpts& o) {
    bool io_error = false;
    auto lines = input_lines(input, io_error);
    if (io_error) {
        std::cerr << "error: cannot read input: " << input << "\n";
        return 1;
    }
    ordered_json header =
        config_header("check", o, {{"input", input}, {"signed", signed_input}});
    ordered_json out_profiles = ordered_json::array();
    if (o.format == "jsonl") std::cout << header << "\n";
    bool any_violation = false;
    bool any_parse_error = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        try {
            ExcessProfile p;
            if (signed_input) {
                SignedGraph sg = parse_signed_line(lines[i]);
                p = excess_profile(signed_spectrum(sg), sg.base.m(), o.tol);
            } else {
                p = check_graph(parse_graph6(lines[i]), o.tol);
            }
            any_violation = any_violation || p.has_violation();
            ordered_json j = to_json(p);
            j["input"] = lines[i];
            j["line"] = i + 1;
            if (o.format == "jsonl")
                std::cout << j << "\n";
            else
                out_profiles.push_back(j);
        } catch (const std::exception& e) {
            any_parse_error = true;
            std::cerr << "error: line " << (i + 1) << ": " << e.what() << "\n";
        }
    }
    if (o.format != "jsonl") {
        ordered_json doc;
        doc["config"] = header;
        doc["profiles"] = out_profiles;
        std::cout << doc.dump(2) << "\n";
    }
    if (any_parse_error) return 1;
    return any_violation ? 2 : 0;
}

int run_certify(const std::string& input, const CommonOpts& o) {
    bool io_error = false;
    auto lines = input_lines(input, io_error);
    if (io_error) {
        std::cerr << "error: cannot read input: " << input << "\n";
        return 1;
    }
    ordered_json header = config_header("certify", o, {{"input", input}});
    ordered_json reports = ordered_json::array();
    if (o.format == "jsonl") std::cout << header << "\n";
    bool any_parse_error = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        try {
            Graph g = parse_graph6(lines[i]);
            CoverageReport cov = coverage_report(g, coverage_options(o));
            ordered_json j = to_json(cov);
            j["input"] = lines[i];
            j["line"] = i + 1;
            if (o.format == "jsonl")
                std::cout << j << "\n";
            else
                reports.push_back(j);
        } catch (const std::exception& e) {
            any_parse_error = true;
            std::cerr << "error: line " << (i + 1) << ": " << e.what() << "\n";
        }
    }
    if (o.format != "jsonl") {
        ordered_json doc;
        doc["config"] = header;
        doc["reports"] = reports;
        std::cout << doc.dump(2) << "\n";
    }
    return any_parse_error ? 1 : 0;
}

int run_enumerate(const std::string& path, const std::string& mode, const CommonOpts& o) {
    if (!file_exists(path)) {
        std::cerr << "error: cannot read corpus file: " << path << "\n";
        return 1;
    }
    CorpusOptions copt;
    copt.mode = mode == "direct_only" ? CorpusMode::direct_only : CorpusMode::certificates_first;
    copt.workers = o.workers;
    copt.coverage = coverage_options(o);
    copt.tol = o.tol;
    copt.on_violation = [](const CorpusViolation& v) { std::cerr << to_json(v) << "\n"; };
    CorpusReport rep;
    try {
        rep = verify_corpus_file(path, copt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    ordered_json doc;
    doc["config"] = config_header("enumerate", o, {{"input", path}, {"mode", mode}});
    doc["report"] = to_json(rep);
    std::cout << doc.dump(2) << "\n";
    return rep.violations.empty() ? 0 : 2;
}

int run_signed_mc(int n, int trials, uint64_t seed, const CommonOpts& o) {
    McResult res;
    try {
        res = monte_carlo(n, trials, seed, o.workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    ordered_json header = config_header(
        "signed-mc", o, {{"n", n}, {"trials", trials}, {"seed", seed}});
    if (o.format == "csv") {
        std::cout << mc_csv(res.records);
        std::cerr << to_json(res.summary) << "\n";
    } else if (o.format == "json") {
        ordered_json doc;
        doc["config"] = header;
        ordered_json recs = ordered_json::array();
        for (const auto& r : res.records) recs.push_back(to_json(r));
        doc["records"] = recs;
        doc["summary"] = to_json(res.summary);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << header << "\n";
        for (const auto& r : res.records) std::cout << to_json(r) << "\n";
        std::cout << to_json(res.summary) << "\n";
    }
    return 0;
}

int run_signed_min(int n_max, const CommonOpts& o) {
    std::vector<ViolatorWitness> found;
    try {
        found = min_violator_search(n_max, o.workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << config_header("signed-min", o, {{"n_max", n_max}}) << "\n";
    for (const auto& w : found) {
        ordered_json j;
        j["schema"] = kSchemaVersion;
        j["type"] = "violator";
        j["n"] = w.n;
        j["m"] = w.m;
        j["signed_graph"] = write_signed_line(w.graph);
        j["k"] = w.k;
        j["excess"] = w.excess;
        std::cout << j << "\n";
    }
    return 0;
}

int run_report(const std::string& input, bool signed_input, const CommonOpts& o) {
    bool io_error = false;
    auto lines = input_lines(input, io_error);
    if (io_error) {
        std::cerr << "error: cannot read input: " << input << "\n";
        return 1;
    }
    ordered_json header = config_header("report", o, {{"input", input}, {"signed", signed_input}});
    ordered_json graphs = ordered_json::array();
    bool any_violation = false;
    bool any_parse_error = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        try {
            ordered_json j;
            j["line"] = i + 1;
            j["input"] = lines[i];
            if (signed_input) {
                SignedGraph sg = parse_signed_line(lines[i]);
                Spectrum sp = signed_spectrum(sg);
                ExcessProfile p = excess_profile(sp, sg.base.m(), o.tol);
                any_violation = any_violation || p.has_violation();
                j["n"] = sg.base.n();
                j["m"] = sg.base.m();
                j["spectrum"] = to_json(sp);
                j["profile"] = to_json(p);
            } else {
                Graph g = parse_graph6(lines[i]);
                Spectrum sp = spectrum_of(g, SpectrumKind::laplacian);
                ExcessProfile p = excess_profile(sp, g.m(), o.tol);
                CoverageReport cov = coverage_report(g, coverage_options(o));
                any_violation = any_violation || p.has_violation();
                DegreeStats ds = degree_stats(g);
                j["n"] = g.n();
                j["m"] = g.m();
                j["degrees"] = ds.degrees;
                j["degree_variance"] = ds.variance;
                j["spectrum"] = to_json(sp);
                j["profile"] = to_json(p);
                j["coverage"] = to_json(cov);
                j["verdicts"] = verdict_rows_json(p, cov);
            }
            graphs.push_back(j);
        } catch (const std::exception& e) {
            any_parse_error = true;
            std::cerr << "error: line " << (i + 1) << ": " << e.what() << "\n";
        }
    }
    ordered_json doc;
    doc["config"] = header;
    doc["graphs"] = graphs;
    std::cout << doc.dump(2) << "\n";
    if (any_parse_error) return 1;
    return any_violation ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brouwer-conjecture verification toolkit"};
    app.require_subcommand(1);

    CommonOpts o;

    std::string input;
    bool signed_input = false;
    auto* check = app.add_subcommand("check", "Excess profile and verdicts per graph");
    check->add_option("input", input, "graph6 line or file")->required();
    check->add_flag("--signed", signed_input, "Input lines are 'graph6<TAB>+-...'");
    check->add_option("--format", o.format, "jsonl or json");
    add_limit_flags(check, o);

    auto* certify = app.add_subcommand("certify", "Certificate coverage per graph");
    certify->add_option("input", input, "graph6 line or file")->required();
    certify->add_option("--format", o.format, "jsonl or json");
    add_limit_flags(certify, o);

    std::string mode = "certificates_first";
    auto* enumerate = app.add_subcommand("enumerate", "Verify a whole graph6 corpus");
    enumerate->add_option("input", input, "graph6 file")->required();
    enumerate->add_option("--mode", mode, "certificates_first or direct_only")
        ->check(CLI::IsMember({"certificates_first", "direct_only"}));
    add_limit_flags(enumerate, o);

    int n = 100, trials = 20, n_max = 5;
    uint64_t seed = 1;
    auto* mc = app.add_subcommand("signed-mc", "Monte Carlo over signed complete graphs");
    mc->add_option("--n", n, "Graph order")->required();
    mc->add_option("--trials", trials, "Trial count");
    mc->add_option("--seed", seed, "Master seed");
    mc->add_option("--format", o.format, "jsonl, json or csv");
    add_limit_flags(mc, o);

    auto* smin = app.add_subcommand("signed-min", "Exhaustive minimal signed violator search");
    smin->add_option("--n-max", n_max, "Largest order to enumerate (<= 6)");
    add_limit_flags(smin, o);

    auto* report = app.add_subcommand("report", "Full per-graph report");
    report->add_option("input", input, "graph6 line or file")->required();
    report->add_flag("--signed", signed_input, "Input lines are 'graph6<TAB>+-...'");
    add_limit_flags(report, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(input, signed_input, o);
        if (certify->parsed()) return run_certify(input, o);
        if (enumerate->parsed()) return run_enumerate(input, mode, o);
        if (mc->parsed()) return run_signed_mc(n, trials, seed, o);
        if (smin->parsed()) return run_signed_min(n_max, o);
        if (report->parsed()) return run_report(input, signed_input, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
