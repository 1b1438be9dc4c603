#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "brouwer/certificates.hpp"
#include "brouwer/graph.hpp"

namespace brouwer {

enum class CorpusMode { certificates_first, direct_only };
const char* corpus_mode_name(CorpusMode m);

struct CorpusViolation {
    long long line_no = 0;  // 1-based input line
    std::string graph6;
    int k = 0;
    double excess = 0.0;
};

struct CorpusSkipped {
    long long line_no = 0;
    std::string error;
};

struct TightSample {
    long long line_no = 0;
    std::string graph6;
    int k = 0;  // first tight index
};

struct CorpusReport {
    long long total_graphs = 0;
    long long total_pairs = 0;  // sum of n over graphs
    std::vector<CorpusViolation> violations;
    long long tight_graphs = 0;  // graphs with at least one TIGHT index (eigensolved ones)
    std::vector<TightSample> tight_samples;
    std::map<std::string, long long> covered_pairs;  // per-certificate (G,k) coverage
    long long eigensolved = 0;                       // graphs that needed a direct solve
    std::vector<CorpusSkipped> skipped;
    double wall_time_s = 0.0;

    double coverage_fraction(const std::string& cert) const;
};

struct CorpusOptions {
    CorpusMode mode = CorpusMode::certificates_first;
    int workers = 1;
    CoverageOptions coverage;
    double tol = -1.0;  // < 0: per-graph default tolerance
    size_t tight_sample_cap = 16;
    // Streaming hook, called in input order as violations are merged.
    std::function<void(const CorpusViolation&)> on_violation;
};

// Verify every graph6 line of `in`. Lines are processed by a bounded work
// queue (memory stays proportional to the worker count) and merged back in
// input order, so the report is identical for any worker count. Parse
// failures are recorded in `skipped` and the run continues.
CorpusReport verify_corpus(std::istream& in, const CorpusOptions& opt = {});
CorpusReport verify_corpus_file(const std::string& path, const CorpusOptions& opt = {});

// `count` random threshold graphs on n vertices, deterministic per seed.
std::vector<Graph> generate_threshold_corpus(int count, int n, uint64_t seed);

}  // namespace brouwer
