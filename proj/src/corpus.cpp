#include "brouwer/corpus.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <istream>
#include <mutex>
#include <thread>

#include "brouwer/conjecture.hpp"
#include "brouwer/graph6.hpp"
#include "brouwer/rng.hpp"

namespace brouwer {

const char* corpus_mode_name(CorpusMode m) {
    return m == CorpusMode::certificates_first ? "certificates_first" : "direct_only";
}

double CorpusReport::coverage_fraction(const std::string& cert) const {
    auto it = covered_pairs.find(cert);
    if (it == covered_pairs.end() || total_pairs == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total_pairs);
}

namespace {

struct Batch {
    long long index = 0;
    std::vector<std::string> lines;  // raw input lines
    long long first_line_no = 0;
};

// Per-batch results, merged in batch order by the aggregator.
struct BatchResult {
    long long index = 0;
    long long graphs = 0;
    long long pairs = 0;
    long long eigensolved = 0;
    std::vector<CorpusViolation> violations;
    std::vector<TightSample> tights;       // one per tight graph (first tight k)
    long long tight_graphs = 0;
    std::vector<long long> covered_pairs;  // by CertId order
    std::vector<CorpusSkipped> skipped;
};

constexpr size_t kBatchLines = 64;

void process_line(const std::string& line, long long line_no, const CorpusOptions& opt,
                  BatchResult& out) {
    Graph g(1);
    try {
        g = parse_graph6(line);
    } catch (const std::exception& e) {
        out.skipped.push_back({line_no, e.what()});
        return;
    }
    ++out.graphs;
    out.pairs += g.n();

    bool need_direct = true;
    if (opt.mode == CorpusMode::certificates_first) {
        CoverageReport cov = coverage_report(g, opt.coverage);
        for (size_t c = 0; c < cov.certificates.size(); ++c)
            out.covered_pairs[static_cast<size_t>(cov.certificates[c].id)] +=
                cov.certificates[c].covered_count();
        need_direct = !cov.fully_covered();
    }
    if (!need_direct) return;

    ++out.eigensolved;
    ExcessProfile p = check_graph(g, opt.tol);
    bool tight_seen = false;
    for (int k = 1; k <= p.n; ++k) {
        Verdict v = p.verdict(k);
        if (v == Verdict::VIOLATED) {
            out.violations.push_back({line_no, write_graph6(g), k, p.at(k)});
        } else if (v == Verdict::TIGHT && !tight_seen) {
            tight_seen = true;
            ++out.tight_graphs;
            out.tights.push_back({line_no, write_graph6(g), k});
        }
    }
}

}  // namespace

CorpusReport verify_corpus(std::istream& in, const CorpusOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CorpusReport rep;
    const int workers = std::max(1, opt.workers);

    if (workers == 1) {
        std::string line;
        long long line_no = 0;
        BatchResult acc;
        acc.covered_pairs.assign(kCertCount, 0);
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            process_line(line, line_no, opt, acc);
            for (auto& v : acc.violations) {
                if (opt.on_violation) opt.on_violation(v);
                rep.violations.push_back(std::move(v));
            }
            acc.violations.clear();
            for (auto& t : acc.tights) {
                if (rep.tight_samples.size() < opt.tight_sample_cap)
                    rep.tight_samples.push_back(std::move(t));
            }
            acc.tights.clear();
            for (auto& s : acc.skipped) rep.skipped.push_back(std::move(s));
            acc.skipped.clear();
        }
        rep.total_graphs = acc.graphs;
        rep.total_pairs = acc.pairs;
        rep.eigensolved = acc.eigensolved;
        rep.tight_graphs = acc.tight_graphs;
        for (int c = 0; c < kCertCount; ++c)
            rep.covered_pairs[cert_id_name(static_cast<CertId>(c))] = acc.covered_pairs[c];
        rep.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    // Bounded queue of line batches; a reorder buffer merges results in
    // input order so aggregation is independent of scheduling.
    std::mutex mu;
    std::condition_variable cv_put, cv_get;
    std::deque<Batch> queue;
    bool done_reading = false;
    const size_t queue_cap = static_cast<size_t>(workers) * 4;

    std::map<long long, BatchResult> pending;  // out-of-order results
    long long next_merge = 0;
    std::mutex merge_mu;
    std::vector<long long> covered(kCertCount, 0);

    auto merge_ready = [&](BatchResult&& br) {
        // called with merge_mu held
        pending.emplace(br.index, std::move(br));
        auto it = pending.begin();
        while (it != pending.end() && it->first == next_merge) {
            BatchResult& r = it->second;
            rep.total_graphs += r.graphs;
            rep.total_pairs += r.pairs;
            rep.eigensolved += r.eigensolved;
            rep.tight_graphs += r.tight_graphs;
            for (int c = 0; c < kCertCount; ++c) covered[c] += r.covered_pairs[c];
            for (auto& v : r.violations) {
                if (opt.on_violation) opt.on_violation(v);
                rep.violations.push_back(std::move(v));
            }
            for (auto& t : r.tights)
                if (rep.tight_samples.size() < opt.tight_sample_cap)
                    rep.tight_samples.push_back(std::move(t));
            for (auto& s : r.skipped) rep.skipped.push_back(std::move(s));
            it = pending.erase(it);
            ++next_merge;
        }
    };

    auto worker_fn = [&] {
        for (;;) {
            Batch batch;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv_get.wait(lock, [&] { return !queue.empty() || done_reading; });
                if (queue.empty()) return;
                batch = std::move(queue.front());
                queue.pop_front();
            }
            cv_put.notify_one();
            BatchResult br;
            br.index = batch.index;
            br.covered_pairs.assign(kCertCount, 0);
            for (size_t i = 0; i < batch.lines.size(); ++i)
                if (!batch.lines[i].empty())
                    process_line(batch.lines[i], batch.first_line_no + static_cast<long long>(i),
                                 opt, br);
            {
                std::lock_guard<std::mutex> lock(merge_mu);
                merge_ready(std::move(br));
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);

    {
        std::string line;
        long long line_no = 0;
        long long batch_index = 0;
        Batch current;
        current.index = batch_index;
        current.first_line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (current.lines.empty()) current.first_line_no = line_no;
            current.lines.push_back(std::move(line));
            if (current.lines.size() >= kBatchLines) {
                std::unique_lock<std::mutex> lock(mu);
                cv_put.wait(lock, [&] { return queue.size() < queue_cap; });
                queue.push_back(std::move(current));
                lock.unlock();
                cv_get.notify_one();
                current = Batch{};
                current.index = ++batch_index;
            }
        }
        if (!current.lines.empty()) {
            std::unique_lock<std::mutex> lock(mu);
            cv_put.wait(lock, [&] { return queue.size() < queue_cap; });
            queue.push_back(std::move(current));
            lock.unlock();
            cv_get.notify_one();
        }
        {
            std::lock_guard<std::mutex> lock(mu);
            done_reading = true;
        }
        cv_get.notify_all();
    }
    for (auto& th : pool) th.join();

    for (int c = 0; c < kCertCount; ++c)
        rep.covered_pairs[cert_id_name(static_cast<CertId>(c))] = covered[c];
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CorpusReport verify_corpus_file(const std::string& path, const CorpusOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return verify_corpus(in, opt);
}

std::vector<Graph> generate_threshold_corpus(int count, int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("threshold corpus needs n >= 1");
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        uint64_t stream = derive_seed(seed, static_cast<uint64_t>(i));
        std::vector<bool> steps(n - 1);
        for (int s = 0; s + 1 < n; ++s) steps[s] = coin(stream, static_cast<uint64_t>(s));
        out.push_back(threshold_graph(steps));
    }
    return out;
}

}  // namespace brouwer
