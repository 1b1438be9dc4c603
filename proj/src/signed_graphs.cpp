#include "brouwer/signed_graphs.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "brouwer/graph6.hpp"
#include "brouwer/rng.hpp"

namespace brouwer {

bool SignedGraph::all_plus() const {
    for (int8_t s : signs)
        if (s < 0) return false;
    return true;
}

SignedGraph sample_signed_complete(int n, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("signed complete graph needs n >= 2");
    SignedGraph sg(complete_graph(n));
    for (long long r = 0; r < sg.base.m(); ++r)
        sg.signs[r] = coin(seed, static_cast<uint64_t>(r)) ? 1 : -1;
    return sg;
}

SymMatrix signed_laplacian(const SignedGraph& sg) {
    const Graph& g = sg.base;
    SymMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.at(v, v) = g.degree(v);
    long long rank = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) {
                m.at(i, j) = m.at(j, i) = -static_cast<double>(sg.signs[rank]);
                ++rank;
            }
    return m;
}

Spectrum signed_spectrum(const SignedGraph& sg) {
    return eig_sym(signed_laplacian(sg), SpectrumKind::signed_laplacian);
}

SignedGraph parse_signed_line(std::string_view line) {
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
        throw std::invalid_argument("signed line needs 'graph6<TAB>signs'");
    SignedGraph sg(parse_graph6(line.substr(0, tab)));
    std::string_view signs = line.substr(tab + 1);
    while (!signs.empty() && (signs.back() == '\n' || signs.back() == '\r')) signs.remove_suffix(1);
    if (static_cast<long long>(signs.size()) != sg.base.m())
        throw std::invalid_argument("sign string length " + std::to_string(signs.size()) +
                                    ", expected " + std::to_string(sg.base.m()));
    for (size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == '+')
            sg.signs[i] = 1;
        else if (signs[i] == '-')
            sg.signs[i] = -1;
        else
            throw std::invalid_argument("sign characters must be '+' or '-'");
    }
    return sg;
}

std::string write_signed_line(const SignedGraph& sg) {
    std::string out = write_graph6(sg.base);
    out.push_back('\t');
    for (int8_t s : sg.signs) out.push_back(s > 0 ? '+' : '-');
    return out;
}

double semicircle_tail_mass(double theta) {
    double x = std::clamp(theta, -2.0, 2.0);
    // closed form of integral sqrt(4-t^2)/(2pi) dt over [x, 2]
    return (std::numbers::pi - x * std::sqrt(4.0 - x * x) / 2.0 - 2.0 * std::asin(x / 2.0)) /
           (2.0 * std::numbers::pi);
}

double semicircle_partial_mean(double theta) {
    double x = std::clamp(theta, -2.0, 2.0);
    return std::pow(4.0 - x * x, 1.5) / (6.0 * std::numbers::pi);
}

double semicircle_quantile(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("quantile index out of range");
    const double target = (static_cast<double>(k) - 0.5) / n;
    // tail_mass is strictly decreasing in theta
    double lo = -2.0, hi = 2.0;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        if (semicircle_tail_mass(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

int predicted_violation_k(int n) {
    double k = n - std::sqrt(static_cast<double>(n)) + 0.5;
    int rounded = static_cast<int>(std::floor(k + 0.5));
    return std::clamp(rounded, 1, n);
}

double SemicirclePredictor::theta(int k) const { return semicircle_quantile(n, k); }

double SemicirclePredictor::predicted_sk(int k) const {
    return static_cast<double>(k) * n +
           std::pow(static_cast<double>(n), 1.5) * semicircle_partial_mean(theta(k));
}

double SemicirclePredictor::predicted_excess_at(int k) const {
    double m = static_cast<double>(n) * (n - 1) / 2.0;
    return predicted_sk(k) - m - static_cast<double>(k) * (k + 1) / 2.0;
}

SemicirclePredictor predicted_profile(int n) {
    if (n < 16) throw std::invalid_argument("semicircle predictions need n >= 16");
    SemicirclePredictor p;
    p.n = n;
    p.predicted_k = predicted_violation_k(n);
    p.predicted_excess = n / 2.0;
    return p;
}

McRecord run_trial(int n, uint64_t trial_seed, int trial_index) {
    if (n < 5) throw std::invalid_argument("trial needs n >= 5");
    auto t0 = std::chrono::steady_clock::now();
    SignedGraph sg = sample_signed_complete(n, trial_seed);
    ExcessProfile p = excess_profile(signed_spectrum(sg), sg.base.m());
    McRecord rec;
    rec.n = n;
    rec.trial = trial_index;
    rec.seed = trial_seed;
    rec.kstar = p.max_k;
    rec.max_excess = p.max_excess;
    rec.excess_at_predicted_k = p.at(predicted_violation_k(n));
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

McResult monte_carlo(int n, int trials, uint64_t master_seed, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    McResult res;
    res.records.resize(trials);
    workers = std::max(1, std::min(workers, trials));
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= trials) break;
            res.records[t] = run_trial(n, derive_seed(master_seed, t), t);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    McSummary& s = res.summary;
    s.n = n;
    s.trials = trials;
    s.master_seed = master_seed;
    s.min_max_excess = res.records[0].max_excess;
    s.max_max_excess = res.records[0].max_excess;
    for (const auto& r : res.records) {
        s.mean_max_excess += r.max_excess;
        s.mean_kstar += r.kstar;
        s.mean_excess_at_predicted_k += r.excess_at_predicted_k;
        s.min_max_excess = std::min(s.min_max_excess, r.max_excess);
        s.max_max_excess = std::max(s.max_max_excess, r.max_excess);
    }
    s.mean_max_excess /= trials;
    s.mean_kstar /= trials;
    s.mean_excess_at_predicted_k /= trials;
    s.predicted_k = predicted_violation_k(n);
    s.predicted_excess = n / 2.0;
    return res;
}

namespace {

struct EnumHit {
    long long edge_mask = -1;
    long long sign_mask = -1;
    int k = 0;
    double excess = 0.0;
};

// Scan edge masks in [begin, end) for order n; record the first violating
// (edge_mask, sign_mask) per edge count m.
void violator_scan(int n, long long begin, long long end, std::vector<EnumHit>& per_m) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of_rank(pairs);
    for (int j = 1, r = 0; j < n; ++j)
        for (int i = 0; i < j; ++i, ++r) pair_of_rank[r] = {i, j};

    for (long long em = begin; em < end; ++em) {
        const int m = std::popcount(static_cast<unsigned long long>(em));
        if (m < 2) continue;  // a single edge is tight at k=1, never violating
        if (per_m[m].edge_mask >= 0) continue;  // already have the first witness for this m
        std::vector<std::pair<int, int>> present;
        present.reserve(m);
        for (int r = 0; r < pairs; ++r)
            if ((em >> r) & 1) present.push_back(pair_of_rank[r]);
        SymMatrix lap(n);
        for (const auto& [i, j] : present) {
            lap.at(i, i) += 1.0;
            lap.at(j, j) += 1.0;
        }
        for (long long sm = 0; sm < (1LL << m); ++sm) {
            for (int b = 0; b < m; ++b) {
                const auto& [i, j] = present[b];
                double a = ((sm >> b) & 1) ? 1.0 : -1.0;  // -tau: bit set means tau = -1
                lap.at(i, j) = a;
                lap.at(j, i) = a;
            }
            Spectrum sp = eig_sym(lap, SpectrumKind::signed_laplacian);
            ExcessProfile p = excess_profile(sp, m);
            if (p.has_violation()) {
                per_m[m] = {em, sm, p.max_k, p.max_excess};
                break;
            }
        }
    }
}

}  // namespace

std::vector<ViolatorWitness> min_violator_search(int n_max, int workers) {
    if (n_max < 2 || n_max > 6)
        throw std::invalid_argument("exhaustive signed search supports 2 <= n_max <= 6");
    std::vector<ViolatorWitness> out;
    workers = std::max(1, workers);
    for (int n = 2; n <= n_max; ++n) {
        const int pairs = n * (n - 1) / 2;
        const long long total = 1LL << pairs;
        std::vector<std::vector<EnumHit>> parts;
        if (workers == 1 || total < (1 << 12)) {
            parts.emplace_back(pairs + 1);
            violator_scan(n, 0, total, parts.back());
        } else {
            parts.assign(workers, std::vector<EnumHit>(pairs + 1));
            std::vector<std::thread> pool;
            long long chunk = (total + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                long long b = w * chunk, e = std::min(total, b + chunk);
                if (b >= e) continue;
                pool.emplace_back([&, w, b, e] { violator_scan(n, b, e, parts[w]); });
            }
            for (auto& th : pool) th.join();
        }
        // merge: first witness in (edge_mask, sign_mask) order per m
        for (int m = 2; m <= pairs; ++m) {
            EnumHit best;
            for (const auto& part : parts) {
                const EnumHit& h = part[m];
                if (h.edge_mask < 0) continue;
                if (best.edge_mask < 0 || h.edge_mask < best.edge_mask ||
                    (h.edge_mask == best.edge_mask && h.sign_mask < best.sign_mask))
                    best = h;
            }
            if (best.edge_mask < 0) continue;
            Graph base(n);
            std::vector<int8_t> signs;
            int b = 0;
            for (int j = 1, r = 0; j < n; ++j)
                for (int i = 0; i < j; ++i, ++r)
                    if ((best.edge_mask >> r) & 1) {
                        base.add_edge(i, j);
                        signs.push_back(((best.sign_mask >> b++) & 1) ? -1 : 1);
                    }
            ViolatorWitness w;
            w.n = n;
            w.m = m;
            w.graph = SignedGraph(std::move(base));
            w.graph.signs = std::move(signs);
            w.k = best.k;
            w.excess = best.excess;
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace brouwer
