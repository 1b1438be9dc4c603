#include "brouwer/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace brouwer {

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

double SymMatrix::frobenius() const {
    double f = 0.0;
    for (double v : a) f += v * v;
    return std::sqrt(f);
}

SymMatrix laplacian(const Graph& g) {
    SymMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.at(v, v) = g.degree(v);
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = -1.0;
    return m;
}

SymMatrix adjacency(const Graph& g) {
    SymMatrix m(g.n());
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = 1.0;
    return m;
}

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.at(v, v) = g.degree(v);
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) m.at(i, j) = m.at(j, i) = 1.0;
    return m;
}

const char* spectrum_kind_name(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::laplacian: return "laplacian";
        case SpectrumKind::adjacency: return "adjacency";
        case SpectrumKind::signless: return "signless";
        case SpectrumKind::signed_laplacian: return "signed_laplacian";
    }
    return "?";
}

namespace {

double offdiag_sq(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double v = a[static_cast<size_t>(p) * n + q];
            s += 2.0 * v * v;
        }
    return s;
}

}  // namespace

Spectrum eig_sym(const SymMatrix& m, SpectrumKind kind) {
    const int n = m.n;
    if (n < 1) throw std::invalid_argument("eig_sym on empty matrix");
    for (double v : m.a)
        if (!std::isfinite(v)) throw std::invalid_argument("eig_sym: non-finite entry");

    std::vector<double> a = m.a;
    double fro = m.frobenius();
    const double thresh_sq = (1e-12 * fro) * (1e-12 * fro);

    const int max_sweeps = 64;
    int sweep = 0;
    while (sweep < max_sweeps && offdiag_sq(a, n) > thresh_sq) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<size_t>(p) * n + q];
                if (apq == 0.0) continue;
                double app = a[static_cast<size_t>(p) * n + p];
                double aqq = a[static_cast<size_t>(q) * n + q];
                double theta = 0.5 * (aqq - app) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[static_cast<size_t>(p) * n + p] = app - t * apq;
                a[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<size_t>(p) * n + q] = 0.0;
                a[static_cast<size_t>(q) * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a[static_cast<size_t>(i) * n + p];
                    double aiq = a[static_cast<size_t>(i) * n + q];
                    double nip = aip - s * (aiq + tau * aip);
                    double niq = aiq + s * (aip - tau * aiq);
                    a[static_cast<size_t>(i) * n + p] = nip;
                    a[static_cast<size_t>(p) * n + i] = nip;
                    a[static_cast<size_t>(i) * n + q] = niq;
                    a[static_cast<size_t>(q) * n + i] = niq;
                }
            }
        }
        ++sweep;
    }
    if (sweep == max_sweeps && offdiag_sq(a, n) > thresh_sq)
        throw std::runtime_error("jacobi eigensolver failed to converge");

    Spectrum out;
    out.kind = kind;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a[static_cast<size_t>(i) * n + i];
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    out.prefix.resize(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += out.values[i];
        out.prefix[i] = acc;
    }
    out.trace = acc;
    return out;
}

Spectrum spectrum_of(const Graph& g, SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::laplacian: return eig_sym(laplacian(g), kind);
        case SpectrumKind::adjacency: return eig_sym(adjacency(g), kind);
        case SpectrumKind::signless: return eig_sym(signless_laplacian(g), kind);
        default: throw std::invalid_argument("spectrum_of: unsupported kind for a plain graph");
    }
}

double ky_fan(const Spectrum& s, int k) {
    const int n = s.n();
    if (k < 1 || k > n) throw std::out_of_range("ky_fan index out of range");
    if (s.kind != SpectrumKind::adjacency) return s.s(k);
    // Singular values of a symmetric matrix are |eigenvalues|: pick the k
    // largest by absolute value from the two ends of the descending list.
    double sum = 0.0;
    int lo = 0, hi = n - 1;
    for (int taken = 0; taken < k; ++taken) {
        if (s.values[lo] >= -s.values[hi])
            sum += s.values[lo++];
        else
            sum += -s.values[hi--];
    }
    return sum;
}

KyFanBounds adjacency_ky_fan_bounds(const Graph& g, int k) {
    if (k < 1 || k > g.n()) throw std::out_of_range("bound index out of range");
    KyFanBounds b;
    b.sqrt_2km = std::sqrt(2.0 * k * static_cast<double>(g.m()));
    b.n_sqrtk_plus1_half = g.n() * (std::sqrt(static_cast<double>(k)) + 1.0) / 2.0;
    return b;
}

namespace {

// Largest adjacency eigenvalue of the subgraph induced by `mask`.
double subset_rho(uint32_t mask, const std::vector<uint32_t>& nbr) {
    int verts[32];
    int s = 0;
    for (uint32_t m = mask; m; m &= m - 1) verts[s++] = std::countr_zero(m);
    if (s == 1) return 0.0;
    SymMatrix sub(s);
    for (int j = 1; j < s; ++j)
        for (int i = 0; i < j; ++i)
            if (nbr[verts[j]] & (1u << verts[i])) sub.at(i, j) = sub.at(j, i) = 1.0;
    Spectrum sp = eig_sym(sub, SpectrumKind::adjacency);
    return sp.values[0];
}

struct MsdBest {
    double value = 0.0;
    uint32_t mask = 0;

    void offer(double v, uint32_t m) {
        if (v > value || (v == value && (mask == 0 || m < mask))) {
            value = v;
            mask = m;
        }
    }
};

// Scan masks in [begin, end); only connected subsets can attain the maximum
// (the spectral radius of a disconnected subgraph already appears on one
// component with a smaller denominator).
MsdBest msd_scan(const std::vector<uint32_t>& nbr, uint32_t begin, uint32_t end) {
    MsdBest best;
    best.offer(0.0, 1);  // singleton {0}: density 0, the floor
    for (uint32_t mask = begin; mask < end; ++mask) {
        int size = std::popcount(mask);
        if (size < 2) {
            if (mask) best.offer(0.0, mask);
            continue;
        }
        // connectivity by bitmask flood fill
        uint32_t seen = mask & (~mask + 1);
        for (;;) {
            uint32_t grow = seen;
            for (uint32_t m = seen; m; m &= m - 1) grow |= nbr[std::countr_zero(m)] & mask;
            if (grow == seen) break;
            seen = grow;
        }
        if (seen != mask) continue;
        // cheap upper bounds on rho: max degree inside, and the
        // connected-graph bound sqrt(2e - s + 1)
        long long e = 0;
        int maxdeg = 0;
        for (uint32_t m = mask; m; m &= m - 1) {
            int d = std::popcount(nbr[std::countr_zero(m)] & mask);
            maxdeg = std::max(maxdeg, d);
            e += d;
        }
        e /= 2;
        double ub = std::min(static_cast<double>(maxdeg),
                             std::sqrt(std::max(0.0, 2.0 * e - size + 1.0)));
        if (ub / size + 1e-9 < best.value) continue;
        best.offer(subset_rho(mask, nbr) / size, mask);
    }
    return best;
}

}  // namespace

TBound msd_t(const Graph& g, int limit, int workers) {
    const int n = g.n();
    TBound tb;
    if (n > limit || n > 31) {
        tb.exact = false;
        tb.value = is_bipartite(g) ? 0.5 : 1.0 - 1.0 / n;
        return tb;
    }
    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (g.has_edge(u, v)) nbr[v] |= 1u << u;

    const uint32_t total = 1u << n;
    MsdBest best;
    workers = std::max(1, workers);
    if (workers == 1 || total < 4096) {
        best = msd_scan(nbr, 1, total);
    } else {
        std::vector<MsdBest> parts(workers);
        std::vector<std::thread> threads;
        uint32_t chunk = total / workers + 1;
        for (int w = 0; w < workers; ++w) {
            uint32_t b = 1 + static_cast<uint32_t>(w) * chunk;
            uint32_t e = std::min<uint64_t>(total, static_cast<uint64_t>(b) + chunk);
            if (b >= e) continue;
            threads.emplace_back([&, w, b, e] { parts[w] = msd_scan(nbr, b, e); });
        }
        for (auto& t : threads) t.join();
        best.offer(0.0, 1);
        for (const auto& p : parts)
            if (p.mask) best.offer(p.value, p.mask);
    }
    tb.exact = true;
    tb.value = best.value;
    for (uint32_t m = best.mask; m; m &= m - 1) tb.witness.push_back(std::countr_zero(m));
    return tb;
}

}  // namespace brouwer
