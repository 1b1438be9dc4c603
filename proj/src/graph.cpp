#include "brouwer/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "brouwer/rng.hpp"

namespace brouwer {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside [1," + std::to_string(kMaxVertices) + "]");
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    if (has_edge(u, v)) return;
    rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++m_;
}

int Graph::degree(int v) const {
    const uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (!g.has_edge(i, j)) h.add_edge(i, j);
    return h;
}

Graph join_one(const Graph& g) {
    Graph h(g.n() + 1);
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) h.add_edge(i, j);
    for (int v = 0; v < g.n(); ++v) h.add_edge(v, g.n());
    return h;
}

Graph add_isolated(const Graph& g) {
    Graph h(g.n() + 1);
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) h.add_edge(i, j);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n() + b.n() > kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds the vertex cap");
    Graph h(a.n() + b.n());
    for (int j = 1; j < a.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (a.has_edge(i, j)) h.add_edge(i, j);
    for (int j = 1; j < b.n(); ++j)
        for (int i = 0; i < j; ++i)
            if (b.has_edge(i, j)) h.add_edge(a.n() + i, a.n() + j);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != s.size())
        throw std::invalid_argument("duplicate vertices in subgraph set");
    if (verts.front() < 0 || verts.back() >= g.n())
        throw std::out_of_range("subgraph vertex out of range");
    Graph h(static_cast<int>(verts.size()));
    for (size_t j = 1; j < verts.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph random_graph(int n, uint64_t seed) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(seed, static_cast<uint64_t>(edge_rank(i, j)))) g.add_edge(i, j);
    return g;
}

Graph random_graph(int n, double p, uint64_t seed) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (uniform01(seed, static_cast<uint64_t>(edge_rank(i, j))) < p) g.add_edge(i, j);
    return g;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats ds;
    ds.degrees.resize(g.n());
    for (int v = 0; v < g.n(); ++v) ds.degrees[v] = g.degree(v);
    ds.sorted = ds.degrees;
    std::sort(ds.sorted.begin(), ds.sorted.end(), std::greater<int>());
    ds.max_degree = ds.sorted.front();
    ds.min_degree = ds.sorted.back();
    ds.average = 2.0 * static_cast<double>(g.m()) / g.n();
    for (int d : ds.degrees) ds.sum_squares += static_cast<long long>(d) * d;
    ds.variance = static_cast<double>(ds.sum_squares) / g.n() - ds.average * ds.average;
    return ds;
}

namespace {

// Vertices sorted by descending degree, ties by ascending index.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> deg(g.n()), order(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    return order;
}

long long edges_within(const Graph& g, const std::vector<int>& verts) {
    long long e = 0;
    for (size_t j = 1; j < verts.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (g.has_edge(verts[i], verts[j])) ++e;
    return e;
}

}  // namespace

TopSet top_set(const Graph& g, int k) {
    if (k < 1 || k > g.n()) throw std::out_of_range("top set size out of range");
    std::vector<int> order = degree_order(g);
    TopSet ts;
    ts.k = k;
    ts.members.assign(order.begin(), order.begin() + k);
    std::sort(ts.members.begin(), ts.members.end());
    std::vector<int> rest(order.begin() + k, order.end());
    ts.e_inside = edges_within(g, ts.members);
    ts.e_outside = edges_within(g, rest);
    ts.m1 = static_cast<long long>(k) * (k - 1) / 2 - ts.e_inside;
    ts.m2 = ts.e_outside;
    return ts;
}

Splittance splittance(const Graph& g) {
    DegreeStats ds = degree_stats(g);
    const auto& d = ds.sorted;
    const int n = g.n();
    long long suffix = 0;  // sum of degrees after position k
    for (int v : d) suffix += v;
    long long prefix = 0;
    Splittance best;
    best.value = suffix / 2;  // k = 0: all degrees in the tail
    best.witness_k = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        suffix -= d[k - 1];
        long long twice = static_cast<long long>(k) * (k - 1) - prefix + suffix;
        if (twice / 2 < best.value) {
            best.value = twice / 2;
            best.witness_k = k;
        }
    }
    return best;
}

ArborBound arboricity(const Graph& g, int exact_limit) {
    ArborBound ab;
    if (g.m() == 0) {
        ab.value = 0;
        ab.exact = true;
        return ab;
    }
    const int n = g.n();
    if (n <= exact_limit && n <= 25) {
        // Nash-Williams: max over |S| >= 2 of ceil(e(S) / (|S|-1)). Edge counts
        // for every subset by removing the lowest vertex of each mask.
        std::vector<uint32_t> nbr(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v)) nbr[v] |= 1u << u;
        const size_t total = size_t(1) << n;
        std::vector<uint16_t> ecount(total, 0);
        long long best = 1;
        for (size_t mask = 1; mask < total; ++mask) {
            int v = std::countr_zero(mask);
            size_t rest = mask & (mask - 1);
            ecount[mask] =
                static_cast<uint16_t>(ecount[rest] + std::popcount(nbr[v] & static_cast<uint32_t>(rest)));
            int sz = std::popcount(mask);
            if (sz >= 2 && ecount[mask] > 0) {
                long long r = (ecount[mask] + sz - 2) / (sz - 1);  // ceil
                if (r > best) best = r;
            }
        }
        ab.value = best;
        ab.exact = true;
    } else {
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        ab.value = maxdeg / 2 + 1;
        ab.exact = false;
    }
    return ab;
}

bool is_connected(const Graph& g) {
    const int n = g.n();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && g.has_edge(v, u)) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_split(const Graph& g) { return splittance(g).value == 0; }

bool is_threshold(const Graph& g) {
    // Peel dominating or isolated vertices until nothing is left.
    const int n = g.n();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 1) {
        int pick = -1;
        bool dominating = false;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            if (deg[v] == remaining - 1) {
                pick = v;
                dominating = true;
            } else if (deg[v] == 0) {
                pick = v;
            }
        }
        if (pick < 0) return false;
        alive[pick] = 0;
        --remaining;
        if (dominating)
            for (int u = 0; u < n; ++u)
                if (alive[u] && g.has_edge(pick, u)) --deg[u];
    }
    return true;
}

Graph threshold_graph(const std::vector<bool>& join_steps) {
    Graph g(1);
    for (bool join : join_steps) g = join ? join_one(g) : add_isolated(g);
    return g;
}

}  // namespace brouwer
