#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace brouwer {

inline constexpr int kMaxVertices = 4096;

// Undirected simple graph on vertices {0..n-1}. Adjacency is a symmetric
// bit matrix stored as packed 64-bit rows; the edge count is cached.
// Construct, add edges, then share freely: nothing here mutates after
// construction, so graphs are safe to read from many threads.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    long long m() const { return m_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }

    // Adds {u,v}; u != v required, re-adding an existing edge is a no-op.
    void add_edge(int u, int v);

    int degree(int v) const;

    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * words_; }

    // Edges in rank order: (i,j) with i<j sorted by (j,i); rank(i,j) = j(j-1)/2 + i.
    // This is also the graph6 bit order and the order signed edge labels use.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_;
    int words_;
    long long m_;
    std::vector<uint64_t> rows_;
};

inline long long edge_rank(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<long long>(j) * (j - 1) / 2 + i;
}

// Constructions.
Graph complement(const Graph& g);
Graph join_one(const Graph& g);                       // add one dominating vertex
Graph add_isolated(const Graph& g);                   // add one isolated vertex
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Small builders used across the toolkit and its tests.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, center is vertex 0
Graph random_graph(int n, uint64_t seed);             // each edge a fair coin
Graph random_graph(int n, double p, uint64_t seed);

// Degree data. `variance` uses the population (1/n) convention.
struct DegreeStats {
    std::vector<int> degrees;         // in vertex order
    std::vector<int> sorted;          // descending
    int max_degree = 0;
    int min_degree = 0;
    double average = 0.0;             // 2m/n
    long long sum_squares = 0;        // sum of d_v^2
    double variance = 0.0;            // sum_squares/n - (2m/n)^2
};
DegreeStats degree_stats(const Graph& g);

// The k vertices of highest degree, ties broken by smallest index, with the
// edge-edit evidence around the split (S_k, complement):
//   e_inside  = edges inside S_k          m1 = missing edges inside S_k
//   e_outside = edges inside complement   m2 = e_outside
struct TopSet {
    int k = 0;
    std::vector<int> members;
    long long e_inside = 0;
    long long e_outside = 0;
    long long m1 = 0;
    long long m2 = 0;
};
TopSet top_set(const Graph& g, int k);

// Minimum edge-edit distance to a split graph, by the Hammer-Simeone
// degree-sequence minimum; witness_k is the smallest index attaining it.
struct Splittance {
    long long value = 0;
    int witness_k = 0;
};
Splittance splittance(const Graph& g);

// Arboricity. Exact Nash-Williams maximum over vertex subsets when
// n <= exact_limit, otherwise the floor(max_degree/2)+1 upper bound.
struct ArborBound {
    long long value = 0;
    bool exact = false;
};
ArborBound arboricity(const Graph& g, int exact_limit = 20);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_split(const Graph& g);
bool is_threshold(const Graph& g);

// Threshold-graph construction: starting from K_1, apply each step in order
// (true = join a dominating vertex, false = add an isolated vertex).
Graph threshold_graph(const std::vector<bool>& join_steps);

}  // namespace brouwer
