#pragma once

#include <string>
#include <vector>

#include "brouwer/graph.hpp"

namespace brouwer {

// Dense symmetric real matrix, row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    double trace() const;
    double frobenius() const;
};

SymMatrix laplacian(const Graph& g);           // D - A
SymMatrix adjacency(const Graph& g);           // A
SymMatrix signless_laplacian(const Graph& g);  // D + A

enum class SpectrumKind { laplacian, adjacency, signless, signed_laplacian };
const char* spectrum_kind_name(SpectrumKind k);

// Eigenvalues in descending order with cached prefix sums s_k.
struct Spectrum {
    SpectrumKind kind = SpectrumKind::laplacian;
    std::vector<double> values;  // descending
    double trace = 0.0;          // sum of values
    std::vector<double> prefix;  // prefix[i] = sum of values[0..i]

    int n() const { return static_cast<int>(values.size()); }
    double s(int k) const { return k == 0 ? 0.0 : prefix[static_cast<size_t>(k) - 1]; }
};

// Cyclic Jacobi to convergence (off-diagonal Frobenius norm <= 1e-12 of the
// full Frobenius norm). Deterministic for a fixed input. Throws on
// non-finite entries or (never observed) non-convergence.
Spectrum eig_sym(const SymMatrix& m, SpectrumKind kind);

Spectrum spectrum_of(const Graph& g, SpectrumKind kind);

// Ky Fan k-norm. For the adjacency kind this is the sum of the k largest
// singular values, i.e. the k largest |eigenvalue| taken greedily from both
// ends of the descending list; for positive-semidefinite kinds it is s_k.
double ky_fan(const Spectrum& s, int k);

// ||A||_(k) <= sqrt(2km) and ||A||_(k) <= n(sqrt(k)+1)/2.
struct KyFanBounds {
    double sqrt_2km = 0.0;
    double n_sqrtk_plus1_half = 0.0;
    double min() const { return sqrt_2km < n_sqrtk_plus1_half ? sqrt_2km : n_sqrtk_plus1_half; }
};
KyFanBounds adjacency_ky_fan_bounds(const Graph& g, int k);

// Maximum subgraph spectral density t(G) = max over nonempty S of
// rho(G[S])/|S|. Exact by enumeration of connected subsets when
// n <= limit; otherwise an upper bound (1/2 if bipartite, else 1-1/n)
// with exact=false. The enumeration may fan out over `workers` threads;
// the result is independent of the worker count.
struct TBound {
    double value = 0.0;
    bool exact = false;
    std::vector<int> witness;  // attaining subset when exact
};
TBound msd_t(const Graph& g, int limit = 18, int workers = 1);

}  // namespace brouwer
