#pragma once

#include <vector>

#include "brouwer/graph.hpp"
#include "brouwer/spectral.hpp"

namespace brouwer {

enum class Verdict { HOLDS, TIGHT, VIOLATED };
const char* verdict_name(Verdict v);

// Three-way tolerance: |excess| <= tol is TIGHT, above is VIOLATED.
inline double profile_tolerance(int n) { return 1e-6 * (n > 1 ? n : 1); }

// Per-k excess s_k - m - k(k+1)/2 with verdicts. Works for Laplacian,
// signless and signed-Laplacian spectra alike.
struct ExcessProfile {
    int n = 0;
    long long m = 0;
    double tol = 0.0;
    std::vector<double> excess;     // excess[k-1] for k = 1..n
    std::vector<Verdict> verdicts;  // same indexing
    int max_k = 0;                  // smallest k attaining the maximum excess
    double max_excess = 0.0;

    double at(int k) const { return excess[static_cast<size_t>(k) - 1]; }
    Verdict verdict(int k) const { return verdicts[static_cast<size_t>(k) - 1]; }
    bool has_violation() const;
    std::vector<int> violated_k() const;
    std::vector<int> tight_k() const;
};

// tol_override < 0 selects profile_tolerance(n).
ExcessProfile excess_profile(const Spectrum& s, long long m, double tol_override = -1.0);

// Eigensolve the Laplacian and profile it.
ExcessProfile check_graph(const Graph& g, double tol_override = -1.0);

// s_{n-k-1}(complement) - [n(n-k-1) - 2m + s_k(G)]; identically ~0.
// Requires 1 <= k <= n-2.
double complement_identity_residual(const Graph& g, int k);

// s_k(join_one(G)) - (n + k + s_{k-1}(G)); identically ~0. 1 <= k <= n.
double join_identity_residual(const Graph& g, int k);

}  // namespace brouwer
