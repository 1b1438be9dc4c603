#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "brouwer/conjecture.hpp"
#include "brouwer/graph.hpp"
#include "brouwer/spectral.hpp"

namespace brouwer {

// A graph with a +-1 label per edge, labels indexed by edge rank
// (the graph6 bit order).
struct SignedGraph {
    Graph base;
    std::vector<int8_t> signs;

    SignedGraph() : base(1) {}
    explicit SignedGraph(Graph g) : base(std::move(g)), signs(base.m(), 1) {}

    bool all_plus() const;
};

// K_n with each sign an independent fair draw: sign(rank) = +1 when
// hash64(seed, rank) is odd, else -1. Layout-independent and reproducible.
SignedGraph sample_signed_complete(int n, uint64_t seed);

// D - A with A carrying the signs: all-plus gives the Laplacian, all-minus
// the signless Laplacian.
SymMatrix signed_laplacian(const SignedGraph& sg);
Spectrum signed_spectrum(const SignedGraph& sg);

// CLI line format: graph6, one tab, then one '+'/'-' per edge in rank order.
SignedGraph parse_signed_line(std::string_view line);
std::string write_signed_line(const SignedGraph& sg);

// Semicircle density rho(x) = sqrt((4-x^2)_+)/(2pi) and its tail integrals.
double semicircle_tail_mass(double theta);        // integral of rho over [theta, 2]
double semicircle_partial_mean(double theta);     // integral of x rho(x) = (4-theta^2)^{3/2}/(6pi)

// theta_k solving n * tail_mass(theta) = k - 1/2, by bisection on [-2,2].
double semicircle_quantile(int n, int k);

// Index the theory singles out: round-half-up of n - sqrt(n) + 1/2.
int predicted_violation_k(int n);

// Random-matrix predictions for signed complete graphs of order n (n >= 16):
// s_k ~ kn + n^{3/2} (4 - theta_k^2)^{3/2} / (6 pi), peak excess ~ n/2.
struct SemicirclePredictor {
    int n = 0;
    int predicted_k = 0;
    double predicted_excess = 0.0;  // n/2
    double theta(int k) const;
    double predicted_sk(int k) const;
    double predicted_excess_at(int k) const;  // predicted_sk - m - k(k+1)/2
};
SemicirclePredictor predicted_profile(int n);

// One Monte Carlo trial: sample, eigensolve, profile. Deterministic in
// (n, seed, trial); runtime_ms is wall-clock metadata, not part of the
// reproducible payload.
struct McRecord {
    int n = 0;
    int trial = 0;
    uint64_t seed = 0;
    int kstar = 0;
    double max_excess = 0.0;
    double excess_at_predicted_k = 0.0;
    double runtime_ms = 0.0;
};
McRecord run_trial(int n, uint64_t trial_seed, int trial_index);

struct McSummary {
    int n = 0;
    int trials = 0;
    uint64_t master_seed = 0;
    double mean_max_excess = 0.0;
    double min_max_excess = 0.0;
    double max_max_excess = 0.0;
    double mean_kstar = 0.0;
    double mean_excess_at_predicted_k = 0.0;
    int predicted_k = 0;
    double predicted_excess = 0.0;
};

struct McResult {
    std::vector<McRecord> records;
    McSummary summary;
};

// Trial seeds are derive_seed(master_seed, trial), so the record set is
// identical for any worker count.
McResult monte_carlo(int n, int trials, uint64_t master_seed, int workers = 1);

// Exhaustive search over all signed graphs with up to n_max <= 6 vertices
// (edge subsets x sign patterns). Returns one witness per (n, m) pair that
// admits a violation, ordered by (n, m); the witness is the first violating
// configuration in enumeration order.
struct ViolatorWitness {
    int n = 0;
    long long m = 0;
    SignedGraph graph;
    int k = 0;
    double excess = 0.0;
};
std::vector<ViolatorWitness> min_violator_search(int n_max, int workers = 1);

}  // namespace brouwer
