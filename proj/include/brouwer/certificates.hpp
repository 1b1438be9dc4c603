#pragma once

#include <map>
#include <string>
#include <vector>

#include "brouwer/conjecture.hpp"
#include "brouwer/graph.hpp"
#include "brouwer/spectral.hpp"

namespace brouwer {

// Each certificate is a cheaply checkable sufficient condition that asserts
// the conjectured bound for a set of k without eigensolving. Comparisons
// against integer data are exact (128-bit products); comparisons involving
// radicals either use squared integer forms or widen by a relative 1e-12 in
// the direction that fails to certify.
enum class CertId {
    TRIVIAL_K,
    KN_BOUND,
    SPECTRAL_DENSITY,
    ARBORICITY,
    MAX_DEGREE,
    VARIANCE,
    POPOVICIU,
    SPLITTANCE,
    SPLIT_EDIT,
    SPLIT_KNOWN,
};
const char* cert_id_name(CertId id);
inline constexpr int kCertCount = 10;

struct Certificate {
    CertId id;
    int n = 0;
    std::vector<uint8_t> covered;  // index 1..n
    std::map<std::string, double> evidence;

    explicit Certificate(CertId cid, int nn) : id(cid), n(nn), covered(nn + 1, 0) {}
    bool covers(int k) const { return k >= 1 && k <= n && covered[k]; }
    void cover(int k) {
        if (k >= 1 && k <= n) covered[k] = 1;
    }
    void cover_from(int k0) {
        for (int k = std::max(1, k0); k <= n; ++k) covered[k] = 1;
    }
    void cover_all() { cover_from(1); }
    std::vector<int> covered_list() const;
    long long covered_count() const;
};

Certificate cert_trivial(const Graph& g);                             // k in {1,2,n-3,n-1,n}
Certificate cert_kn(const Graph& g);                                  // kn <= m + C(k+1,2)
Certificate cert_spectral_density(const Graph& g, const TBound& tb);  // k or m large vs t
Certificate cert_arboricity(const Graph& g, const ArborBound& ab);    // k >= 4*arb - 1
Certificate cert_max_degree(const Graph& g);                          // k >= 2*maxdeg + 3
Certificate cert_variance(const Graph& g, const DegreeStats& ds);     // degree second moment
Certificate cert_popoviciu(const Graph& g, const DegreeStats& ds);    // maxdeg - mindeg gap
Certificate cert_splittance(const Graph& g, const Splittance& sp);    // k <= sigma/sqrt(8n)
Certificate cert_split_known(const Graph& g);                         // split graphs: all k
Certificate cert_split_edit(const Graph& g);                          // per-k edit terms

// One k of the edit-term certificate: covered iff
// min{m1 - m2 + sqrt(2k m2), m2 - m1 + sqrt(2(n-k) m1)} <= 0,
// decided on squared integer forms.
struct SplitEditCheck {
    int k = 0;
    long long m1 = 0;
    long long m2 = 0;
    double term_a = 0.0;
    double term_b = 0.0;
    bool covered = false;
};
SplitEditCheck split_edit_check(const Graph& g, int k);
SplitEditCheck split_edit_check(const Graph& g, const TopSet& ts);

// Diagnostic for one k: a graph far from the degree-ordered split
// configuration cannot fail at k. Certified when m1 or m2 exceeds
// k*sqrt(2n) - k (exact on squared forms).
struct SplitProximity {
    int k = 0;
    double edge_bound = 0.0;  // k*sqrt(2n) - k
    long long m1 = 0;
    long long m2 = 0;
    bool m1_exceeds = false;
    bool m2_exceeds = false;
    bool certified = false;
};
SplitProximity split_proximity(const Graph& g, int k);

// Given one failing index k0, the only l-range where a second failure could
// coexist. Default exponent: |l - k0| < (2n)^{1/4} * max{k0,l}^{1/2}; the
// variant flag uses max{k0,l}^{1/4} instead. Integer predicates, bisected.
struct WindowInterval {
    int k0 = 0;
    int lo = 0;
    int hi = 0;
};
WindowInterval window_interval(int n, int k0, bool quarter_exponent_variant = false);

struct CoverageOptions {
    int t_exact_limit = 18;
    int arboricity_exact_limit = 20;
    bool assume_planar = false;  // trusted class bound: arboricity <= 3
    int workers = 1;
};

struct CoverageReport {
    int n = 0;
    long long m = 0;
    std::vector<Certificate> certificates;
    std::vector<uint8_t> covered_union;  // index 1..n
    std::vector<int> uncovered;
    // Residual region: any uncovered k satisfies m/n < k < sqrt(8n)/(1-t),
    // using the tightest available upper bound on t.
    double band_lo = 0.0;
    double band_hi = 0.0;
    double t_used = 0.0;
    bool t_exact = false;

    bool covers(int k) const { return k >= 1 && k <= n && covered_union[k]; }
    bool fully_covered() const { return uncovered.empty(); }
    const Certificate* find(CertId id) const;
};

CoverageReport coverage_report(const Graph& g, const CoverageOptions& opt = {});

// Per-k verdict row joining the direct profile with certificate coverage.
struct VerdictRow {
    int k = 0;
    Verdict status = Verdict::HOLDS;
    double excess = 0.0;
    std::vector<CertId> certificate_ids;
};
std::vector<VerdictRow> verdict_rows(const ExcessProfile& p, const CoverageReport& c);

}  // namespace brouwer
