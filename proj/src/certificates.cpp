#include "brouwer/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace brouwer {

using i128 = __int128;

const char* cert_id_name(CertId id) {
    switch (id) {
        case CertId::TRIVIAL_K: return "TRIVIAL_K";
        case CertId::KN_BOUND: return "KN_BOUND";
        case CertId::SPECTRAL_DENSITY: return "SPECTRAL_DENSITY";
        case CertId::ARBORICITY: return "ARBORICITY";
        case CertId::MAX_DEGREE: return "MAX_DEGREE";
        case CertId::VARIANCE: return "VARIANCE";
        case CertId::POPOVICIU: return "POPOVICIU";
        case CertId::SPLITTANCE: return "SPLITTANCE";
        case CertId::SPLIT_EDIT: return "SPLIT_EDIT";
        case CertId::SPLIT_KNOWN: return "SPLIT_KNOWN";
    }
    return "?";
}

std::vector<int> Certificate::covered_list() const {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (covered[k]) out.push_back(k);
    return out;
}

long long Certificate::covered_count() const {
    long long c = 0;
    for (int k = 1; k <= n; ++k) c += covered[k];
    return c;
}

Certificate cert_trivial(const Graph& g) {
    const int n = g.n();
    Certificate c(CertId::TRIVIAL_K, n);
    c.cover(1);
    c.cover(2);
    c.cover(n);
    c.cover(n - 1);
    if (n >= 4) c.cover(n - 3);
    return c;
}

Certificate cert_kn(const Graph& g) {
    const int n = g.n();
    const long long m = g.m();
    Certificate c(CertId::KN_BOUND, n);
    for (int k = 1; k <= n; ++k)
        if (2LL * k * n <= 2 * m + static_cast<long long>(k) * (k + 1)) c.cover(k);
    return c;
}

Certificate cert_spectral_density(const Graph& g, const TBound& tb) {
    if (tb.value >= 1.0) throw std::invalid_argument("spectral density bound must be < 1");
    const int n = g.n();
    const double m = static_cast<double>(g.m());
    Certificate c(CertId::SPECTRAL_DENSITY, n);
    c.evidence["t"] = tb.value;
    c.evidence["t_exact"] = tb.exact ? 1.0 : 0.0;
    const double one_minus_t = 1.0 - tb.value;
    const double m_threshold = std::pow(2.0 * n, 1.5) / one_minus_t;
    c.evidence["m_threshold"] = m_threshold;
    if (m >= m_threshold * (1.0 + 1e-12)) {
        c.cover_all();
        return c;
    }
    const double k_min = 2.0 * std::cbrt(m) / std::pow(one_minus_t, 2.0 / 3.0);
    c.evidence["k_min"] = k_min;
    for (int k = 1; k <= n; ++k)
        if (static_cast<double>(k) >= k_min * (1.0 + 1e-12)) c.cover(k);
    if (g.m() == 0) c.cover_all();  // k_min = 0: every k qualifies
    return c;
}

Certificate cert_arboricity(const Graph& g, const ArborBound& ab) {
    Certificate c(CertId::ARBORICITY, g.n());
    c.evidence["arboricity_bound"] = static_cast<double>(ab.value);
    c.evidence["exact"] = ab.exact ? 1.0 : 0.0;
    c.cover_from(static_cast<int>(std::min<long long>(4 * ab.value - 1, g.n() + 1)));
    return c;
}

Certificate cert_max_degree(const Graph& g) {
    Certificate c(CertId::MAX_DEGREE, g.n());
    int maxdeg = 0;
    for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    c.evidence["max_degree"] = maxdeg;
    c.cover_from(2 * maxdeg + 3);
    return c;
}

Certificate cert_variance(const Graph& g, const DegreeStats& ds) {
    const i128 n = g.n();
    const i128 m = g.m();
    const i128 D = ds.sum_squares;
    Certificate c(CertId::VARIANCE, g.n());
    c.evidence["beta"] = 2.0 * static_cast<double>(g.m()) / (static_cast<double>(g.n()) * g.n());
    c.evidence["tau"] = static_cast<double>(ds.sum_squares) /
                        (static_cast<double>(g.n()) * g.n() * g.n());
    c.evidence["sum_squares"] = static_cast<double>(ds.sum_squares);
    c.evidence["variance"] = ds.variance;
    if (g.m() == 0) return c;
    // D * n^5 <= 8 m^2 (n^4 - 2 m n^2 + 2 m^2) - 2 m n^2, exactly.
    const i128 n2 = n * n;
    const i128 lhs = D * n2 * n2 * n;
    const i128 rhs = 8 * m * m * (n2 * n2 - 2 * m * n2 + 2 * m * m) - 2 * m * n2;
    c.evidence["holds"] = lhs <= rhs ? 1.0 : 0.0;
    if (lhs <= rhs) c.cover_all();
    return c;
}

Certificate cert_popoviciu(const Graph& g, const DegreeStats& ds) {
    const i128 n = g.n();
    const i128 m = g.m();
    Certificate c(CertId::POPOVICIU, g.n());
    const long long gap = ds.max_degree - ds.min_degree;
    c.evidence["max_degree"] = ds.max_degree;
    c.evidence["min_degree"] = ds.min_degree;
    c.evidence["degree_gap"] = static_cast<double>(gap);
    c.evidence["gap_bound"] =
        2.0 * ds.average * (g.n() - ds.average) / g.n() - 1.0;
    if (g.m() == 0) return c;
    // (max-min) <= 2 dbar (n - dbar)/n - 1 with dbar = 2m/n, exactly:
    // gap * n^3 <= 4 m (n^2 - 2m) - n^3.
    const i128 n3 = n * n * n;
    if (i128(gap) * n3 <= 4 * m * (n * n - 2 * m) - n3) c.cover_all();
    return c;
}

Certificate cert_splittance(const Graph& g, const Splittance& sp) {
    const int n = g.n();
    Certificate c(CertId::SPLITTANCE, n);
    c.evidence["splittance"] = static_cast<double>(sp.value);
    const i128 sigma2 = i128(sp.value) * sp.value;
    // full conjecture when sigma >= sqrt(2) n^{3/2}, i.e. sigma^2 >= 2 n^3
    if (sigma2 >= 2 * i128(n) * n * n) {
        c.cover_all();
        return c;
    }
    // k <= sigma / sqrt(8n), i.e. 8 n k^2 <= sigma^2
    for (int k = 1; k <= n; ++k) {
        if (8 * i128(n) * k * k <= sigma2)
            c.cover(k);
        else
            break;
    }
    return c;
}

Certificate cert_split_known(const Graph& g) {
    Certificate c(CertId::SPLIT_KNOWN, g.n());
    bool split = is_split(g);
    c.evidence["is_split"] = split ? 1.0 : 0.0;
    if (split) c.cover_all();
    return c;
}

SplitEditCheck split_edit_check(const Graph& g, const TopSet& ts) {
    SplitEditCheck r;
    r.k = ts.k;
    r.m1 = ts.m1;
    r.m2 = ts.m2;
    const int n = g.n();
    r.term_a = static_cast<double>(r.m1 - r.m2) + std::sqrt(2.0 * ts.k * r.m2);
    r.term_b = static_cast<double>(r.m2 - r.m1) + std::sqrt(2.0 * (n - ts.k) * r.m1);
    // term_a <= 0  iff  m2 >= m1 and 2k m2 <= (m2-m1)^2; likewise for term_b.
    bool a = r.m2 >= r.m1 && 2 * i128(ts.k) * r.m2 <= i128(r.m2 - r.m1) * (r.m2 - r.m1);
    bool b = r.m1 >= r.m2 && 2 * i128(n - ts.k) * r.m1 <= i128(r.m1 - r.m2) * (r.m1 - r.m2);
    r.covered = a || b;
    return r;
}

SplitEditCheck split_edit_check(const Graph& g, int k) {
    return split_edit_check(g, top_set(g, k));
}

Certificate cert_split_edit(const Graph& g) {
    Certificate c(CertId::SPLIT_EDIT, g.n());
    long long count = 0;
    for (int k = 1; k <= g.n(); ++k) {
        if (split_edit_check(g, k).covered) {
            c.cover(k);
            ++count;
        }
    }
    c.evidence["covered_count"] = static_cast<double>(count);
    return c;
}

SplitProximity split_proximity(const Graph& g, int k) {
    if (k < 1 || k > g.n()) throw std::out_of_range("split proximity index out of range");
    TopSet ts = top_set(g, k);
    SplitProximity r;
    r.k = k;
    r.m1 = ts.m1;
    r.m2 = ts.m2;
    const int n = g.n();
    r.edge_bound = k * std::sqrt(2.0 * n) - k;
    // m > k sqrt(2n) - k  iff  (m + k)^2 > 2 n k^2
    const i128 rhs = 2 * i128(n) * k * k;
    r.m1_exceeds = i128(r.m1 + k) * (r.m1 + k) > rhs;
    r.m2_exceeds = i128(r.m2 + k) * (r.m2 + k) > rhs;
    r.certified = r.m1_exceeds || r.m2_exceeds;
    return r;
}

namespace {

// l > k0 side: second failure needs l - k0 < (2n)^{1/4} l^{e} with e = 1/2
// (default) or 1/4 (variant). Both are exact integer predicates after
// raising to the fourth power.
bool window_pred_above(long long n, long long k0, long long l, bool quarter) {
    long long d = l - k0;
    if (d <= 0) return true;
    i128 lhs = i128(d) * d * d * d;
    i128 rhs = quarter ? 2 * i128(n) * l : 2 * i128(n) * l * l;
    return lhs < rhs;
}

bool window_pred_below(long long n, long long k0, long long l, bool quarter) {
    long long d = k0 - l;
    if (d <= 0) return true;
    i128 lhs = i128(d) * d * d * d;
    i128 rhs = quarter ? 2 * i128(n) * k0 : 2 * i128(n) * k0 * k0;
    return lhs < rhs;
}

}  // namespace

WindowInterval window_interval(int n, int k0, bool quarter_exponent_variant) {
    if (k0 < 1 || k0 > n) throw std::out_of_range("window index out of range");
    WindowInterval w;
    w.k0 = k0;
    // Largest l in [k0, n] satisfying the predicate; it holds at k0 and is
    // monotone (true then false) above it.
    int lo = k0, hi = n;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (window_pred_above(n, k0, mid, quarter_exponent_variant))
            lo = mid;
        else
            hi = mid - 1;
    }
    w.hi = lo;
    lo = 1;
    hi = k0;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (window_pred_below(n, k0, mid, quarter_exponent_variant))
            hi = mid;
        else
            lo = mid + 1;
    }
    w.lo = lo;
    return w;
}

const Certificate* CoverageReport::find(CertId id) const {
    for (const auto& c : certificates)
        if (c.id == id) return &c;
    return nullptr;
}

CoverageReport coverage_report(const Graph& g, const CoverageOptions& opt) {
    CoverageReport rep;
    rep.n = g.n();
    rep.m = g.m();

    DegreeStats ds = degree_stats(g);
    TBound tb = msd_t(g, opt.t_exact_limit, opt.workers);
    if (!tb.exact && is_bipartite(g)) tb.value = std::min(tb.value, 0.5);
    ArborBound ab = arboricity(g, opt.arboricity_exact_limit);
    if (opt.assume_planar && !ab.exact && ab.value > 3) {
        ab.value = 3;  // trusted, unverified class bound
    }
    Splittance sp = splittance(g);

    rep.certificates.push_back(cert_trivial(g));
    rep.certificates.push_back(cert_kn(g));
    rep.certificates.push_back(cert_spectral_density(g, tb));
    rep.certificates.push_back(cert_arboricity(g, ab));
    rep.certificates.push_back(cert_max_degree(g));
    rep.certificates.push_back(cert_variance(g, ds));
    rep.certificates.push_back(cert_popoviciu(g, ds));
    rep.certificates.push_back(cert_splittance(g, sp));
    rep.certificates.push_back(cert_split_edit(g));
    rep.certificates.push_back(cert_split_known(g));

    rep.covered_union.assign(rep.n + 1, 0);
    for (const auto& c : rep.certificates)
        for (int k = 1; k <= rep.n; ++k)
            if (c.covered[k]) rep.covered_union[k] = 1;
    for (int k = 1; k <= rep.n; ++k)
        if (!rep.covered_union[k]) rep.uncovered.push_back(k);

    rep.t_used = tb.value;
    rep.t_exact = tb.exact;
    rep.band_lo = static_cast<double>(rep.m) / rep.n;
    rep.band_hi = std::sqrt(8.0 * rep.n) / (1.0 - tb.value);
    return rep;
}

std::vector<VerdictRow> verdict_rows(const ExcessProfile& p, const CoverageReport& c) {
    std::vector<VerdictRow> rows;
    rows.reserve(p.n);
    for (int k = 1; k <= p.n; ++k) {
        VerdictRow r;
        r.k = k;
        r.status = p.verdict(k);
        r.excess = p.at(k);
        for (const auto& cert : c.certificates)
            if (cert.covers(k)) r.certificate_ids.push_back(cert.id);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace brouwer
