#include "brouwer/conjecture.hpp"

#include <stdexcept>

namespace brouwer {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::TIGHT: return "TIGHT";
        case Verdict::VIOLATED: return "VIOLATED";
    }
    return "?";
}

bool ExcessProfile::has_violation() const {
    for (Verdict v : verdicts)
        if (v == Verdict::VIOLATED) return true;
    return false;
}

std::vector<int> ExcessProfile::violated_k() const {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (verdict(k) == Verdict::VIOLATED) out.push_back(k);
    return out;
}

std::vector<int> ExcessProfile::tight_k() const {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (verdict(k) == Verdict::TIGHT) out.push_back(k);
    return out;
}

ExcessProfile excess_profile(const Spectrum& s, long long m, double tol_override) {
    if (s.kind == SpectrumKind::adjacency)
        throw std::invalid_argument("excess profile needs a Laplacian-family spectrum");
    ExcessProfile p;
    p.n = s.n();
    p.m = m;
    p.tol = tol_override >= 0.0 ? tol_override : profile_tolerance(p.n);
    p.excess.resize(p.n);
    p.verdicts.resize(p.n);
    for (int k = 1; k <= p.n; ++k) {
        double bound = static_cast<double>(m) + static_cast<double>(k) * (k + 1) / 2.0;
        double e = s.s(k) - bound;
        p.excess[k - 1] = e;
        p.verdicts[k - 1] =
            e > p.tol ? Verdict::VIOLATED : (e >= -p.tol ? Verdict::TIGHT : Verdict::HOLDS);
        if (k == 1 || e > p.max_excess) {
            p.max_excess = e;
            p.max_k = k;
        }
    }
    return p;
}

ExcessProfile check_graph(const Graph& g, double tol_override) {
    return excess_profile(spectrum_of(g, SpectrumKind::laplacian), g.m(), tol_override);
}

double complement_identity_residual(const Graph& g, int k) {
    const int n = g.n();
    if (k < 1 || k > n - 2) throw std::out_of_range("complement identity needs 1 <= k <= n-2");
    Spectrum sg = spectrum_of(g, SpectrumKind::laplacian);
    Spectrum sc = spectrum_of(complement(g), SpectrumKind::laplacian);
    double expected = static_cast<double>(n) * (n - k - 1) - 2.0 * static_cast<double>(g.m()) + sg.s(k);
    return sc.s(n - k - 1) - expected;
}

double join_identity_residual(const Graph& g, int k) {
    const int n = g.n();
    if (k < 1 || k > n) throw std::out_of_range("join identity needs 1 <= k <= n");
    Spectrum sg = spectrum_of(g, SpectrumKind::laplacian);
    Spectrum sj = spectrum_of(join_one(g), SpectrumKind::laplacian);
    return sj.s(k) - (n + k + sg.s(k - 1));
}

}  // namespace brouwer
