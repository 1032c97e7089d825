#include "shortc2/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace shortc2 {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct XPair {
    XComplex x, y;
};

XPair push_x(const HenonMap& H, const ComplexPair& z, long long n) {
    XComplex x(z.x), y(z.y);
    for (long long k = 0; k < n; ++k) step(H, x, y);
    return {x, y};
}

ComplexPair pull_to_double(const HenonMap& H, const XPair& p, long long n) {
    XComplex x = p.x, y = p.y;
    for (long long k = 0; k < n; ++k) step_back(H, x, y);
    ComplexPair out{x.to_complex(), y.to_complex()};
    if (!std::isfinite(out.x.real()) || !std::isfinite(out.x.imag()) ||
        !std::isfinite(out.y.real()) || !std::isfinite(out.y.imag()))
        throw Error("orbit-overflow",
                    "pulled-back sample exceeds double range");
    return out;
}

// Steps until H^k(z) lies in V+_R, or cap+1 if that does not happen.
long long entry_time_at(const HenonMap& H, const ComplexPair& z, double R,
                        long long cap) {
    const double thr = std::log(R);
    XComplex x(z.x), y(z.y);
    for (long long k = 0; k <= cap; ++k) {
        double ly = y.log_abs();
        if (ly >= x.log_abs() && ly >= thr) return k;
        step(H, x, y);
        if (!x.finite() || !y.finite())
            throw Error("orbit-overflow", "non-finite value while locating V+ entry");
    }
    return cap + 1;
}

GreenEstimate certify_endpoint(const HenonMap& H, const ComplexPair& z, double c) {
    GreenEstimate g = green_plus(H, z, std::min(1e-9, c * 1e-6));
    if (g.undecided || !g.escaped)
        throw Error("endpoint-undecided", "membership in Omega'_c unresolved");
    if (!(g.value + g.error_bound < c))
        throw Error("endpoint-undecided", "endpoint not certified below level c");
    return g;
}

} // namespace

SampledPath connect_points(const HenonMap& H, const ComplexPair& A,
                           const ComplexPair& B, LevelSpec level) {
    if (!(level.c > 0.0)) throw Error("bad-level", "level c must be positive");
    const double c = level.c;
    const int d = H.degree();

    GreenEstimate gA = certify_endpoint(H, A, c);
    GreenEstimate gB = certify_endpoint(H, B, c);
    if (A.x == B.x && A.y == B.y) {
        SampledPath degenerate;
        degenerate.points = {A, B};
        degenerate.certificates = {gA, gA};
        return degenerate;
    }

    const double c1 = std::max(gA.value + gA.error_bound, gB.value + gB.error_bound);
    const double slack = c - c1;

    // Least n0 such that d^{n0}(c - c1) > 4 eps and both images reach
    // V+_{R_eps}; eps = min(1, d^{n0} slack / 8) keeps the margin at factor 8
    // while letting R_eps shrink toward R0 as n0 grows.
    long long n0 = -1;
    double dn = 1.0;
    for (int n = 0; n <= 60; ++n, dn *= d) {
        double e = std::min(1.0, dn * slack / 8.0);
        double Re = r_epsilon(H, e);
        if (entry_time_at(H, A, Re, n) <= n && entry_time_at(H, B, Re, n) <= n) {
            n0 = n;
            break;
        }
    }
    if (n0 < 0) throw Error("path-too-wild", "no admissible push level found");

    XPair Ap = push_x(H, A, n0);
    XPair Bp = push_x(H, B, n0);
    bool swapped = Ap.y.log_abs() > Bp.y.log_abs();
    if (swapped) std::swap(Ap, Bp);

    const double LA = Ap.y.log_abs();
    const double LB = Bp.y.log_abs();
    const double thA = Ap.y.arg();
    const double thB = Bp.y.arg();
    double dth = std::remainder(thB - thA, 2.0 * kPi);

    std::vector<XPair> sigma;
    sigma.push_back(Ap);
    // Leg 1: |y| from LA to LB at fixed arg, x shrinking linearly to 0.
    int k1 = std::clamp(static_cast<int>(std::ceil((LB - LA) / 0.25)), 2, 1 << 15);
    for (int i = 1; i <= k1; ++i) {
        double t = static_cast<double>(i) / k1;
        XComplex y = XComplex::from_log_polar(LA + (LB - LA) * t, thA);
        XComplex x = XComplex(1.0 - t) * Ap.x;
        sigma.push_back({x, y});
    }
    // Leg 2: rotate arg y along the shortest arc at x = 0.
    int k2 = std::clamp(static_cast<int>(std::ceil(std::abs(dth) / 0.2)), 2, 1 << 12);
    for (int i = 1; i <= k2; ++i) {
        double t = static_cast<double>(i) / k2;
        sigma.push_back({XComplex(), XComplex::from_log_polar(LB, thA + dth * t)});
    }
    // Leg 3: x from 0 to the target, y fixed.
    int k3 = 8;
    for (int i = 1; i <= k3; ++i) {
        double t = static_cast<double>(i) / k3;
        sigma.push_back({XComplex(t) * Bp.x, Bp.y});
    }
    sigma.back() = Bp;

    SampledPath out;
    out.refinement_tol = kPi / 4.0;
    out.points.reserve(sigma.size());
    for (const auto& s : sigma) out.points.push_back(pull_to_double(H, s, n0));

    // Certify at the sigma level and transfer through G+(H^{-1}w) = G+(w)/d,
    // which is exact. On V+ the tail majorant pins G+ to log|y| within
    // gap(|y|) = 4C/((2d-1)|y|), so each sample encloses its own value; the
    // eps-sized allowance covers the backward-stable pull and the final
    // rounding to doubles. Re-running green_plus down at depth n0 instead
    // would push the sample forward through p(y) - a x cancellations and
    // (rightly) come back undecided once n0 is large.
    const double lgC = std::log(4.0 * tail_constant(H) / (2.0 * d - 1.0));
    const double dn0 = std::pow(static_cast<double>(d), static_cast<double>(n0));
    const double ulp = std::numeric_limits<double>::epsilon();
    out.certificates.reserve(sigma.size());
    for (const auto& s : sigma) {
        double ly = s.y.log_abs();
        GreenEstimate g;
        g.value = ly / dn0;
        double gap = std::exp(lgC - ly); // < log R0 <= ly for every admissible R_eps
        double transfer = 512.0 * (static_cast<double>(n0) + 1.0) * ulp *
                          std::max(1.0, std::abs(ly));
        g.error_bound = (gap + transfer) / dn0;
        g.iterations = n0;
        g.escaped = true;
        out.certificates.push_back(g);
    }

    if (swapped) {
        std::reverse(out.points.begin(), out.points.end());
        std::reverse(out.certificates.begin(), out.certificates.end());
    }
    out.points.front() = A;
    out.points.back() = B;
    out.certificates.front() = gA;
    out.certificates.back() = gB;

    for (const auto& g : out.certificates)
        if (!(g.value - g.error_bound > 0.0) || !(g.value + g.error_bound < c))
            throw Error("path-too-wild", "constructed sample failed certification");
    return out;
}

SampledPath canonical_loop(const HenonMap& H, long long m, double eps) {
    const double Rp = r_epsilon(H, eps) + 0.75;
    SampledPath out;
    out.refinement_tol = kPi / 4.0;
    if (m == 0) {
        out.points = {{{0.0, 0.0}, {Rp, 0.0}}, {{0.0, 0.0}, {Rp, 0.0}}};
        return out;
    }
    long long N = 64 * std::llabs(m);
    out.points.reserve(N + 1);
    for (long long i = 0; i <= N; ++i) {
        double ang = 2.0 * kPi * static_cast<double>(m) * i / N;
        out.points.push_back(
            {{0.0, 0.0}, {Rp * std::cos(ang), Rp * std::sin(ang)}});
    }
    out.points.back() = out.points.front();
    return out;
}

namespace {

double xlog_dist(const XComplex& a, const XComplex& b) { return (a - b).log_abs(); }

bool pulled_close(const XPair& a, const XPair& b) {
    double scale = std::max({0.0, a.x.log_abs(), b.x.log_abs(), a.y.log_abs(),
                             b.y.log_abs()});
    double lim = std::log(0.25) + scale;
    return xlog_dist(a.x, b.x) <= lim && xlog_dist(a.y, b.y) <= lim;
}

// Subdivides at the source level (where chords are meaningful) and tests
// closeness on the pulled images; emits the refined source polyline alongside
// so the caller can record an exact point-for-point H^{-n} correspondence.
void pull_rec(const HenonMap& H, const ComplexPair& za, const ComplexPair& zb,
              const XPair& pa, const XPair& pb, int n, int depth,
              std::vector<ComplexPair>& src, std::vector<XPair>& out) {
    if (pulled_close(pa, pb)) {
        src.push_back(zb);
        out.push_back(pb);
        return;
    }
    if (depth >= 24) throw Error("path-too-wild", "pull-back refinement depth exceeded");
    ComplexPair zm{0.5 * (za.x + zb.x), 0.5 * (za.y + zb.y)};
    XComplex x(zm.x), y(zm.y);
    for (int k = 0; k < n; ++k) step_back(H, x, y);
    XPair pm{x, y};
    pull_rec(H, za, zm, pa, pm, n, depth + 1, src, out);
    pull_rec(H, zm, zb, pm, pb, n, depth + 1, src, out);
}

} // namespace

SampledPath pull_back_loop(const HenonMap& H, const SampledPath& loop, int n) {
    if (n < 1) throw Error("bad-budget", "pull-back count must be >= 1");
    if (loop.points.size() < 2 ||
        !(loop.points.front().x == loop.points.back().x &&
          loop.points.front().y == loop.points.back().y))
        throw Error("path-too-wild", "loop must be exactly closed");

    // When the input is itself a pull-back, restart from its base loop at the
    // combined depth. Refining the input's own chords would interpolate
    // between deep samples whose midpoints are inverse images of nothing, and
    // the flat (base, total) record lets winding_class divide once, exactly.
    const SampledPath* base = &loop;
    int total = n;
    if (loop.source && loop.pulled > 0) {
        base = loop.source.get();
        if (loop.pulled > (1 << 20) - n)
            throw Error("bad-budget", "pull-back depth overflow");
        total = loop.pulled + n;
    }

    std::vector<XPair> pulled;
    std::vector<ComplexPair> srcpts;
    auto pull_pt = [&](const ComplexPair& z) {
        XComplex x(z.x), y(z.y);
        for (int k = 0; k < total; ++k) {
            step_back(H, x, y);
            if (!x.finite() || !y.finite())
                throw Error("orbit-overflow", "non-finite inverse orbit value");
        }
        return XPair{x, y};
    };

    XPair prev = pull_pt(base->points.front());
    pulled.push_back(prev);
    srcpts.push_back(base->points.front());
    for (size_t i = 1; i < base->points.size(); ++i) {
        XPair cur = pull_pt(base->points[i]);
        pull_rec(H, base->points[i - 1], base->points[i], prev, cur, total, 0,
                 srcpts, pulled);
        prev = cur;
    }

    SampledPath out;
    out.refinement_tol = loop.refinement_tol;
    out.points.reserve(pulled.size());
    for (const auto& p : pulled) {
        ComplexPair z{p.x.to_complex(), p.y.to_complex()};
        if (!std::isfinite(z.x.real()) || !std::isfinite(z.x.imag()) ||
            !std::isfinite(z.y.real()) || !std::isfinite(z.y.imag()))
            throw Error("orbit-overflow", "pulled-back loop exceeds double range");
        out.points.push_back(z);
    }
    out.points.back() = out.points.front();
    srcpts.back() = srcpts.front();

    auto src = std::make_shared<SampledPath>();
    src->refinement_tol = base->refinement_tol;
    src->points = std::move(srcpts);
    out.source = std::move(src);
    out.pulled = total;
    return out;
}

SampledPath push_forward_path(const HenonMap& H, const SampledPath& path) {
    SampledPath out;
    out.refinement_tol = path.refinement_tol;
    out.points.reserve(path.points.size());
    for (const auto& z : path.points) out.points.push_back(apply(H, z));
    if (!path.points.empty() &&
        path.points.front().x == path.points.back().x &&
        path.points.front().y == path.points.back().y)
        out.points.back() = out.points.front();
    return out;
}

SampledPath concat_paths(const SampledPath& a, const SampledPath& b) {
    if (a.points.empty() || b.points.empty())
        throw Error("path-too-wild", "cannot concatenate empty paths");
    if (!(a.points.back().x == b.points.front().x &&
          a.points.back().y == b.points.front().y))
        throw Error("path-too-wild", "junction points differ");
    SampledPath out;
    out.refinement_tol = std::min(a.refinement_tol, b.refinement_tol);
    out.points = a.points;
    out.points.insert(out.points.end(), b.points.begin() + 1, b.points.end());
    // Certificates survive a junction; pull-back provenance does not, since
    // the two halves have no common base path.
    if (a.certificates.size() == a.points.size() &&
        b.certificates.size() == b.points.size()) {
        out.certificates = a.certificates;
        out.certificates.insert(out.certificates.end(),
                                b.certificates.begin() + 1,
                                b.certificates.end());
    }
    return out;
}

SampledPath reverse_path(const SampledPath& a) {
    SampledPath out = a;
    std::reverse(out.points.begin(), out.points.end());
    std::reverse(out.certificates.begin(), out.certificates.end());
    if (a.source)
        out.source = std::make_shared<const SampledPath>(reverse_path(*a.source));
    return out;
}

} // namespace shortc2
