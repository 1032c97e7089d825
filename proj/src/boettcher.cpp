#include "shortc2/boettcher.hpp"

#include <algorithm>
#include <cmath>

namespace shortc2 {

namespace {

long long checked_pow_ll(int d, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (1LL << 61) / d) throw Error("dyadic-overflow", "d^n exceeds 64 bits");
        r *= d;
    }
    return r;
}

long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX / 2 || p < INT64_MIN / 2)
        throw Error("dyadic-overflow", "dyadic numerator exceeds 64 bits");
    return static_cast<long long>(p);
}

} // namespace

DyadicClass make_dyadic(long long k, int n, int d) {
    if (n < 0 || d < 2) throw Error("dyadic-overflow", "invalid dyadic parameters");
    if (k == 0) return {0, 0};
    while (n > 0 && k % d == 0) {
        k /= d;
        --n;
    }
    return {k, n};
}

DyadicClass dyadic_add(DyadicClass a, DyadicClass b, int d) {
    int n = std::max(a.n, b.n);
    long long ka = checked_mul(a.k, checked_pow_ll(d, n - a.n));
    long long kb = checked_mul(b.k, checked_pow_ll(d, n - b.n));
    return make_dyadic(ka + kb, n, d);
}

DyadicClass dyadic_neg(DyadicClass a) { return {-a.k, a.n}; }

DyadicClass dyadic_scale_pow(DyadicClass a, int j, int d) {
    if (j >= 0) return make_dyadic(checked_mul(a.k, checked_pow_ll(d, j)), a.n, d);
    return make_dyadic(a.k, a.n - j, d);
}

DyadicClass dyadic_mod1(DyadicClass a, int d) {
    long long q = checked_pow_ll(d, a.n);
    long long k = a.k % q;
    if (k < 0) k += q;
    return make_dyadic(k, a.n, d);
}

double dyadic_value(DyadicClass a, int d) {
    return static_cast<double>(a.k) / std::pow(static_cast<double>(d), a.n);
}

namespace {

// Complex relative defect q(x,y)/y^d at an extended-exponent orbit point.
std::complex<double> rel_defect(const HenonMap& H, const XComplex& x,
                                const XComplex& y) {
    XComplex q = H.p.eval_low(y) - XComplex(H.a) * x;
    return (q / y.pow_int(H.degree())).to_complex();
}

// Correction sum S = sum_j d^{-(j+1)} Log(1 + q_j/y_j^d) from a point in
// V+_{R0}, truncated under the same geometric majorant as the Green tail.
std::complex<double> correction_sum(const HenonMap& H, XComplex x, XComplex y,
                                    double tol, double* tail_out = nullptr) {
    const int d = H.degree();
    const double C = tail_constant(H);
    std::complex<double> S(0.0, 0.0);
    double scale = 1.0;
    for (int j = 0; j < 4096; ++j) {
        double tail = scale * 4.0 * C /
                      ((2.0 * d - 1.0) * std::exp(std::min(700.0, y.log_abs())));
        if (tail <= tol || !std::isfinite(tail)) {
            if (tail_out) *tail_out = std::max(tail, 0.0);
            return S;
        }
        std::complex<double> delta = rel_defect(H, x, y);
        scale /= d;
        S += scale * std::log(std::complex<double>(1.0, 0.0) + delta);
        step(H, x, y);
    }
    if (tail_out) *tail_out = 0.0;
    return S;
}

const double kLog2R0Margin = 2.0;

// Steps until V+ with margin |y| >= 2 R0 (so arg y is far from the axis
// collision and the winding integral is safe). Certifies escape as a side
// effect: entering V+_{R0} proves G+ > 0.
long long entry_time(const HenonMap& H, const ComplexPair& z, long long cap) {
    const double thr = std::log(kLog2R0Margin * escape_radius(H));
    XComplex x(z.x), y(z.y);
    for (long long k = 0; k <= cap; ++k) {
        double ly = y.log_abs();
        if (ly >= x.log_abs() && ly >= thr) return k;
        step(H, x, y);
        if (!x.finite() || !y.finite())
            throw Error("orbit-overflow", "non-finite value while locating V+ entry");
    }
    throw Error("path-leaves-Uplus",
                "path sample shows no escape within budget (K+ touch or unresolved)");
}

struct PushedPt {
    XComplex x, y;
};

PushedPt push_n(const HenonMap& H, const ComplexPair& z, long long n) {
    XComplex x(z.x), y(z.y);
    for (long long k = 0; k < n; ++k) step(H, x, y);
    return {x, y};
}

struct CoreResult {
    std::complex<double> delta; // (L(end) - L(start)) / d^n, 0 if !need_S
    double total_arg = 0.0;     // accumulated pushed arg-y increments
    long long push_n = 0;
    std::vector<ComplexPair> refined;
};

// Shared continuation walk. Pushes every sample forward by the common level
// n = max entry time, then walks segments accumulating arg steps, inserting
// midpoints of the original segments whenever a pushed step exceeds step_tol.
// A midpoint with a later entry time raises n and restarts the walk.
CoreResult continue_core(const HenonMap& H, const std::vector<ComplexPair>& pts,
                         double step_tol, bool need_S) {
    if (pts.size() < 2) throw Error("path-too-wild", "path needs at least 2 samples");
    step_tol = std::clamp(step_tol, 1e-3, 1.55);
    const int d = H.degree();
    const int kMaxDepth = 24;
    const int kMaxRestarts = 64;

    struct Node {
        ComplexPair z;
        int depth;
        long long entry;
    };
    std::vector<Node> work;
    work.reserve(pts.size());
    for (const auto& p : pts) work.push_back({p, 0, entry_time(H, p, kDefaultBudget)});

    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        long long n = 0;
        for (const auto& w : work) n = std::max(n, w.entry);

        std::vector<PushedPt> pushed(work.size());
        for (size_t i = 0; i < work.size(); ++i) pushed[i] = push_n(H, work[i].z, n);

        bool restart = false;
        double total = 0.0;
        size_t i = 0;
        while (i + 1 < work.size()) {
            double dth = arg_step(pushed[i].y, pushed[i + 1].y);
            if (std::abs(dth) > step_tol) {
                int depth = std::max(work[i].depth, work[i + 1].depth) + 1;
                if (depth > kMaxDepth)
                    throw Error("path-too-wild", "refinement depth exceeded");
                ComplexPair mid{0.5 * (work[i].z.x + work[i + 1].z.x),
                                0.5 * (work[i].z.y + work[i + 1].z.y)};
                Node node{mid, depth, entry_time(H, mid, kDefaultBudget)};
                work.insert(work.begin() + i + 1, node);
                if (node.entry > n) {
                    restart = true;
                    break;
                }
                pushed.insert(pushed.begin() + i + 1, push_n(H, mid, n));
                continue;
            }
            total += dth;
            ++i;
        }
        if (restart) continue;

        CoreResult res;
        res.total_arg = total;
        res.push_n = n;
        res.refined.reserve(work.size());
        for (const auto& w : work) res.refined.push_back(w.z);
        if (need_S) {
            std::complex<double> S0 = correction_sum(H, pushed.front().x,
                                                     pushed.front().y, 5e-14);
            std::complex<double> S1 = correction_sum(H, pushed.back().x,
                                                     pushed.back().y, 5e-14);
            double dlog = pushed.back().y.log_abs() - pushed.front().y.log_abs();
            std::complex<double> num(dlog + (S1 - S0).real(),
                                     total + (S1 - S0).imag());
            res.delta = num / std::pow(static_cast<double>(d),
                                       static_cast<double>(n));
        }
        return res;
    }
    throw Error("path-too-wild", "entry level kept growing during refinement");
}

void certify_in_band(const HenonMap& H, const std::vector<ComplexPair>& samples,
                     double c) {
    for (const auto& z : samples) {
        GreenEstimate g = green_plus(H, z, std::min(1e-9, c * 1e-6));
        if (g.undecided || !g.escaped)
            throw Error("path-leaves-Uplus", "sample membership in U+ unresolved");
        if (!(g.value + g.error_bound < c))
            throw Error("bad-level", "path sample not certified below level c");
    }
}

} // namespace

PhiValue phi_plus(const HenonMap& H, const ComplexPair& z, int terms) {
    if (terms < 1) throw Error("bad-budget", "terms must be >= 1");
    double R0 = escape_radius(H);
    if (classify(z, R0) != FiltrationRegion::Vplus)
        throw Error("not-in-Vplus", "phi_plus requires z in V+_{R0}");
    const int d = H.degree();
    const double C = tail_constant(H);

    XComplex x(z.x), y(z.y);
    std::complex<double> L(y.log_abs(), y.arg());
    double scale = 1.0;
    double tail = scale * 4.0 * C /
                  ((2.0 * d - 1.0) * std::exp(std::min(700.0, y.log_abs())));
    for (int j = 0; j < terms; ++j) {
        // remaining factors are sub-denormal; iterating further only risks
        // exponent overflow deep in the orbit
        if (tail < 1e-300) break;
        std::complex<double> delta = rel_defect(H, x, y);
        scale /= d;
        L += scale * std::log(std::complex<double>(1.0, 0.0) + delta);
        step(H, x, y);
        tail = scale * 4.0 * C /
               ((2.0 * d - 1.0) * std::exp(std::min(700.0, y.log_abs())));
    }
    return {XComplex::from_log_polar(L.real(), L.imag()).to_complex(), tail};
}

BranchValue principal_log_phi(const HenonMap& H, const ComplexPair& z, double tol) {
    double R0 = escape_radius(H);
    if (classify(z, R0) != FiltrationRegion::Vplus)
        throw Error("not-in-Vplus", "log phi+ seed requires z in V+_{R0}");
    XComplex x(z.x), y(z.y);
    std::complex<double> L(y.log_abs(), y.arg());
    return {L + correction_sum(H, x, y, tol)};
}

BranchValue continue_log_phi(const HenonMap& H, const SampledPath& path,
                             const BranchValue& seed) {
    CoreResult r = continue_core(H, path.points, path.refinement_tol, true);
    return {seed.log_phi + r.delta};
}

std::complex<double> hat_phi(const HenonMap& H, const SampledPath& path,
                             LevelSpec c) {
    if (!(c.c > 0.0)) throw Error("bad-level", "level c must be positive");
    if (path.points.empty()) throw Error("path-too-wild", "empty path");
    BranchValue seed = principal_log_phi(H, path.points.front());
    CoreResult r = continue_core(H, path.points, path.refinement_tol, true);
    certify_in_band(H, r.refined, c.c);
    std::complex<double> L = seed.log_phi + r.delta;
    return std::exp(L.real()) *
           std::complex<double>(std::cos(L.imag()), std::sin(L.imag()));
}

DyadicClass winding_class(const HenonMap& H, const SampledPath& loop,
                          LevelSpec c) {
    if (!(c.c > 0.0)) throw Error("bad-level", "level c must be positive");
    if (loop.points.size() < 2)
        throw Error("path-too-wild", "loop needs at least 2 samples");
    if (!(loop.points.front().x == loop.points.back().x &&
          loop.points.front().y == loop.points.back().y))
        throw Error("path-too-wild", "loop must be exactly closed");

    // A recorded pull-back classifies through its base: G+ o H^{-1} = G+/d
    // puts the loop in Omega'_c exactly when the base lies in Omega'_{c d^k},
    // where the class is computed at full double precision, and the invariant
    // itself divides by d^k. Walking the deep loop directly instead would
    // push samples forward k extra levels, and past k ~ 4 the p(y) - a x
    // cancellation leaves arg y with no correct digits.
    if (loop.source && loop.pulled > 0) {
        double cbase = c.c;
        for (int k = 0; k < loop.pulled; ++k) {
            cbase *= H.degree();
            if (!std::isfinite(cbase))
                throw Error("bad-level", "scaled level overflows");
        }
        DyadicClass basecls = winding_class(H, *loop.source, LevelSpec{cbase});
        return dyadic_scale_pow(basecls, -loop.pulled, H.degree());
    }

    double tol = std::min(loop.refinement_tol, 0.7853981633974483);
    for (int round = 0; round < 5; ++round) {
        CoreResult r = continue_core(H, loop.points, tol, false);
        double turns = r.total_arg / (2.0 * 3.14159265358979323846);
        long long m = std::llround(turns);
        if (std::abs(turns - static_cast<double>(m)) < 0.25) {
            certify_in_band(H, r.refined, c.c);
            if (r.push_n > INT32_MAX)
                throw Error("dyadic-overflow", "push level exceeds int range");
            return make_dyadic(m, static_cast<int>(r.push_n), H.degree());
        }
        tol *= 0.5; // under-resolved winding: refine and retry
    }
    throw Error("path-too-wild", "winding drift stayed above a quarter turn");
}

} // namespace shortc2
