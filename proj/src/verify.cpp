#include "shortc2/verify.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "shortc2/affine.hpp"
#include "shortc2/biholo.hpp"
#include "shortc2/boettcher.hpp"
#include "shortc2/error.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/io.hpp"
#include "shortc2/modelspace.hpp"
#include "shortc2/rng.hpp"
#include "shortc2/topology.hpp"
#include "shortc2/unity.hpp"

namespace shortc2 {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

HenonMap quad_map() { return HenonMap(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0}); }
HenonMap cubic_map() {
    return HenonMap(MonicPoly(3, {{0.0, 0.0}, {0.0, 0.0}}), {1.0, 0.0});
}

struct Checker {
    json checks = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail,
             double max_err = -1.0, double tol = -1.0) {
        json c{{"name", name}, {"pass", pass}, {"detail", detail}};
        if (max_err >= 0.0) c["max_err"] = max_err;
        if (tol >= 0.0) c["tolerance"] = tol;
        checks.push_back(c);
        all_pass = all_pass && pass;
    }

    void add_sample(const SampleReport& rep) {
        add(rep.name, rep.pass,
            "samples=" + std::to_string(rep.samples), rep.max_err,
            rep.tolerance);
    }
};

ComplexPair random_escaping_point(Rng& rng) {
    return {rng.complex_box(2.0),
            std::polar(rng.uniform(5.0, 8.0), rng.uniform(0.0, kTwoPi))};
}

double rel_gap(const ComplexPair& a, const ComplexPair& b) {
    double scale = std::max({1.0, std::abs(b.x), std::abs(b.y)});
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) / scale;
}

void suite_core(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    // Forward-then-inverse round trip.
    for (const HenonMap& H : {quad_map(), cubic_map()}) {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            ComplexPair z{rng.complex_box(3.0), rng.complex_box(3.0)};
            worst = std::max(worst, rel_gap(apply_inverse(H, apply(H, z)), z));
        }
        ck.add("core/inverse-roundtrip-d" + std::to_string(H.degree()),
               worst < 1e-12, "10^4 random points", worst, 1e-12);
    }
    // V+ forward invariance with doubling at R0.
    {
        HenonMap H = quad_map();
        double R0 = escape_radius(H);
        bool ok = true;
        for (int i = 0; i < 2000; ++i) {
            double ym = rng.uniform(R0, 2.0 * R0);
            ComplexPair z{std::polar(rng.uniform(0.0, ym),
                                     rng.uniform(0.0, kTwoPi)),
                          std::polar(ym, rng.uniform(0.0, kTwoPi))};
            if (classify(z, R0) != FiltrationRegion::Vplus) continue;
            ComplexPair w = apply(H, z);
            ok = ok && classify(w, R0) == FiltrationRegion::Vplus &&
                 std::abs(w.y) >= 2.0 * std::abs(z.y);
        }
        ck.add("core/vplus-invariance-doubling", ok,
               "classify(H z) = Vplus and |y1| >= 2|y| on V+_{R0}");
    }
    // normalize kills the y^{d-1} coefficient; conjugation identity holds.
    {
        // p_raw = y^2 + y + 2, a = 1; raw coefficients constant-first.
        std::vector<std::complex<double>> raw{{2.0, 0.0}, {1.0, 0.0}};
        NormalizedMap nm = normalize({raw[0], raw[1]}, {1.0, 0.0});
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            ComplexPair z{rng.complex_box(2.0), rng.complex_box(2.0)};
            std::complex<double> t = nm.translation;
            ComplexPair zt{z.x + t, z.y + t};
            std::complex<double> py =
                zt.y * zt.y + raw[1] * zt.y + raw[0] - zt.x;
            ComplexPair hz{zt.y - t, py - t};
            worst = std::max(worst, rel_gap(apply(nm.map, z), hz));
        }
        ck.add("core/normalize-conjugacy", worst < 1e-12,
               "T^{-1} o H_raw o T matches the normalized map", worst, 1e-12);
    }
}

void suite_greens(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    for (const HenonMap& H : {quad_map(), cubic_map()}) {
        const double d = H.degree();
        double worst = 0.0;
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            ComplexPair z = random_escaping_point(rng);
            GreenEstimate g1 = green_plus(H, z, 1e-9);
            GreenEstimate g2 = green_plus(H, apply(H, z), 1e-9);
            if (!g1.escaped || !g2.escaped) {
                ok = false;
                continue;
            }
            double gap = std::abs(g2.value - d * g1.value);
            double allowed = g2.error_bound + d * g1.error_bound;
            worst = std::max(worst, gap - allowed);
            ok = ok && gap <= allowed;
        }
        ck.add("greens/functional-equation-d" + std::to_string(H.degree()),
               ok, "|G(Hz) - d G(z)| within combined certified bounds",
               std::max(worst, 0.0));
    }
    {
        HenonMap H = quad_map();
        double eps = 1e-2;
        double R = r_epsilon(H, eps);
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            double ym = rng.uniform(R, 2.0 * R);
            ComplexPair z{std::polar(rng.uniform(0.0, ym),
                                     rng.uniform(0.0, kTwoPi)),
                          std::polar(ym, rng.uniform(0.0, kTwoPi))};
            GreenEstimate g = green_plus(H, z, 1e-10);
            double gap = std::abs(g.value - std::log(std::abs(z.y)));
            worst = std::max(worst, gap);
            ok = ok && g.escaped && gap <= eps + g.error_bound;
        }
        ck.add("greens/log-gap-on-Vplus-Reps", ok,
               "|G - log|y|| <= eps on V+_{R_eps}, eps = 1e-2", worst, eps);
    }
    for (std::complex<double> a : {std::complex<double>{1.0, 0.0},
                                   std::complex<double>{0.0, 2.0}}) {
        HenonMap H(MonicPoly(2, {{0.0, 0.0}}), a);
        DiagonalSym L{2, 1}; // eta = omega = e^{2 pi i/3}
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            ComplexPair z = random_escaping_point(rng);
            GreenEstimate g1 = green_plus(H, z, 1e-9);
            GreenEstimate g2 = green_plus(H, diag_apply(L, z), 1e-9);
            if (!g1.escaped || !g2.escaped) {
                ok = false;
                continue;
            }
            double gap = std::abs(g1.value - g2.value);
            worst = std::max(worst, gap);
            ok = ok && gap <= g1.error_bound + g2.error_bound;
        }
        ck.add(std::string("greens/L-omega-symmetry-a") +
                   (a.real() == 1.0 ? "1" : "2i"),
               ok, "G o L_omega = G within combined bounds", worst);
    }
    {
        HenonMap H = quad_map();
        bool ok = membership(H, {{0.0, 0.0}, {0.0, 0.0}}, {1.0}) ==
                      Membership::K_plus &&
                  membership(H, {{0.0, 0.0}, {4.0, 0.0}}, {2.0}) ==
                      Membership::Omega_prime_interior &&
                  membership(H, {{0.0, 0.0}, {4.0, 0.0}}, {1.0}) ==
                      Membership::outside;
        ck.add("greens/membership-tags", ok,
               "(0,0) in K+, (0,4) inside Omega'_2, outside Omega_1");
    }
}

// Two-leg path from the hat_phi base point (0, 2 R0): log-polar sweep of y
// with x = 0, then a straight x leg. Stays in V+ throughout.
SampledPath vplus_path(const HenonMap& H, std::complex<double> x_t,
                       std::complex<double> y_t) {
    double R0 = escape_radius(H);
    SampledPath path;
    double L0 = std::log(2.0 * R0);
    double L1 = std::log(std::abs(y_t));
    double th = std::arg(y_t);
    int k1 = 24;
    for (int i = 0; i <= k1; ++i) {
        double t = double(i) / k1;
        path.points.push_back(
            {{0.0, 0.0},
             std::polar(std::exp(L0 + (L1 - L0) * t), th * t)});
    }
    int k2 = 8;
    for (int i = 1; i <= k2; ++i) {
        double t = double(i) / k2;
        path.points.push_back({x_t * t, path.points.back().y});
    }
    path.points.back() = {x_t, y_t};
    return path;
}

void suite_boettcher(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    HenonMap H = quad_map();
    const LevelSpec band{5.0};
    {
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            std::complex<double> y_t =
                std::polar(rng.uniform(8.0, 12.0), rng.uniform(0.0, kTwoPi));
            std::complex<double> x_t = rng.complex_box(2.0);
            SampledPath path = vplus_path(H, x_t, y_t);
            std::complex<double> val = hat_phi(H, path, band);
            GreenEstimate g = green_plus(H, path.points.back(), 1e-10);
            double gap = std::abs(std::log(std::abs(val)) - g.value);
            worst = std::max(worst, gap);
            ok = ok && gap <= 1e-6 + g.error_bound;
            ok = ok && std::abs(val) > 1.0 &&
                 std::abs(val) < std::exp(band.c);
        }
        ck.add("boettcher/hat-phi-modulus", ok,
               "|hat phi| = e^{G} within 1e-6 and inside (1, e^c), 25 paths",
               worst, 1e-6);
    }
    {
        ComplexPair z{{0.0, 0.0}, {10.0, 0.0}};
        PhiValue a = phi_plus(H, z, 40);
        PhiValue b = phi_plus(H, apply(H, z), 40);
        double rel = std::abs(b.value - a.value * a.value) /
                     std::abs(b.value);
        ck.add("boettcher/phi-functional-equation", rel < 1e-8,
               "phi(Hz) = phi(z)^d at (0,10)", rel, 1e-8);
    }
    {
        // default-eps canonical loops sit at |y| = r_epsilon(1e-3) ~ 4e3,
        // so G ~ 8.3: certify them in a band that contains them
        const LevelSpec wide{10.0};
        SampledPath c1 = canonical_loop(H, 1);
        SampledPath c2 = canonical_loop(H, 2);
        DyadicClass w12 = winding_class(H, concat_paths(c1, c2), wide);
        DyadicClass wr = winding_class(H, reverse_path(c1), wide);
        bool ok = w12 == make_dyadic(3, 0, 2) && wr == make_dyadic(-1, 0, 2);
        ck.add("boettcher/winding-additivity-negation", ok,
               "concat adds classes, reversal negates");
    }
    {
        SampledPath half = pull_back_loop(H, canonical_loop(H, 1, 0.5), 1);
        DyadicClass wh = winding_class(H, half, band);
        DyadicClass wp = winding_class(H, push_forward_path(H, half), band);
        bool ok = wh == make_dyadic(1, 1, 2) &&
                  wp == dyadic_scale_pow(wh, 1, 2) &&
                  wp == make_dyadic(1, 0, 2);
        ck.add("boettcher/push-forward-doubles-class", ok,
               "winding(H(loop)) = d * winding(loop) exactly as dyadics");
    }
}

void suite_modelspace(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    HenonMap H2(MonicPoly(2, {{1.0, 0.0}}), {2.0, 0.0});
    HenonMap H3(MonicPoly(3, {{0.0, 0.0}, {3.0, 0.0}}), {1.0, 0.0});
    auto sample_pt = [&](Rng& r) {
        ModelPoint pt;
        pt.c = 0.4;
        pt.z = r.complex_box(2.0);
        pt.zeta = std::polar(std::exp(r.uniform(0.05, 0.35)),
                             r.uniform(0.0, kTwoPi));
        return pt;
    };
    for (const HenonMap& H : {H2, H3}) {
        const int d = H.degree();
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            int n1 = 1 + int(rng.uniform(0.0, 3.999));
            int n2 = 1 + int(rng.uniform(0.0, 3.999));
            long long k1 = 1 + (long long)rng.uniform(
                                   0.0, std::pow(double(d), n1) - 1.0001);
            long long k2 = 1 + (long long)rng.uniform(
                                   0.0, std::pow(double(d), n2) - 1.0001);
            DyadicClass r = make_dyadic(k1, n1, d);
            DyadicClass s = make_dyadic(k2, n2, d);
            ModelPoint pt = sample_pt(rng);
            ModelPoint mid = deck_apply(H, {s, 0}, pt);
            ModelPoint lhs = deck_apply(H, {r, 0}, mid);
            ModelPoint rhs =
                deck_apply(H, {dyadic_mod1(dyadic_add(r, s, d), d), 0}, pt);
            // relative to the composition's own scale: the stepped side
            // rounds mid to doubles, and when r+s reduces the joint shift
            // collapses while the intermediate stays ~d^n
            double scale =
                std::max({1.0, std::abs(rhs.z), std::abs(mid.z)});
            worst = std::max(worst, std::abs(lhs.z - rhs.z) / scale);
            worst = std::max(worst, std::abs(lhs.zeta - rhs.zeta));
        }
        ck.add("modelspace/deck-homomorphism-d" + std::to_string(d),
               worst < 1e-12, "deck(r) o deck(s) = deck(r+s mod 1)", worst,
               1e-12);
    }
    for (const HenonMap& H : {H2, H3}) {
        double worst = 0.0;
        for (int n = 1; n <= 3; ++n) {
            for (int i = 0; i < 100; ++i) {
                ModelPoint pt = sample_pt(rng);
                ModelPoint closed = g_chain(H, pt, n);
                ModelPoint iter = pt;
                for (int k = 0; k < n; ++k) iter = lift_apply(H, iter);
                worst = std::max(worst, std::abs(closed.z - iter.z) /
                                            std::max(1.0, std::abs(iter.z)));
                worst = std::max(worst, std::abs(closed.zeta - iter.zeta) /
                                            std::max(1.0,
                                                     std::abs(iter.zeta)));
            }
        }
        ck.add("modelspace/g-chain-vs-composition-d" +
                   std::to_string(H.degree()),
               worst < 1e-12, "closed form vs n-fold lift, n <= 3", worst,
               1e-12);
    }
    for (const HenonMap& H : {H2, H3}) {
        bool ok = true;
        double worst = 0.0;
        for (int n = 0; n <= 6; ++n) {
            SampleReport rep = verify_comm_cover(H, n, 0, 1000, seed + n);
            ok = ok && rep.pass;
            worst = std::max(worst, rep.max_err);
        }
        ck.add("modelspace/deck-lift-commutation-d" +
                   std::to_string(H.degree()),
               ok, "levels n = 0..6, 10^3 points each", worst, 1e-10);
    }
    {
        ModelAut A1(3, 2, {0.3, 0.1});
        ModelAut A2(3, 5, {-1.0, 2.0});
        ModelAut C = model_aut_compose(A2, A1);
        std::complex<double> beta_err =
            C.beta() - std::pow(C.alpha(), 4);
        ModelAut I = model_aut_compose(A1, A1.inverse());
        bool ok = std::abs(beta_err) < 1e-12 && I.alpha_exponent() == 0 &&
                  std::abs(I.gamma()) < 1e-12;
        ck.add("modelspace/aut-closure-inverse", ok,
               "constraints survive composition; A o A^{-1} = Id");
    }
    {
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            ModelPoint pt = sample_pt(rng);
            ModelPoint out = lift_apply(H2, pt);
            ok = ok && out.c == 2.0 * pt.c && std::abs(out.zeta) > 1.0 &&
                 std::abs(out.zeta) < std::exp(out.c);
        }
        ck.add("modelspace/lift-annulus-bound", ok,
               "lift maps A_c into A_{dc}");
    }
    {
        HenonMap H = quad_map();
        ModelAut A(2, 1, {0.7, -0.2});
        SampleReport rep =
            model_aut_normalizes_deck(H, A, make_dyadic(1, 1, 2), 200, seed);
        ck.add_sample(rep);
    }
}

void suite_affine(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    {
        AffineGroup G = affine_preservers(quad_map());
        bool ok = G.order == 3 && G.modulus == 3;
        // closure under composition and inverse, exact on exponents
        for (const auto& g1 : G.elements) {
            for (const auto& g2 : G.elements) {
                long long s = mod_norm(g1.exponent + g2.exponent, G.modulus);
                bool found = false;
                for (const auto& h : G.elements)
                    found = found || h.exponent == s;
                ok = ok && found;
            }
        }
        ck.add("affine/group-closure-py2", ok,
               "p = y^2: order 3, closed under the group law");
    }
    {
        bool ok = affine_preservers(cubic_map()).order == 8 &&
                  affine_preservers(HenonMap(MonicPoly(2, {{1.0, 0.0}}),
                                             {1.0, 0.0}))
                          .order == 1 &&
                  affine_preservers(
                      HenonMap(MonicPoly(4, {{0.0, 0.0},
                                             {0.0, 0.0},
                                             {1.0, 0.0}}),
                               {1.0, 0.0}))
                          .order == 1;
        ck.add("affine/orders-match-classification", ok,
               "p=y^3 -> 8, p=y^2+1 -> 1, p=y^4+y^2 -> 1");
    }
    {
        // a_0 != 0 forces the trivial group (m(0-d) and m(-1) conditions).
        bool ok = true;
        for (int d = 2; d <= 5; ++d) {
            std::vector<std::complex<double>> low(d - 1, {0.0, 0.0});
            low[0] = {0.7, 0.3};
            ok = ok &&
                 affine_preservers(HenonMap(MonicPoly(d, low), {1.0, 0.0}))
                         .order == 1;
        }
        ck.add("affine/a0-nonzero-identity-only", ok,
               "constant term forces the trivial group, d = 2..5");
    }
    {
        SemiConjReport r2 =
            verify_L_semiconjugacy(quad_map(), DiagonalSym{2, 1});
        SemiConjReport r3 =
            verify_L_semiconjugacy(cubic_map(), DiagonalSym{3, 1});
        SemiConjReport bad = verify_L_semiconjugacy(
            HenonMap(MonicPoly(2, {{1.0, 0.0}}), {1.0, 0.0}),
            DiagonalSym{2, 1});
        bool ok = r2.pass && r3.pass && !bad.pass && bad.offending_coeff == 0;
        ck.add("affine/semiconjugacy", ok,
               "H o L_eta = L_{eta^d} o H for p = y^d; offender reported "
               "otherwise");
    }
    {
        CommuteReport c2 =
            verify_commute_H2(quad_map(), DiagonalSym{2, 1}, 1000, seed);
        CommuteReport c3 =
            verify_commute_H2(cubic_map(), DiagonalSym{3, 1}, 1000, seed);
        bool ok = c2.pass && c3.pass;
        ck.add("affine/commute-with-H2", ok,
               "L o H^2 = H^2 o L symbolically and at 10^3 points",
               std::max(c2.max_err, c3.max_err), 1e-10);
    }
    {
        // G+ invariance under every accepted element.
        HenonMap H = quad_map();
        AffineGroup G = affine_preservers(H);
        bool ok = true;
        double worst = 0.0;
        for (const auto& L : G.elements) {
            for (int i = 0; i < 100; ++i) {
                ComplexPair z = random_escaping_point(rng);
                GreenEstimate g1 = green_plus(H, z, 1e-9);
                GreenEstimate g2 = green_plus(H, diag_apply(L, z), 1e-9);
                double gap = std::abs(g1.value - g2.value);
                worst = std::max(worst, gap);
                ok = ok && g1.escaped && g2.escaped &&
                     gap <= g1.error_bound + g2.error_bound;
            }
        }
        ck.add("affine/green-invariance", ok,
               "G+ o L = G+ within combined bounds for accepted L", worst);
    }
}

void suite_topology(Checker& ck, std::uint64_t seed) {
    (void)seed;
    HenonMap H = quad_map();
    LevelSpec c{2.0};
    {
        bool ok = true;
        ComplexPair A{{0.0, 0.0}, {4.0, 0.0}};
        for (ComplexPair B : {ComplexPair{{0.0, 0.0}, {0.0, 4.0}},
                              ComplexPair{{0.0, 0.0}, {6.0, 0.0}}}) {
            SampledPath path = connect_points(H, A, B, c);
            ok = ok && path.points.front().x == A.x &&
                 path.points.front().y == A.y && path.points.back().x == B.x &&
                 path.points.back().y == B.y;
            for (const auto& z : path.points) {
                GreenEstimate g = green_plus(H, z, 1e-9);
                ok = ok && g.escaped && g.value - g.error_bound > 0.0 &&
                     g.value + g.error_bound < c.c;
            }
        }
        ck.add("topology/connect-certified", ok,
               "every sample certifies 0 < G < c; endpoints exact");
    }
    {
        bool ok = true;
        // band wide enough to hold the default canonical radius (G ~ 8.3)
        const LevelSpec wide{10.0};
        SampledPath loop = canonical_loop(H, 1);
        ok = ok && winding_class(H, loop, wide) == make_dyadic(1, 0, 2);
        SampledPath p1 = pull_back_loop(H, loop, 1);
        ok = ok && winding_class(H, p1, wide) == make_dyadic(1, 1, 2);
        SampledPath p2 = pull_back_loop(H, loop, 2);
        ok = ok && winding_class(H, p2, wide) == make_dyadic(1, 2, 2);
        SampledPath z0 = canonical_loop(H, 0);
        ok = ok && winding_class(H, z0, wide) == make_dyadic(0, 0, 2);
        ck.add("topology/pullback-divides-class", ok,
               "winding(H^{-n} C_m) = m / d^n exactly");
    }
}

void suite_biholo(Checker& ck, std::uint64_t seed) {
    Rng rng(seed);
    {
        bool ok = true;
        for (int n = -5; n <= 5; ++n) {
            Rat c2 = make_rat(3, 2);
            long long num = c2.num, den = c2.den;
            for (int i = 0; i < std::abs(n); ++i)
                (n > 0 ? num : den) *= 2;
            auto r = biholo_criterion(make_rat(num, den), c2, 2);
            auto rs = biholo_criterion(c2, make_rat(num, den), 2);
            ok = ok && r && *r == n && rs && *rs == -n;
        }
        ok = ok && !biholo_criterion(make_rat(3, 1), make_rat(1, 1), 2);
        ck.add("biholo/criterion-exact-and-antisymmetric", ok,
               "c1 = c2 d^n detected for |n| <= 5; (3,1,2) -> none");
    }
    {
        ContinuumFamily fam = continuum_family(2.0, 2, 10);
        bool ok = fam.all_none &&
                  fam.certificates.size() == 45 &&
                  fam.levels.front() > fam.lo && fam.levels.back() < fam.hi;
        ck.add("biholo/continuum-family", ok,
               "10 levels in (1, 2), all 45 pairs certified none");
    }
    {
        // Level transport: G(z) < c2 implies G(H^n z) < c1 = c2 d^n.
        HenonMap H = quad_map();
        auto n = biholo_criterion(4.0, 1.0, 2);
        bool ok = n && *n == 2;
        for (int i = 0; ok && i < 100; ++i) {
            ComplexPair z{rng.complex_box(1.0),
                          std::polar(rng.uniform(2.2, 2.6),
                                     rng.uniform(0.0, kTwoPi))};
            GreenEstimate g = green_plus(H, z, 1e-9);
            if (!g.escaped || g.value + g.error_bound >= 1.0) continue;
            ComplexPair w = z;
            for (long long k = 0; k < *n; ++k) w = apply(H, w);
            GreenEstimate gw = green_plus(H, w, 1e-9);
            ok = ok && gw.escaped && gw.value + gw.error_bound < 4.0;
        }
        ck.add("biholo/level-transport", ok,
               "points below c2 land below c1 = c2 d^n after H^n");
    }
    {
        InvolutionReport rep = involution_check(200, seed);
        ck.add("biholo/involution-example", rep.pass,
               "G+(x,y) = G-(y,x) for H = (y, y^2 - x), 200 points",
               rep.max_discrepancy);
    }
}

void suite_io(Checker& ck, std::uint64_t seed) {
    (void)seed;
    json schema = report_schema();
    {
        GreenEstimate g{1.25, 1e-9, 12, true, false};
        std::string why;
        bool ok = schema_validate(schema["outputs"]["green_estimate"],
                                  green_to_json(g), &why);
        json broken = green_to_json(g);
        broken.erase("error_bound");
        ok = ok && !schema_validate(schema["outputs"]["green_estimate"],
                                    broken, &why);
        ck.add("io/schema-green-estimate", ok,
               "valid document accepted; missing error_bound rejected");
    }
    {
        HenonMap H(MonicPoly(3, {{0.5, -1.0}, {2.0, 0.25}}), {0.0, 2.0});
        HenonMap rt = map_from_json(map_to_json(H));
        bool ok = rt.degree() == 3 && rt.a == H.a &&
                  rt.p.low_coeffs() == H.p.low_coeffs();
        ck.add("io/map-roundtrip", ok, "map JSON round trip is lossless");
    }
    {
        SampledPath p;
        p.points = {{{0.0, 1.0}, {2.0, 3.0}}, {{-1.0, 0.5}, {4.0, -2.0}}};
        SampledPath rt = path_from_json(path_to_json(p));
        bool ok = rt.points.size() == p.points.size();
        for (size_t i = 0; ok && i < p.points.size(); ++i)
            ok = rt.points[i].x == p.points[i].x &&
                 rt.points[i].y == p.points[i].y;
        DyadicClass c = make_dyadic(5, 3, 2);
        ok = ok && dyadic_from_json(dyadic_to_json(c)) == c;
        std::string why;
        ok = ok && schema_validate(schema["outputs"]["path"],
                                   path_to_json(p), &why);
        ck.add("io/path-dyadic-roundtrip", ok,
               "path and class serialization round trip");
    }
    {
        HenonMap H = quad_map();
        GridSpec grid{8, 6, -1.0, 1.0, 3.0, 5.0};
        GridResult r1 = render_slice(H, SlicePlane{}, grid, {2.0});
        GridResult r2 = render_slice(H, SlicePlane{}, grid, {2.0});
        bool ok = grid_to_csv(r1) == grid_to_csv(r2) &&
                  grid_to_pgm(r1) == grid_to_pgm(r2);
        std::string why;
        ok = ok && schema_validate(schema["outputs"]["render_sidecar"],
                                   pgm_sidecar(r1, "slice.pgm"), &why);
        ck.add("io/render-deterministic", ok,
               "two renders of the same config serialize identically");
    }
}

} // namespace

json run_verify(const std::string& suite, std::uint64_t seed) {
    Checker ck;
    bool any = false;
    auto want = [&](const char* name) {
        bool w = suite == "all" || suite == name;
        any = any || w;
        return w;
    };
    if (want("core")) suite_core(ck, seed);
    if (want("greens")) suite_greens(ck, seed);
    if (want("boettcher")) suite_boettcher(ck, seed);
    if (want("modelspace")) suite_modelspace(ck, seed);
    if (want("affine")) suite_affine(ck, seed);
    if (want("topology")) suite_topology(ck, seed);
    if (want("biholo")) suite_biholo(ck, seed);
    if (want("io")) suite_io(ck, seed);
    if (!any) throw Error("bad-config", "unknown verify suite: " + suite);

    return json{{"schema_version", 1},
                {"suite", suite},
                {"seed", seed},
                {"pass", ck.all_pass},
                {"checks", ck.checks}};
}

} // namespace shortc2
