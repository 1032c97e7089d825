#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "shortc2/error.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/rng.hpp"

using namespace shortc2;
using cdbl = std::complex<double>;

namespace {
HenonMap quad() { return HenonMap(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0}); }
double pair_gap(const ComplexPair& a, const ComplexPair& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}
} // namespace

TEST_CASE("apply matches the defining formula") {
    HenonMap H = quad();
    ComplexPair w = apply(H, {{1.0, 0.0}, {2.0, 0.0}});
    CHECK(w.x == cdbl(2.0, 0.0));
    CHECK(w.y == cdbl(3.0, 0.0));

    ComplexPair fix = apply(H, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(fix.x == cdbl(0.0, 0.0));
    CHECK(fix.y == cdbl(0.0, 0.0));

    // p = y^2 + 1, a = 2 at (1,1): (1, 1 + 1 - 2) = (1, 0)
    HenonMap H2(MonicPoly(2, {{1.0, 0.0}}), {2.0, 0.0});
    ComplexPair v = apply(H2, {{1.0, 0.0}, {1.0, 0.0}});
    CHECK(v.x == cdbl(1.0, 0.0));
    CHECK(v.y == cdbl(0.0, 0.0));
}

TEST_CASE("apply_inverse inverts apply") {
    HenonMap H = quad();
    ComplexPair w = apply_inverse(H, {{2.0, 0.0}, {3.0, 0.0}});
    CHECK(w.x == cdbl(1.0, 0.0));
    CHECK(w.y == cdbl(2.0, 0.0));
    ComplexPair fix = apply_inverse(H, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(pair_gap(fix, {{0.0, 0.0}, {0.0, 0.0}}) == 0.0);

    Rng rng(7);
    HenonMap H3(MonicPoly(3, {{0.5, 0.25}, {-1.0, 2.0}}), {0.0, -2.0});
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        ComplexPair z{rng.complex_box(3.0), rng.complex_box(3.0)};
        for (const HenonMap& H_ : {H, H3}) {
            ComplexPair r = apply_inverse(H_, apply(H_, z));
            double scale = std::max({1.0, std::abs(z.x), std::abs(z.y)});
            worst = std::max(worst, pair_gap(r, z) / scale);
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("filtration classification with Vplus > Vminus > V ties") {
    CHECK(classify({{0.0, 0.0}, {10.0, 0.0}}, 4.0) == FiltrationRegion::Vplus);
    CHECK(classify({{10.0, 0.0}, {0.0, 0.0}}, 4.0) ==
          FiltrationRegion::Vminus);
    CHECK(classify({{1.0, 0.0}, {1.0, 0.0}}, 4.0) == FiltrationRegion::V);
    // |x| = |y| = R resolves to Vplus
    CHECK(classify({{4.0, 0.0}, {4.0, 0.0}}, 4.0) == FiltrationRegion::Vplus);
    // |x| = R > |y| resolves to Vminus
    CHECK(classify({{4.0, 0.0}, {1.0, 0.0}}, 4.0) ==
          FiltrationRegion::Vminus);
}

TEST_CASE("escape radius doubles |y| on the V+ boundary") {
    HenonMap H = quad();
    HenonMap H3(MonicPoly(3, {{0.0, 0.0}, {0.0, 0.0}}), {1.0, 0.0});
    CHECK(escape_radius(H) == 4.0);
    CHECK(escape_radius(H3) == 4.0);

    Rng rng(11);
    for (const HenonMap* M : {&H, &H3}) {
        double R0 = escape_radius(*M);
        for (int i = 0; i < 500; ++i) {
            double thx = rng.uniform(0.0, 6.283185307179586);
            double thy = rng.uniform(0.0, 6.283185307179586);
            ComplexPair z{std::polar(rng.uniform(0.0, R0), thx),
                          std::polar(R0, thy)};
            ComplexPair w = apply(*M, z);
            CHECK(std::abs(w.y) >= 2.0 * std::abs(z.y));
            CHECK(classify(w, R0) == FiltrationRegion::Vplus);
        }
    }
}

TEST_CASE("normalize kills the subleading coefficient") {
    // p_raw = y^2 + 2y + 1, a = 1: t = -1, p~ = y^2 + 2
    NormalizedMap nm = normalize({{1.0, 0.0}, {2.0, 0.0}}, {1.0, 0.0});
    CHECK(nm.translation == cdbl(-1.0, 0.0));
    REQUIRE(nm.map.degree() == 2);
    CHECK(nm.map.p.low_coeffs()[0] == cdbl(2.0, 0.0));

    // already normalized input: identity conjugation
    NormalizedMap id = normalize({{5.0, 0.0}, {0.0, 0.0}}, {1.0, 0.0});
    CHECK(id.translation == cdbl(0.0, 0.0));
    CHECK(id.map.p.low_coeffs()[0] == cdbl(5.0, 0.0));

    // p_raw = y^3 + 3y^2, a = 1: t = -1, p~ = y^3 - 3y + 4
    NormalizedMap n3 =
        normalize({{0.0, 0.0}, {0.0, 0.0}, {3.0, 0.0}}, {1.0, 0.0});
    CHECK(n3.translation == cdbl(-1.0, 0.0));
    REQUIRE(n3.map.degree() == 3);
    CHECK(std::abs(n3.map.p.low_coeffs()[0] - cdbl(4.0, 0.0)) < 1e-14);
    CHECK(std::abs(n3.map.p.low_coeffs()[1] - cdbl(-3.0, 0.0)) < 1e-14);

    // conjugacy identity at random points: H_norm = T^{-1} o H_raw o T
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        ComplexPair z{rng.complex_box(2.0), rng.complex_box(2.0)};
        cdbl t = n3.translation;
        cdbl yt = z.y + t, xt = z.x + t;
        cdbl raw = yt * yt * yt + 3.0 * yt * yt - xt;
        ComplexPair expect{yt - t, raw - t};
        ComplexPair got = apply(n3.map, z);
        CHECK(pair_gap(got, expect) <
              1e-12 * std::max(1.0, std::abs(expect.y)));
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(MonicPoly(1, {}), Error);
    CHECK_THROWS_AS(MonicPoly(3, {{1.0, 0.0}}), Error);
    CHECK_THROWS_AS(HenonMap(MonicPoly(2, {{0.0, 0.0}}), {0.0, 0.0}), Error);
}

TEST_CASE("extended-exponent arithmetic used for deep orbits") {
    XComplex a(3.0), b(4.0);
    CHECK((a + b).to_complex() == cdbl(7.0, 0.0));
    CHECK((a * b).to_complex() == cdbl(12.0, 0.0));
    CHECK((a - b).to_complex() == cdbl(-1.0, 0.0));

    XComplex big(cdbl(1.0, 0.0), 3000);
    XComplex sum = big + XComplex(1.0);
    CHECK(sum.exponent() == 3000);
    CHECK(sum.mantissa() == cdbl(1.0, 0.0)); // below one ulp: absorbed

    XComplex p = XComplex(cdbl(0.0, 2.0)).pow_int(5); // (2i)^5 = 32 i
    CHECK(p.to_complex() == cdbl(0.0, 32.0));

    XComplex lp = XComplex::from_log_polar(700.0, 0.5);
    CHECK(lp.log_abs() == doctest::Approx(700.0).epsilon(1e-14));
    CHECK(lp.arg() == doctest::Approx(0.5).epsilon(1e-14));

    // 12 quadratic-map steps from (0,4) leave double range but stay exact:
    // 2^{-12} log|y_12| already agrees with G+(0,4) to ~1e-300.
    HenonMap H = quad();
    XComplex x(0.0), y(4.0);
    for (int i = 0; i < 12; ++i) step(H, x, y);
    CHECK(y.finite());
    CHECK(y.log_abs() > 709.0); // past double overflow
    CHECK(y.log_abs() / 4096.0 ==
          doctest::Approx(1.3823257699230833).epsilon(1e-13));
}

TEST_CASE("orbit overflow is reported, not silent") {
    HenonMap H = quad();
    ComplexPair huge{{0.0, 0.0}, {1e200, 0.0}};
    CHECK_THROWS_AS(apply(H, huge), Error);
}
