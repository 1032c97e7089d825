#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "shortc2/error.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/modelspace.hpp"
#include "shortc2/rng.hpp"
#include "shortc2/unity.hpp"

using namespace shortc2;
using cd = std::complex<double>;

namespace {
HenonMap quad() { return HenonMap(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0}); }
HenonMap quad_gen() {
    return HenonMap(MonicPoly(2, {{1.0, 0.0}}), {2.0, 0.0});
}
HenonMap cubic() {
    return HenonMap(MonicPoly(3, {{0.0, 0.0}, {0.0, 0.0}}), {1.0, 0.0});
}
HenonMap cubic_gen() {
    return HenonMap(MonicPoly(3, {{0.0, 0.0}, {3.0, 0.0}}), {1.0, 0.0});
}

ModelPoint random_point(Rng& rng, double c, double lo = 0.05,
                        double hi = 0.35) {
    double r = std::exp(rng.uniform(lo, hi));
    return {rng.complex_box(2.0),
            std::polar(r, rng.uniform(0.0, 6.283185307179586)), c};
}

double dist(const ModelPoint& a, const ModelPoint& b) {
    return std::max(std::abs(a.z - b.z), std::abs(a.zeta - b.zeta));
}
} // namespace

TEST_CASE("roots of unity and exponent reduction") {
    CHECK(root_of_unity(0, 8) == cd(1.0, 0.0));
    CHECK(root_of_unity(8, 8) == cd(1.0, 0.0));
    CHECK(root_of_unity(-16, 8) == cd(1.0, 0.0));
    CHECK(std::abs(root_of_unity(2, 8) - cd(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(root_of_unity(1, 2) - cd(-1.0, 0.0)) < 1e-15);
    CHECK(mod_norm(-3, 8) == 5);
    CHECK(mod_norm(11, 8) == 3);
}

TEST_CASE("model polynomial coefficients") {
    QPoly q2 = q_poly(quad());
    REQUIRE(q2.coeffs.size() == 4);
    CHECK(q2.coeffs[0] == cd(0.0, 0.0));
    CHECK(q2.coeffs[1] == cd(0.0, 0.0));
    CHECK(q2.coeffs[2] == cd(0.0, 0.0));
    CHECK(q2.coeffs[3] == cd(1.0, 0.0));
    cd zeta(1.1, 0.2);
    CHECK(std::abs(q2.eval(zeta) - zeta * zeta * zeta) < 1e-15);

    // p = y^2 + 2: constant term a0 = 2 feeds the linear coefficient -a0/2
    QPoly q2c = q_poly(HenonMap(MonicPoly(2, {{2.0, 0.0}}), {1.0, 0.0}));
    CHECK(q2c.coeffs[1] == cd(-1.0, 0.0));
    CHECK(q2c.coeffs[3] == cd(1.0, 0.0));

    // p = y^3 + 3y: coefficients {a1^2/9, -a0/3, -a1/3, 0, 1}
    QPoly q3 = q_poly(cubic_gen());
    REQUIRE(q3.coeffs.size() == 5);
    CHECK(q3.coeffs[0] == cd(1.0, 0.0));
    CHECK(q3.coeffs[1] == cd(0.0, 0.0));
    CHECK(q3.coeffs[2] == cd(-1.0, 0.0));
    CHECK(q3.coeffs[3] == cd(0.0, 0.0));
    CHECK(q3.coeffs[4] == cd(1.0, 0.0));

    HenonMap quartic(MonicPoly(4, {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}),
                     {1.0, 0.0});
    CHECK_THROWS_AS(q_poly(quartic), Error);
}

TEST_CASE("lift on the model space") {
    HenonMap H = quad();
    cd zeta = std::polar(1.2, 0.3);
    ModelPoint out = lift_apply(H, {cd(0.0), zeta, 0.4});
    CHECK(std::abs(out.z - zeta * zeta * zeta) < 1e-15);
    CHECK(std::abs(out.zeta - zeta * zeta) < 1e-15);
    CHECK(out.c == doctest::Approx(0.8));

    // p = y^2 + 1, a = 2: lift z-coordinate is z + zeta^3 - zeta/2
    HenonMap G = quad_gen();
    cd z(0.4, -0.7);
    ModelPoint out2 = lift_apply(G, {z, zeta, 0.4});
    CHECK(std::abs(out2.z - (z + zeta * zeta * zeta - zeta / 2.0)) < 1e-15);
    CHECK(std::abs(out2.zeta - zeta * zeta) < 1e-15);

    CHECK_THROWS_AS(lift_apply(H, {z, cd(0.9, 0.0), 0.4}), Error);
    CHECK_THROWS_AS(lift_apply(H, {z, std::polar(1.6, 0.1), 0.4}), Error);
}

TEST_CASE("closed-form chain matches iterated lifts") {
    HenonMap H = quad();
    cd zeta = std::polar(1.05, 1.1);
    ModelPoint pt{cd(0.0), zeta, 0.1};

    ModelPoint once = g_chain(H, pt, 1);
    ModelPoint lifted = lift_apply(H, pt);
    CHECK(dist(once, lifted) < 1e-15);

    ModelPoint twice = g_chain(H, pt, 2);
    cd z3 = zeta * zeta * zeta;
    cd z6 = z3 * z3;
    CHECK(std::abs(twice.z - (z3 / 2.0 + z6)) < 1e-14);
    CHECK(std::abs(twice.zeta - zeta * zeta * zeta * zeta) < 1e-14);
    CHECK(twice.c == doctest::Approx(0.4));

    Rng rng(7);
    for (const HenonMap& M : {quad_gen(), cubic_gen()}) {
        for (int i = 0; i < 100; ++i) {
            ModelPoint p = random_point(rng, 0.4, 0.02, 0.08);
            ModelPoint composed = p;
            for (int j = 0; j < 3; ++j) composed = lift_apply(M, composed);
            ModelPoint chained = g_chain(M, p, 3);
            CHECK(dist(chained, composed) <
                  1e-12 * std::max(1.0, std::abs(composed.z)));
            CHECK(chained.c == doctest::Approx(composed.c));
        }
    }

    CHECK_THROWS_AS(g_chain(H, pt, 0), Error);
}

TEST_CASE("deck transformations") {
    HenonMap H = quad();
    Rng rng(11);

    // integral classes act as the bitwise identity
    for (int k : {0, 1, -3}) {
        ModelPoint p = random_point(rng, 0.4);
        ModelPoint q = deck_apply(H, {{k, 0}, 2}, p);
        CHECK(q.z == p.z);
        CHECK(q.zeta == p.zeta);
    }

    // gamma_{1/2} for Q = zeta^3: (z, zeta) -> (z + 4 zeta^3, -zeta)
    ModelPoint p = random_point(rng, 0.4);
    ModelPoint q = deck_apply(H, {{1, 1}, 0}, p);
    cd expect = p.z + 4.0 * p.zeta * p.zeta * p.zeta;
    CHECK(std::abs(q.z - expect) < 1e-13 * std::max(1.0, std::abs(expect)));
    CHECK(std::abs(q.zeta + p.zeta) < 1e-15);

    // group law: two quarter turns make a half turn, two halves cancel
    for (const HenonMap& M : {quad(), quad_gen()}) {
        for (int i = 0; i < 50; ++i) {
            ModelPoint s = random_point(rng, 0.4);
            ModelPoint qq =
                deck_apply(M, {{1, 2}, 0}, deck_apply(M, {{1, 2}, 0}, s));
            ModelPoint half = deck_apply(M, {{1, 1}, 0}, s);
            CHECK(dist(qq, half) < 1e-12 * std::max(1.0, std::abs(half.z)));

            ModelPoint back =
                deck_apply(M, {{1, 1}, 0}, deck_apply(M, {{1, 1}, 0}, s));
            CHECK(dist(back, s) < 1e-12 * std::max(1.0, std::abs(s.z)));
        }
    }

    // d = 3: three ninth turns make a third turn
    HenonMap C = cubic_gen();
    for (int i = 0; i < 50; ++i) {
        ModelPoint s = random_point(rng, 0.4);
        ModelPoint three = s;
        for (int j = 0; j < 3; ++j) three = deck_apply(C, {{1, 2}, 0}, three);
        ModelPoint third = deck_apply(C, {{1, 1}, 0}, s);
        CHECK(dist(three, third) < 1e-12 * std::max(1.0, std::abs(third.z)));
    }
}

TEST_CASE("deck and lift commute across levels") {
    // hand expansion for d = 2, Q = zeta^3:
    // both orders give (z/2 + zeta^3 + 4 zeta^6, -zeta^2)
    HenonMap H = quad();
    cd z(0.3, 0.1);
    cd zeta = std::polar(1.1, 0.7);
    ModelPoint pt{z, zeta, 0.2};

    ModelPoint lhs = deck_apply(H, {{1, 1}, 1}, lift_apply(H, pt));
    ModelPoint rhs = lift_apply(H, deck_apply(H, {{1, 2}, 0}, pt));
    cd z3 = zeta * zeta * zeta;
    cd z6 = z3 * z3;
    cd want_z = z / 2.0 + z3 + 4.0 * z6;
    cd want_zeta = -zeta * zeta;
    CHECK(std::abs(lhs.z - want_z) < 1e-13);
    CHECK(std::abs(rhs.z - want_z) < 1e-13);
    CHECK(std::abs(lhs.zeta - want_zeta) < 1e-14);
    CHECK(std::abs(rhs.zeta - want_zeta) < 1e-14);

    for (const HenonMap& M : {quad_gen(), cubic_gen()}) {
        for (int n = 0; n <= 3; ++n) {
            SampleReport rep = verify_comm_cover(M, n, 0, 500, 3);
            CHECK(rep.name == "deck-lift-commutation");
            CHECK(rep.samples == 500);
            CHECK(rep.pass);
            CHECK(rep.max_err <= rep.tolerance);
        }
    }
}

TEST_CASE("model automorphisms form a group") {
    // d = 2: beta = alpha^3 = 1 for every admissible alpha
    ModelAut A(2, 1, {0.5, -0.25});
    CHECK(std::abs(A.beta() - cd(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(A.alpha() - std::polar(1.0, 2.0943951023931953)) < 1e-15);

    ModelAut id(2, 0, {0.0, 0.0});
    ModelAut left = model_aut_compose(id, A);
    CHECK(left.alpha_exponent() == A.alpha_exponent());
    CHECK(std::abs(left.gamma() - A.gamma()) < 1e-15);

    ModelAut inv = model_aut_compose(A.inverse(), A);
    CHECK(inv.alpha_exponent() == 0);
    CHECK(std::abs(inv.gamma()) < 1e-15);

    // d = 3: alpha = e^{2 pi i/8} forces beta = alpha^4 = -1
    ModelAut B(3, 1, {0.0, 0.0});
    CHECK(std::abs(B.beta() - cd(-1.0, 0.0)) < 1e-15);

    ModelAut C = model_aut_compose(B, B);
    CHECK(C.alpha_exponent() == 2);

    ModelAut rebuilt = ModelAut::from_values(3, B.beta(), B.gamma(), B.alpha());
    CHECK(rebuilt.alpha_exponent() == 1);
    CHECK_THROWS_AS(ModelAut::from_values(3, cd(1.0, 0.0), {0.0, 0.0},
                                          B.alpha()),
                    Error);
    CHECK_THROWS_AS(ModelAut::from_values(3, cd(-1.0, 0.0), {0.0, 0.0},
                                          cd(0.9, 0.1)),
                    Error);
    CHECK_THROWS_AS(ModelAut(1, 0, {0.0, 0.0}), Error);
    CHECK_THROWS_AS(model_aut_compose(A, B), Error);

    ModelPoint pt{cd(1.0, 2.0), std::polar(1.2, 0.4), 0.4};
    ModelPoint moved = model_aut_apply(A, pt);
    CHECK(std::abs(moved.z - (A.beta() * pt.z + A.gamma())) < 1e-15);
    CHECK(std::abs(moved.zeta - A.alpha() * pt.zeta) < 1e-15);
    CHECK_THROWS_AS(model_aut_apply(A, ModelPoint{pt.z, cd(0.5, 0.0), 0.4}),
                    Error);
}

TEST_CASE("automorphisms normalize the deck group for pure powers") {
    HenonMap H = quad();
    ModelAut A(2, 1, {0.7, -0.2});
    SampleReport rep =
        model_aut_normalizes_deck(H, A, make_dyadic(1, 1, 2), 200, 5);
    CHECK(rep.name == "aut-normalizes-deck");
    CHECK(rep.pass);
    CHECK(rep.max_err <= 1e-12);

    // translation-only and identity are trivially fine
    CHECK(model_aut_normalizes_deck(H, ModelAut(2, 0, {1.5, 0.5}),
                                    make_dyadic(1, 2, 2), 100)
              .pass);
    CHECK(model_aut_normalizes_deck(H, ModelAut(2, 0, {0.0, 0.0}),
                                    make_dyadic(1, 1, 2), 50)
              .pass);

    HenonMap C = cubic();
    CHECK(model_aut_normalizes_deck(C, ModelAut(3, 2, {0.1, 0.3}),
                                    make_dyadic(1, 1, 3), 200, 9)
              .pass);

    CHECK_THROWS_AS(model_aut_normalizes_deck(quad_gen(), A,
                                              make_dyadic(1, 1, 2), 10),
                    Error);
}
