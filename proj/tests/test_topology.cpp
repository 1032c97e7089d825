#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "shortc2/error.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"
#include "shortc2/topology.hpp"

using namespace shortc2;
using cd = std::complex<double>;

namespace {
HenonMap quad() { return HenonMap(MonicPoly(2, {{0.0, 0.0}}), {1.0, 0.0}); }

// every sample carries a certificate strictly between 0 and c, and at these
// shallow push levels direct evaluation must agree with it
void check_certified(const HenonMap& H, const SampledPath& path, double c) {
    REQUIRE(path.certificates.size() == path.points.size());
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const GreenEstimate& cert = path.certificates[i];
        REQUIRE(cert.escaped);
        CHECK(cert.value - cert.error_bound > 0.0);
        CHECK(cert.value + cert.error_bound < c);
        GreenEstimate g = green_plus(H, path.points[i], 1e-9);
        REQUIRE(g.escaped);
        CHECK(g.value - g.error_bound > 0.0);
        CHECK(g.value + g.error_bound < c);
        CHECK(std::abs(g.value - cert.value) <=
              g.error_bound + cert.error_bound);
    }
}
} // namespace

TEST_CASE("trivial connection") {
    HenonMap H = quad();
    ComplexPair A{{0.0, 0.0}, {4.0, 0.0}};
    SampledPath p = connect_points(H, A, A, {2.0});
    REQUIRE(p.points.size() >= 2);
    CHECK(p.points.front().x == A.x);
    CHECK(p.points.front().y == A.y);
    CHECK(p.points.back().x == A.x);
    CHECK(p.points.back().y == A.y);
}

TEST_CASE("connections stay inside the sublevel annulus") {
    HenonMap H = quad();
    ComplexPair A{{0.0, 0.0}, {4.0, 0.0}};
    ComplexPair B{{0.0, 0.0}, {0.0, 4.0}};
    SampledPath p = connect_points(H, A, B, {2.0});
    CHECK(p.points.front().y == A.y);
    CHECK(p.points.back().y == B.y);
    check_certified(H, p, 2.0);

    // different levels at the two ends: G(0,6) = 1.79..., still below c = 2
    ComplexPair C{{0.0, 0.0}, {6.0, 0.0}};
    SampledPath q = connect_points(H, A, C, {2.0});
    CHECK(q.points.back().y == C.y);
    check_certified(H, q, 2.0);

    // endpoint outside: G(0,4) = 1.38 > c = 1
    CHECK_THROWS_AS(connect_points(H, A, B, {1.0}), Error);
    CHECK_THROWS_AS(connect_points(H, A, B, {0.0}), Error);
}

TEST_CASE("reverse and concat keep junctions exact") {
    HenonMap H = quad();
    ComplexPair A{{0.0, 0.0}, {4.0, 0.0}};
    ComplexPair B{{0.0, 0.0}, {0.0, 4.0}};
    SampledPath p = connect_points(H, A, B, {2.0});

    SampledPath r = reverse_path(p);
    CHECK(r.points.front().y == B.y);
    CHECK(r.points.back().y == A.y);
    REQUIRE(r.points.size() == p.points.size());

    SampledPath loop = concat_paths(p, r);
    CHECK(loop.points.front().y == loop.points.back().y);
    CHECK(loop.points.size() == 2 * p.points.size() - 1);
    CHECK(winding_class(H, loop, {2.0}) == DyadicClass{0, 0});

    SampledPath disjoint;
    disjoint.points = {{{1.0, 0.0}, {5.0, 0.0}}, {{1.0, 0.0}, {6.0, 0.0}}};
    CHECK_THROWS_AS(concat_paths(p, disjoint), Error);
}

TEST_CASE("canonical loops and exact pull-back division") {
    HenonMap H = quad();
    SampledPath c0 = canonical_loop(H, 1);
    CHECK(c0.points.front().y == c0.points.back().y);
    CHECK(winding_class(H, c0, {8.0}) == DyadicClass{1, 0});

    CHECK(winding_class(H, canonical_loop(H, 0), {8.0}) == DyadicClass{0, 0});
    CHECK(winding_class(H, canonical_loop(H, -2), {8.0}) ==
          DyadicClass{-2, 0});

    SampledPath p1 = pull_back_loop(H, c0, 1);
    CHECK(winding_class(H, p1, {8.0}) == DyadicClass{1, 1});
    SampledPath p2 = pull_back_loop(H, c0, 2);
    CHECK(winding_class(H, p2, {8.0}) == DyadicClass{1, 2});

    // push-forward multiplies the class back up
    CHECK(winding_class(H, push_forward_path(H, p1), {8.0}) ==
          DyadicClass{1, 0});

    // inverse images of loop points stay on the curve: apply returns them
    for (std::size_t i = 0; i < p1.points.size(); i += 7) {
        ComplexPair fwd = apply(H, p1.points[i]);
        GreenEstimate g = green_plus(H, fwd, 1e-9);
        REQUIRE(g.escaped);
    }
}

TEST_CASE("chained pull-backs classify like a single deep pull") {
    HenonMap H = quad();
    SampledPath c0 = canonical_loop(H, 1);

    SampledPath chained = c0;
    for (int k = 0; k < 4; ++k) chained = pull_back_loop(H, chained, 1);
    SampledPath direct = pull_back_loop(H, c0, 4);

    CHECK(chained.pulled == 4);
    CHECK(direct.pulled == 4);
    REQUIRE(chained.source != nullptr);
    // flattened: the recorded base is an ordinary loop, not another pull-back
    CHECK(chained.source->source == nullptr);
    CHECK(winding_class(H, chained, {2.0}) == make_dyadic(1, 4, 2));
    CHECK(winding_class(H, direct, {2.0}) == make_dyadic(1, 4, 2));

    // reversal negates the class and keeps the provenance usable
    CHECK(winding_class(H, reverse_path(direct), {2.0}) ==
          make_dyadic(-1, 4, 2));
}
