#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"

namespace shortc2 {

// Piecewise-linear path in C^2. refinement_tol is the target per-step
// argument change (radians) of the pushed-forward y coordinate; the hard
// continuation bound pi/2 always applies. first == last marks a loop.
//
// Constructive metadata (optional, not serialized):
//  - certificates: per-sample enclosures of G+ recorded by the op that built
//    the path. Ops that construct samples as exact pull-backs certify them at
//    the shallow level and transfer through G+(H^{-1}w) = G+(w)/d, because a
//    direct forward evaluation of a deep pulled point loses all significant
//    digits to the p(y)-ax collapse.
//  - source/pulled: pull-back provenance. points[i] is the pulled_-fold
//    inverse image of source->points[i], computed backward (stable direction).
struct SampledPath {
    std::vector<ComplexPair> points;
    double refinement_tol = 0.7853981633974483; // pi/4
    std::vector<GreenEstimate> certificates;
    std::shared_ptr<const SampledPath> source;
    int pulled = 0;
};

// Reduced d-adic rational k/d^n: d does not divide k unless n = 0.
struct DyadicClass {
    long long k = 0;
    int n = 0;

    bool operator==(const DyadicClass&) const = default;
};

DyadicClass make_dyadic(long long k, int n, int d);
DyadicClass dyadic_add(DyadicClass a, DyadicClass b, int d);
DyadicClass dyadic_neg(DyadicClass a);
// value * d^j (j may be negative).
DyadicClass dyadic_scale_pow(DyadicClass a, int j, int d);
// representative of the class mod 1 with k in [0, d^n).
DyadicClass dyadic_mod1(DyadicClass a, int d);
double dyadic_value(DyadicClass a, int d);

// One branch of log phi+ at a point; Re equals G+ within certified error.
struct BranchValue {
    std::complex<double> log_phi;
};

struct PhiValue {
    std::complex<double> value;
    double truncation_bound; // bound on the dropped log-sum tail
};

// Truncated Boettcher product phi+ = y * prod_j (1 + q(x_j,y_j)/y_j^d)^{1/d^{j+1}},
// q(x,y) = p(y) - y^d - a x, every root by principal log (|q/y^d| < 1/2 on
// V+_{R0} keeps the principal branch valid).
PhiValue phi_plus(const HenonMap& H, const ComplexPair& z, int terms);

// Principal branch of log phi+ at z in V+_{R0}, summed until the certified
// tail is below tol.
BranchValue principal_log_phi(const HenonMap& H, const ComplexPair& z,
                              double tol = 1e-13);

// Analytic continuation of log phi+ along the path: pushes samples forward
// into V+ (margin |y| >= 2 R0), tracks arg y continuously with adaptive
// midpoint insertion (depth 24), adds the pointwise correction sum, and
// divides the increment by d^n.
BranchValue continue_log_phi(const HenonMap& H, const SampledPath& path,
                             const BranchValue& seed);

// Covering coordinate: phi+(base) * exp(continued increment) for a path from
// a base point in V+_{R0} to z, all samples certified inside Omega'_c.
std::complex<double> hat_phi(const HenonMap& H, const SampledPath& path,
                             LevelSpec c);

// d-adic winding invariant of a closed loop in Omega'_c: integer winding of
// the pushed y coordinate divided by d^{n0}.
DyadicClass winding_class(const HenonMap& H, const SampledPath& loop,
                          LevelSpec c);

} // namespace shortc2
