#pragma once

#include <string>
#include <vector>

#include "shortc2/henon.hpp"

namespace shortc2 {

// Certified value of a Green's function at a point, natural-log units.
// escaped=true: |G - value| <= error_bound, value > 0.
// escaped=false, undecided=false: orbit confined for the full budget; value 0
//   is the budget-limited claim, not a certificate.
// undecided=true: budget ran out mid-certification; value must not be used.
struct GreenEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    long long iterations = 0;
    bool escaped = false;
    bool undecided = false;
};

struct LevelSpec {
    double c;
};

enum class Membership { K_plus, Omega_prime_interior, boundary_unresolved, outside };

inline constexpr long long kDefaultBudget = 10000;

// Forward Green's function lim d^{-n} log+ |y_n|. Certified once the orbit
// enters V+_{R0}: value = d^{-n0} log|y_{n0}| + sum_{k>=n0} d^{-(k+1)} log|1+q_k/y_k^d|,
// truncated when the geometric tail majorant 4C/((2d-1)|y_N| d^N) drops
// under tol (C = sum|a_i| + |a|; |y| at least doubles per step on V+_{R0}).
GreenEstimate green_plus(const HenonMap& H, const ComplexPair& z, double tol,
                         long long budget = kDefaultBudget);

// Backward analogue along H^{-1}; x dominates on V-_{R0-}. The exact per-step
// -log|a| contribution is folded in closed form: value at truncation N is
// d^{-N}(log|x_N| - log|a|/(d-1)) plus the same style of tail control.
GreenEstimate green_minus(const HenonMap& H, const ComplexPair& z, double tol,
                          long long budget = kDefaultBudget);

Membership membership(const HenonMap& H, const ComplexPair& z, LevelSpec level,
                      long long budget = kDefaultBudget);

const char* membership_name(Membership m);

// Two-sided bound for |G+ - log|y|| on V+_R: 4C/((2d-1)R), R >= R0.
double log_gap_bound(const HenonMap& H, double R);

// Least R (doubling search from R0) with log_gap_bound(R) < eps. The chosen
// R, eps, and bound constant are echoed in render/verify metadata.
double r_epsilon(const HenonMap& H, double eps);

// Affine 2-plane s,t -> origin + s*u + t*v in C^2.
struct SlicePlane {
    ComplexPair origin{{0.0, 0.0}, {0.0, 0.0}};
    ComplexPair u{{0.0, 0.0}, {1.0, 0.0}};
    ComplexPair v{{0.0, 0.0}, {0.0, 1.0}};
};

struct GridSpec {
    int nx;
    int ny;
    double smin, smax;
    double tmin, tmax;
};

struct GridResult {
    GridSpec grid;
    SlicePlane plane;
    double level;
    double tol;
    long long budget;
    std::vector<GreenEstimate> cells; // row-major, index j*nx + i
    std::vector<Membership> tags;
};

// Cell-centered sampling; rows over t, columns over s. Parallel over rows,
// merged by index, so output is identical regardless of thread count.
GridResult render_slice(const HenonMap& H, const SlicePlane& plane,
                        const GridSpec& grid, LevelSpec level,
                        double tol = 1e-9, long long budget = kDefaultBudget);

} // namespace shortc2
