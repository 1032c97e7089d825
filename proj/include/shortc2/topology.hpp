#pragma once

#include "shortc2/boettcher.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"

namespace shortc2 {

// Connecting path inside Omega'_c between certified members A and B.
// Construction: pick c1 = max certified G+ of the endpoints, an epsilon and
// the least n0 with d^{n0}(c - c1) > 4 epsilon and both H^{n0} images inside
// V+_{R_epsilon}; build a three-leg path sigma there (radial |y| match with x
// shrunk to 0, arg-y rotation at x = 0, linear x leg to the target) and pull
// it back n0 steps. Epsilon is chosen adaptively (largest allowed by the
// margin, capped at 1) to keep n0, and with it the pulled-back coordinate
// magnitudes, as small as possible.
SampledPath connect_points(const HenonMap& H, const ComplexPair& A,
                           const ComplexPair& B, LevelSpec c);

// Circle t -> (0, R' e^{2 pi i m t}) traversed m times (m < 0 reverses),
// R' = R_epsilon + 3/4. m = 0 gives the constant loop.
SampledPath canonical_loop(const HenonMap& H, long long m, double eps = 1e-3);

// Pointwise inverse image of a closed loop, n times, with recursive midpoint
// refinement keeping consecutive pulled samples within a relative spacing
// bound. Inserted samples are exact pull-backs of original-segment midpoints,
// so every output point lies on the true pulled curve.
SampledPath pull_back_loop(const HenonMap& H, const SampledPath& loop, int n);

// Pointwise forward image.
SampledPath push_forward_path(const HenonMap& H, const SampledPath& path);

// a.back() must equal b.front() exactly.
SampledPath concat_paths(const SampledPath& a, const SampledPath& b);

SampledPath reverse_path(const SampledPath& a);

} // namespace shortc2
