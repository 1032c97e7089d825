#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shortc2 {

// Positive rational in lowest terms. Levels given as rationals make the
// power-of-d test exact; anything else takes the floating fallback.
struct Rat {
    long long num = 0;
    long long den = 1;
};

Rat make_rat(long long num, long long den);

// Accepts "8", "3/2" and plain decimals like "1.5"; rejects signs, zero,
// and anything that does not fit 64-bit after reduction.
std::optional<Rat> parse_positive_rational(const std::string& text);

// Levels c1 and c2 admit a biholomorphism iff c1 = c2 * d^n for a signed
// integer n (realized by H^{+-n}); returns that n, or nullopt. Exact via
// repeated division for rational inputs.
std::optional<long long> biholo_criterion(const Rat& c1, const Rat& c2, int d);

// Floating fallback: round log(c1/c2)/log d to the nearest integer and
// accept within 1e-12 relative.
std::optional<long long> biholo_criterion(double c1, double c2, int d);

struct PairCertificate {
    int i = 0;
    int j = 0;
    bool none = false; // criterion returned no exponent for this pair
};

struct ContinuumFamily {
    double lo = 0.0; // open interval (c/d, c)
    double hi = 0.0;
    std::vector<double> levels;
    std::vector<PairCertificate> certificates; // all pairs i < j
    bool all_none = false;
};

// count levels strictly inside (c/d, c) with a criterion certificate for
// every pair; any two distinct levels there have ratio in (1/d, d) \ {1},
// so every certificate comes back none.
ContinuumFamily continuum_family(double c, int d, int count);

struct InvolutionReport {
    int samples = 0;
    double max_discrepancy = 0.0;
    double max_combined_bound = 0.0;
    bool pass = false;
};

// For H = (y, y^2 - x) the coordinate swap I(x,y) = (y,x) conjugates H to
// H^{-1}, so G+(x,y) = G-(y,x). Checked at random certified-escaping points
// against the sum of the two certified bounds.
InvolutionReport involution_check(int samples, std::uint64_t seed = 0);

} // namespace shortc2
