#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace shortc2 {

// Seeded sampling with platform-independent uniforms (mt19937_64 output is
// fully specified; the 53-bit scaling avoids distribution objects whose
// streams are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::complex<double> complex_box(double r) {
        double re = uniform(-r, r);
        double im = uniform(-r, r);
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
};

} // namespace shortc2
