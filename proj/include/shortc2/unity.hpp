#pragma once

#include <cmath>
#include <complex>

namespace shortc2 {

// e^{2 pi i k / M}, exact 1 at k = 0 mod M so identity elements stay exact.
inline std::complex<double> root_of_unity(long long k, long long M) {
    k %= M;
    if (k < 0) k += M;
    if (k == 0) return {1.0, 0.0};
    double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                 static_cast<double>(M);
    return {std::cos(ang), std::sin(ang)};
}

inline long long mod_norm(long long v, long long M) {
    v %= M;
    if (v < 0) v += M;
    return v;
}

} // namespace shortc2
