#pragma once

#include <cmath>
#include <complex>
#include <vector>

// Independent reference computations for the tests: raw limit definitions
// iterated in std::complex<long double>, sharing no code with the library.
// Values are read off once the orbit modulus passes 1e340, where every
// dropped tail term is far below long double resolution.
namespace oracle {

using C = std::complex<long double>;

struct Map {
    int d;
    C a;
    std::vector<C> low; // a_0 .. a_{d-2}; y^{d-1} coefficient is zero
};

inline C eval_p(const Map& m, C y) {
    C acc = y;
    for (int j = m.d - 2; j >= 0; --j) acc = acc * y + m.low[j];
    return acc;
}

inline C eval_low(const Map& m, C y) {
    C acc = 0.0L;
    for (int j = m.d - 2; j >= 0; --j) acc = acc * y + m.low[j];
    return acc;
}

// d^{-n} log|y_n| at the first n with |y_n| > 1e340; -1 if the orbit stays
// in long double range for max_iter steps (callers only use fast escapers).
inline long double green_plus_raw(const Map& m, C x, C y, int max_iter = 80) {
    for (int n = 0; n <= max_iter; ++n) {
        if (std::abs(y) > 1e340L)
            return std::log(std::abs(y)) /
                   std::pow(static_cast<long double>(m.d), n);
        C ny = eval_p(m, y) - m.a * x;
        x = y;
        y = ny;
    }
    return -1.0L;
}

inline long double green_minus_raw(const Map& m, C x, C y,
                                   int max_iter = 80) {
    for (int n = 0; n <= max_iter; ++n) {
        if (std::abs(x) > 1e340L)
            return std::log(std::abs(x)) /
                   std::pow(static_cast<long double>(m.d), n);
        C nx = (eval_p(m, x) - y) / m.a;
        y = x;
        x = nx;
    }
    return -1.0L;
}

// Truncated Boettcher log-sum log y + sum d^{-(j+1)} log(1 + q_j/y_j^d),
// q(x,y) = p(y) - y^d - a x. Terms past the long double range contribute
// below 1e-600 and are dropped.
inline C log_phi_raw(const Map& m, C x, C y, int terms) {
    C lphi = std::log(y);
    long double scale = 1.0L;
    for (int j = 0; j < terms; ++j) {
        if (std::abs(y) > 1e300L) break;
        C yd = std::pow(y, m.d);
        C q = eval_low(m, y) - m.a * x;
        scale /= m.d;
        lphi += scale * std::log(C(1.0L) + q / yd);
        C ny = yd + eval_low(m, y) - m.a * x;
        x = y;
        y = ny;
    }
    return lphi;
}

} // namespace oracle
