#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace shortc2 {

// Complex number with an extended binary exponent: value = man * 2^exp with
// |man| kept in [1, 2) while nonzero. Orbit moduli under a degree-d map square
// (or worse) every step, so doubles overflow after ~10 iterations; this type
// keeps iteration exact in range while staying pure double arithmetic.
//
// Zero is canonically {0, 0}. NaN/Inf mantissas propagate and are reported by
// finite().
class XComplex {
public:
    XComplex() : man_(0.0, 0.0), exp_(0) {}
    XComplex(double re) : man_(re, 0.0), exp_(0) { normalize(); }
    XComplex(std::complex<double> v) : man_(v), exp_(0) { normalize(); }
    XComplex(std::complex<double> man, long long exp) : man_(man), exp_(exp) {
        normalize();
    }

    std::complex<double> mantissa() const { return man_; }
    long long exponent() const { return exp_; }

    bool is_zero() const { return man_ == std::complex<double>(0.0, 0.0); }

    bool finite() const {
        return std::isfinite(man_.real()) && std::isfinite(man_.imag());
    }

    // Natural log of |value|; -inf for zero.
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(man_)) + static_cast<double>(exp_) * kLn2;
    }

    double arg() const { return std::arg(man_); }

    // Lossy; overflows to inf / underflows to 0 outside double range.
    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        int e = static_cast<int>(std::clamp<long long>(exp_, -4400, 4400));
        return {std::ldexp(man_.real(), e), std::ldexp(man_.imag(), e)};
    }

    XComplex operator-() const {
        XComplex r = *this;
        r.man_ = -r.man_;
        return r;
    }

    XComplex conj() const {
        XComplex r = *this;
        r.man_ = std::conj(r.man_);
        return r;
    }

    friend XComplex operator*(const XComplex& a, const XComplex& b) {
        if (a.is_zero() || b.is_zero()) return XComplex();
        return XComplex(a.man_ * b.man_, a.exp_ + b.exp_);
    }

    friend XComplex operator/(const XComplex& a, const XComplex& b) {
        return XComplex(a.man_ / b.man_, a.exp_ - b.exp_);
    }

    friend XComplex operator+(const XComplex& a, const XComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const XComplex* hi = &a;
        const XComplex* lo = &b;
        if (hi->exp_ < lo->exp_) std::swap(hi, lo);
        long long shift = lo->exp_ - hi->exp_; // <= 0
        if (shift < -120) return *hi;          // below one ulp of hi
        std::complex<double> l(std::ldexp(lo->man_.real(), (int)shift),
                               std::ldexp(lo->man_.imag(), (int)shift));
        return XComplex(hi->man_ + l, hi->exp_);
    }

    friend XComplex operator-(const XComplex& a, const XComplex& b) {
        return a + (-b);
    }

    // Integer power, n >= 0.
    XComplex pow_int(long long n) const {
        XComplex acc(1.0);
        XComplex base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    // Builds exp(log_mag) * e^{i angle} without overflow for any log_mag.
    static XComplex from_log_polar(double log_mag, double angle) {
        double e = std::floor(log_mag / kLn2);
        double frac = log_mag - e * kLn2; // in [0, ln 2)
        double m = std::exp(frac);
        return XComplex(std::complex<double>(m * std::cos(angle), m * std::sin(angle)),
                        static_cast<long long>(e));
    }

private:
    static constexpr double kLn2 = 0.693147180559945309417232121458;

    void normalize() {
        double a = std::abs(man_);
        if (a == 0.0 || !std::isfinite(a)) {
            if (a == 0.0) exp_ = 0;
            return;
        }
        int k = std::ilogb(a);
        if (k != 0) {
            man_ = {std::ldexp(man_.real(), -k), std::ldexp(man_.imag(), -k)};
            exp_ += k;
        }
    }

    std::complex<double> man_;
    long long exp_;
};

// Principal-branch angle of b relative to a, in (-pi, pi]. Exponents do not
// affect arguments, so this is exact on mantissas.
inline double arg_step(const XComplex& a, const XComplex& b) {
    return std::arg(b.mantissa() * std::conj(a.mantissa()));
}

} // namespace shortc2
