#include "shortc2/henon.hpp"

#include <cmath>

namespace shortc2 {

MonicPoly::MonicPoly(int d, std::vector<std::complex<double>> low)
    : d_(d), low_(std::move(low)) {
    if (d_ < 2) throw Error("bad-map", "degree must be >= 2");
    if (low_.size() != static_cast<size_t>(d_ - 1))
        throw Error("bad-map", "expected d-1 lower coefficients (a_0..a_{d-2})");
    for (const auto& c : low_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error("bad-map", "non-finite coefficient");
    }
}

double MonicPoly::coeff_abs_sum() const {
    double s = 0.0;
    for (const auto& c : low_) s += std::abs(c);
    return s;
}

HenonMap::HenonMap(MonicPoly poly, std::complex<double> jac)
    : p(std::move(poly)), a(jac) {
    if (a == std::complex<double>(0.0, 0.0))
        throw Error("bad-map", "Jacobian parameter a must be nonzero");
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw Error("bad-map", "non-finite Jacobian parameter");
}

FiltrationRegion classify(const ComplexPair& z, double R) {
    double ax = std::abs(z.x);
    double ay = std::abs(z.y);
    if (ay >= ax && ay >= R) return FiltrationRegion::Vplus;
    if (ax >= ay && ax >= R) return FiltrationRegion::Vminus;
    return FiltrationRegion::V;
}

double escape_radius(const HenonMap& H) {
    return std::max(2.0, 2.0 * (1.0 + std::abs(H.a) + H.p.coeff_abs_sum()));
}

double escape_radius_backward(const HenonMap& H) {
    return std::max(2.0, 2.0 * (1.0 + H.p.coeff_abs_sum() + 2.0 * std::abs(H.a)));
}

double tail_constant(const HenonMap& H) {
    return H.p.coeff_abs_sum() + std::abs(H.a);
}

double tail_constant_backward(const HenonMap& H) {
    return H.p.coeff_abs_sum() + 1.0;
}

namespace {

bool finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace

ComplexPair apply(const HenonMap& H, const ComplexPair& z) {
    std::complex<double> x = z.x, y = z.y;
    step(H, x, y);
    if (!finite(x) || !finite(y))
        throw Error("orbit-overflow", "forward image exceeds double range");
    return {x, y};
}

ComplexPair apply_inverse(const HenonMap& H, const ComplexPair& z) {
    std::complex<double> x = z.x, y = z.y;
    step_back(H, x, y);
    if (!finite(x) || !finite(y))
        throw Error("orbit-overflow", "inverse image exceeds double range");
    return {x, y};
}

NormalizedMap normalize(const std::vector<std::complex<double>>& raw_low,
                        std::complex<double> a) {
    const int d = static_cast<int>(raw_low.size());
    if (d < 2) throw Error("bad-map", "degree must be >= 2");
    std::complex<double> t = -raw_low[d - 1] / static_cast<double>(d);

    // Taylor shift: in-place synthetic division gives p(y + t), constant first.
    std::vector<std::complex<double>> w(raw_low);
    w.push_back(1.0);
    for (int k = 0; k < d; ++k) {
        for (int j = d - 1; j >= k; --j) {
            w[j] += t * w[j + 1];
        }
    }
    w[0] -= (a + 1.0) * t;

    std::vector<std::complex<double>> low(w.begin(), w.begin() + (d - 1));
    // w[d-1] is zero by construction of t up to roundoff; drop it exactly.
    return NormalizedMap{HenonMap(MonicPoly(d, std::move(low)), a), t};
}

} // namespace shortc2
