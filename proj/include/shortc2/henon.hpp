#pragma once

#include <complex>
#include <vector>

#include "shortc2/error.hpp"
#include "shortc2/xcomplex.hpp"

namespace shortc2 {

struct ComplexPair {
    std::complex<double> x;
    std::complex<double> y;
};

// Monic polynomial in normal form: p(y) = y^d + a_{d-2} y^{d-2} + ... + a_0.
// The y^{d-1} coefficient is identically zero and not stored; normalize()
// produces this form from a general monic polynomial.
class MonicPoly {
public:
    // low = {a_0, ..., a_{d-2}}, constant term first.
    MonicPoly(int d, std::vector<std::complex<double>> low);

    int degree() const { return d_; }
    const std::vector<std::complex<double>>& low_coeffs() const { return low_; }

    // Horner evaluation. C is std::complex<double> or XComplex.
    template <class C>
    C eval(const C& y) const {
        C acc(1.0);
        acc = acc * y; // y^{d-1} coefficient is zero
        for (int j = d_ - 2; j >= 0; --j) {
            acc = acc * y + C(low_[j]);
        }
        return acc;
    }

    // q(y) = p(y) - y^d, the sub-leading part driving all tail bounds.
    template <class C>
    C eval_low(const C& y) const {
        if (d_ == 2) return C(low_[0]);
        C acc(low_[d_ - 2]);
        for (int j = d_ - 3; j >= 0; --j) {
            acc = acc * y + C(low_[j]);
        }
        return acc;
    }

    double coeff_abs_sum() const;

private:
    int d_;
    std::vector<std::complex<double>> low_;
};

// H(x, y) = (y, p(y) - a x), a != 0.
struct HenonMap {
    HenonMap(MonicPoly poly, std::complex<double> jac);

    MonicPoly p;
    std::complex<double> a;

    int degree() const { return p.degree(); }
};

enum class FiltrationRegion { V, Vplus, Vminus };

// Vplus = {|y| >= max(|x|, R)}, Vminus = {|x| >= max(|y|, R)}, V the rest.
// Ties resolve Vplus over Vminus over V.
FiltrationRegion classify(const ComplexPair& z, double R);

// R0 = max(2, 2(1 + |a| + sum |a_i|)). On V+_{R0}: |y'| >= 2|y| and
// |q(x,y)| / |y|^d <= C/|y| < 1/2 with C = sum|a_i| + |a|.
double escape_radius(const HenonMap& H);

// Backward analogue: R0- = max(2, 2(1 + sum|a_i| + 2|a|)). On V-_{R0-} the
// inverse doubles |x| and the backward relative defect is < 1/2.
double escape_radius_backward(const HenonMap& H);

// Tail constants C for the geometric defect majorants above.
double tail_constant(const HenonMap& H);
double tail_constant_backward(const HenonMap& H);

ComplexPair apply(const HenonMap& H, const ComplexPair& z);
ComplexPair apply_inverse(const HenonMap& H, const ComplexPair& z);

// One forward step in arbitrary scalar arithmetic: (x, y) -> (y, p(y) - a x).
template <class C>
void step(const HenonMap& H, C& x, C& y) {
    C ny = H.p.eval(y) - C(H.a) * x;
    x = y;
    y = ny;
}

// Inverse step: (x, y) -> ((p(x) - y) / a, x).
template <class C>
void step_back(const HenonMap& H, C& x, C& y) {
    C nx = (H.p.eval(x) - y) / C(H.a);
    y = x;
    x = nx;
}

struct NormalizedMap {
    HenonMap map;
    std::complex<double> translation; // conjugating shift t applied to both coordinates
};

// Conjugates (y, p_raw(y) - a x) by (x, y) -> (x + t, y + t), t = -c_{d-1}/d,
// killing the y^{d-1} coefficient: p_new(y) = p_raw(y + t) - (a + 1) t.
// raw_low = {c_0, ..., c_{d-1}} of the monic degree-d input, constant first.
NormalizedMap normalize(const std::vector<std::complex<double>>& raw_low,
                        std::complex<double> a);

} // namespace shortc2
