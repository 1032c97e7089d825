#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "shortc2/boettcher.hpp"
#include "shortc2/henon.hpp"

namespace shortc2 {

// Model polynomial Q driving the lift (z, zeta) -> ((a/d) z + Q(zeta), zeta^d).
// Exact only for d in {2, 3}; the displayed expansion terminates there.
struct QPoly {
    int d;
    std::vector<std::complex<double>> coeffs; // degree 0 .. d+1, constant first

    template <class C>
    C eval(const C& zeta) const {
        C acc(coeffs.back());
        for (int j = static_cast<int>(coeffs.size()) - 2; j >= 0; --j)
            acc = acc * zeta + C(coeffs[j]);
        return acc;
    }
};

QPoly q_poly(const HenonMap& H);

// Point of C x A_c, A_c = {1 < |zeta| < e^c}.
struct ModelPoint {
    std::complex<double> z;
    std::complex<double> zeta;
    double c;
};

// Deck transformation gamma^{(m)}_{k/d^n}; the level index m is bookkeeping,
// the action depends only on the class.
struct DeckTransform {
    DyadicClass cls;
    int m = 0;
};

ModelPoint lift_apply(const HenonMap& H, const ModelPoint& pt);

// Closed form of the n-fold lift:
// ((a/d)^n z + sum_j (a/d)^{n-1-j} Q(zeta^{d^j}), zeta^{d^n}).
ModelPoint g_chain(const HenonMap& H, const ModelPoint& pt, int n);

// z + (d/a) sum_{l<n} (d/a)^l (Q(zeta^{d^l}) - Q((eps zeta)^{d^l})),
// second coordinate eps * zeta, eps = e^{2 pi i k / d^n}. Integral classes
// are the exact identity (empty sum, eps exactly 1).
ModelPoint deck_apply(const HenonMap& H, const DeckTransform& g,
                      const ModelPoint& pt);

struct SampleReport {
    std::string name;
    int samples = 0;
    double max_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Commutation of the deck action with the lift between levels m and m+1:
// gamma^{(m+1)}_{1/d^n} after the lift equals the lift after gamma^{(m)}_{1/d^{n+1}}.
SampleReport verify_comm_cover(const HenonMap& H, int n, int m, int samples,
                               std::uint64_t seed = 0);

// Model automorphism (z, zeta) -> (beta z + gamma, alpha zeta) with
// beta^{d-1} = 1 and alpha^{d+1} = beta; alpha is stored as an exponent mod
// d^2 - 1 so the constraints and the group law are exact.
class ModelAut {
public:
    ModelAut(int d, long long alpha_exp, std::complex<double> gamma);

    // Validates a numeric triple: alpha must sit on a (d^2-1)-th root of
    // unity and beta must equal alpha^{d+1}, both within 1e-9.
    static ModelAut from_values(int d, std::complex<double> beta,
                                std::complex<double> gamma,
                                std::complex<double> alpha);

    int degree() const { return d_; }
    long long alpha_exponent() const { return alpha_exp_; }
    std::complex<double> alpha() const;
    std::complex<double> beta() const;
    std::complex<double> gamma() const { return gamma_; }

    ModelAut inverse() const;

private:
    int d_;
    long long alpha_exp_; // mod d^2 - 1
    std::complex<double> gamma_;
};

ModelAut model_aut_compose(const ModelAut& A2, const ModelAut& A1);
ModelPoint model_aut_apply(const ModelAut& A, const ModelPoint& pt);

// A deck g A^{-1} vs deck g at sample points; exact for p = y^d because
// beta^{1 - d^l} = 1 kills the conjugation in every term.
SampleReport model_aut_normalizes_deck(const HenonMap& H, const ModelAut& A,
                                       DyadicClass g, int samples,
                                       std::uint64_t seed = 0);

} // namespace shortc2
