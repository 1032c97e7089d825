#include "shortc2/affine.hpp"

#include <algorithm>
#include <cmath>

#include "shortc2/error.hpp"
#include "shortc2/rng.hpp"
#include "shortc2/unity.hpp"

namespace shortc2 {

namespace {

long long modulus_of(int d) { return static_cast<long long>(d) * d - 1; }

// Both coefficient conditions for exponent m: eta^{d j} = eta and
// eta^j = eta^d for every nonzero a_j.
bool accepts(const HenonMap& H, long long m) {
    const int d = H.degree();
    const long long M = modulus_of(d);
    const auto& low = H.p.low_coeffs();
    for (int j = 0; j < static_cast<int>(low.size()); ++j) {
        if (low[j] == std::complex<double>(0.0, 0.0)) continue;
        if (mod_norm(m * (static_cast<long long>(d) * j - 1), M) != 0)
            return false;
        if (mod_norm(m * (j - d), M) != 0) return false;
    }
    return true;
}

} // namespace

std::complex<double> DiagonalSym::e() const {
    return root_of_unity(exponent, modulus_of(d));
}

std::complex<double> DiagonalSym::f() const {
    return root_of_unity(exponent * d, modulus_of(d));
}

ComplexPair diag_apply(const DiagonalSym& L, const ComplexPair& z) {
    return {L.e() * z.x, L.f() * z.y};
}

AffineGroup affine_preservers(const HenonMap& H) {
    const int d = H.degree();
    const long long M = modulus_of(d);
    AffineGroup G;
    G.modulus = M;
    for (long long m = 0; m < M; ++m) {
        if (accepts(H, m)) G.elements.push_back(DiagonalSym{d, m});
    }
    G.order = static_cast<long long>(G.elements.size());
    G.generator_exponent = G.order > 1 ? G.elements[1].exponent : 0;
    return G;
}

SemiConjReport verify_L_semiconjugacy(const HenonMap& H,
                                      const DiagonalSym& L) {
    const int d = H.degree();
    const long long M = modulus_of(d);
    SemiConjReport rep;
    rep.pass = true;
    const auto& low = H.p.low_coeffs();
    for (int j = 0; j < static_cast<int>(low.size()); ++j) {
        if (low[j] == std::complex<double>(0.0, 0.0)) continue;
        if (mod_norm(L.exponent * (j - d), M) != 0) {
            rep.pass = false;
            rep.offending_coeff = j;
            return rep;
        }
    }
    return rep;
}

CommuteReport verify_commute_H2(const HenonMap& H, const DiagonalSym& L,
                                int samples, std::uint64_t seed) {
    if (samples < 1) throw Error("bad-iterate", "samples >= 1 required");
    CommuteReport rep;
    rep.symbolic_pass = accepts(H, L.exponent);
    rep.samples = samples;
    rep.tolerance = 1e-10;

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        ComplexPair z{rng.complex_box(2.0), rng.complex_box(2.0)};
        ComplexPair lhs = diag_apply(L, apply(H, apply(H, z)));
        ComplexPair rhs = apply(H, apply(H, diag_apply(L, z)));
        double scale = std::max({1.0, std::abs(rhs.x), std::abs(rhs.y)});
        double err =
            std::max(std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y)) / scale;
        rep.max_err = std::max(rep.max_err, err);
    }
    rep.pass = rep.symbolic_pass && rep.max_err < rep.tolerance;
    return rep;
}

} // namespace shortc2
