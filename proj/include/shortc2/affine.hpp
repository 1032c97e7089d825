#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "shortc2/henon.hpp"

namespace shortc2 {

// Diagonal map L(x, y) = (e x, f y) with f = e^d and e = f^d, hence
// e^{d^2-1} = 1. Stored as the exponent of e on the (d^2-1)-th roots of
// unity so group arithmetic is exact.
struct DiagonalSym {
    int d;
    long long exponent; // e = exp(2 pi i exponent / (d^2-1))

    std::complex<double> e() const;
    std::complex<double> f() const;
};

ComplexPair diag_apply(const DiagonalSym& L, const ComplexPair& z);

// Cyclic subgroup of Z_{d^2-1} of accepted exponents, listed in increasing
// exponent order (identity first).
struct AffineGroup {
    long long modulus;            // d^2 - 1
    long long order;              // number of elements
    long long generator_exponent; // 0 only for the trivial group
    std::vector<DiagonalSym> elements;
};

// Diagonal affine maps preserving K+ of the normalized map: exponent m is
// accepted iff for every nonzero coefficient a_j of p both
// m (d j - 1) = 0 and m (j - d) = 0 hold mod d^2 - 1, i.e. eta^{d j} = eta
// and eta^j = eta^d. The accepted set is a subgroup, hence cyclic.
AffineGroup affine_preservers(const HenonMap& H);

struct SemiConjReport {
    bool pass = false;
    int offending_coeff = -1; // monomial exponent j of the first failure
};

// Exact coefficientwise check of H o L_eta = L_{eta^d} o H. The x-term and
// the leading term cancel for every eta with eta^{d^2-1} = 1; the identity
// holds iff every nonzero a_j satisfies exponent * (j - d) = 0 mod d^2 - 1.
SemiConjReport verify_L_semiconjugacy(const HenonMap& H, const DiagonalSym& L);

struct CommuteReport {
    bool symbolic_pass = false; // exact exponent conditions
    int samples = 0;
    double max_err = 0.0;
    double tolerance = 0.0;
    bool pass = false; // symbolic and numerical both
};

// L o H^2 = H^2 o L, checked symbolically (the two acceptance conditions of
// affine_preservers, which are exact) and numerically at random points.
CommuteReport verify_commute_H2(const HenonMap& H, const DiagonalSym& L,
                                int samples = 1000, std::uint64_t seed = 0);

} // namespace shortc2
