#pragma once

#include "holant/grid.hpp"

#include <string>
#include <vector>

namespace holant {

// Recovery of the Holant value of a grid carrying the degenerate binary
// straddled signature D = (x+y)^{-1} [[y, xy], [1, x]] in designated slots,
// from evaluations of the grids where each slot holds G1^s instead:
//
//   Holant_{Omega_s} = sum_{i+j=n} (lambda^i mu^j)^s c_{i,j},
//   Holant_{Omega}   = c_{0,n},
//
// a full-rank Vandermonde system whenever lambda/mu is not a root of unity.
struct InterpResult {
    QuadExt value;                 // c_{0,n}: Holant with the normalized D in every slot
    QuadExt xy_scale;              // (x+y)^n, reported separately
    std::vector<QuadExt> nodes;    // lambda^i mu^{n-i}, i = 0..n
    std::vector<QuadExt> coeffs;   // solved c_{i,n-i}
    std::vector<QuadExt> holants;  // Holant_{Omega_s}, s = 0..n
};

InterpResult vandermonde_recover(const SignatureGrid& g, const std::vector<int>& slots,
                                 const SymSig3& f);

// Direct evaluation with the unnormalized [[y,xy],[1,x]] (raw) in every slot
// and with the (x+y)^{-1} prefactor folded in (normalized).
struct DirectDResult {
    QuadExt raw;
    QuadExt normalized;
};
DirectDResult direct_with_D(const SignatureGrid& g, const std::vector<int>& slots,
                            const SymSig3& f);

// Exact linear solve A c = b over a fixed quadratic extension by Gaussian
// elimination with exact division.  Throws internal_error on a singular A.
std::vector<QuadExt> solve_linear(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b);

// Certificate that {s . M^j} spans all unary signatures: exhibits exponents
// j1 != j2 with independent iterates and the exact combinations producing the
// pinning signatures [1,0] and [0,1].
struct UnaryInterpCert {
    Mat2 m;
    Unary s;
    int j1 = 0, j2 = 1;
    Unary v1, v2;                          // s.M^j1, s.M^j2
    std::array<QuadExt, 2> combo_delta0;   // a*v1 + b*v2 = [1,0]
    std::array<QuadExt, 2> combo_delta1;   // a*v1 + b*v2 = [0,1]
    bool replay() const;
    std::string str() const;
};

// Preconditions: M nonsingular with distinct eigenvalues, s not proportional
// to a row eigenvector of M (the error message names the offending one).
UnaryInterpCert unary_interp_coeffs(const Mat2& m, const Unary& s);

}  // namespace holant
