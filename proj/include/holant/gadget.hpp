#pragma once

#include "holant/signature.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace holant {

enum class Side { LHS, RHS };

// A pendant unary vertex hanging off a ternary vertex.  The unary itself
// lives on the opposite side of the bipartition: [1,x] attached to an LHS
// vertex is an RHS signature, [y,1] attached to an RHS vertex is LHS.
struct UnaryAttachment {
    Side vertex_side;
    int vertex;
    Unary weight;
};

struct DanglingEdge {
    Side vertex_side;  // a dangling edge off an LHS vertex is LHS-exposed
    int vertex;
};

// A bipartite gadget: LHS vertices carry the working ternary signature f,
// RHS vertices carry =3.  Every ternary vertex must end up with total degree
// 3 (internal edges + dangling edges + attachments), and the side profile
// must satisfy m - n == 0 mod 3.
struct Gadget {
    int lhs_count = 0;
    int rhs_count = 0;
    std::vector<std::pair<int, int>> internal_edges;  // (lhs, rhs), multiset
    std::vector<UnaryAttachment> unary_attachments;
    std::vector<DanglingEdge> dangling;  // declared order = variable order

    void validate() const;  // throws input_error
};

struct GadgetSignature {
    DenseSig dense;
    int m = 0, n = 0;  // LHS-exposed / RHS-exposed dangling counts

    // Straddled m = n = 1 signature as a matrix: row index is the LHS-exposed
    // variable, column the RHS-exposed one.
    Mat2 as_mat2() const;
    // Arity-3 symmetric signature with rational entries.
    SymSig3 as_sym3() const;
    QuadExt scalar() const;  // arity-0 gadgets (global factors)
};

// Sums over all internal-edge and attachment-edge assignments the product of
// vertex evaluations, for every assignment of the dangling variables.  Exact.
GadgetSignature contract(const Gadget& g, const SymSig3& f);

// --- the named gadget library (wirings reconstructed from the figures) ------

Gadget make_identity_gadget();  // single LHS vertex, 3 dangling edges
Gadget make_g1();               // binary straddled: square == circle (double edge)
Gadget make_g2();               // K33 minus the middle-middle edge
Gadget make_g3();               // 2+2 path with one double edge
Gadget make_g4();               // ternary: 3 outer squares + hub square + 3 circles
Gadget make_gaux();             // ternary: 2 circles joined to 3 squares
Gadget make_g1_chain(int k);    // k copies of G1 in series
Gadget make_nonlin(const QuadExt& y);         // unary output on RHS
Gadget make_absorb_lhs(int which, const QuadExt& x);  // which in 1..4, factor gadgets
Gadget make_absorb_rhs(int which, const QuadExt& y);  // which in 1..3
// Ternary f with unary u on the RHS -> binary [f0 u0 + f1 u1, f1 u0 + f2 u1, f2 u0 + f3 u1].
Gadget make_connect_rhs(const Unary& u);
// Two copies of an LHS unary into =3 -> RHS unary [u0^2, u1^2].
Gadget make_pair_to_eq(const Unary& u);

// --- closed forms (must equal generic contraction; tested) -------------------

Mat2 g1_matrix(const SymSig3& f);  // [[f0, f2], [f1, f3]]
Mat2 g2_matrix(const SymSig3& f);
Mat2 g3_matrix(const SymSig3& f);
SymSig3 g4_apply(const SymSig3& f);
SymSig3 gaux_apply(const SymSig3& f);
Unary nonlinearity_apply(const SymSig3& f, const QuadExt& y);
// Global absorption factors; f must be normalized [1,a,b,c].
std::array<QuadExt, 4> absorb_factor_lhs(const SymSig3& f, const QuadExt& x);
std::array<QuadExt, 3> absorb_factor_rhs(const SymSig3& f, const QuadExt& y);

SymSig2 connect_rhs_unary(const SymSig3& f, const Unary& u);
Unary pair_to_eq(const Unary& u);

// Coefficient rows (x^0..x^3 resp. y^0..y^3) of the absorption factors, for
// evaluation at points outside the quadratic-extension representation (the
// appendix-style complex substitution).  f must be normalized [1,a,b,c].
std::array<std::array<Rat, 4>, 4> absorb_lhs_coeff_rows(const SymSig3& f);
std::array<std::array<Rat, 4>, 3> absorb_rhs_coeff_rows(const SymSig3& f);

// Asserts every closed form equals generic contraction on random rational f
// (plus random unary parameters); any mismatch is reported by gadget and f.
struct ClosedFormReport {
    int trials = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
ClosedFormReport verify_closed_forms(int trials, unsigned long seed);

// CLI-addressable gadget names: G1..G4, Gaux, nonlin, absorbL1..absorbL4,
// absorbR1..absorbR3.
std::vector<std::string> gadget_names();
// Evaluates the named gadget on f; unary-parameter gadgets read x or y.
// Returns a printable description of the resulting signature.
std::string run_named_gadget(const std::string& name, const SymSig3& f, const QuadExt& param);

}  // namespace holant
