#pragma once

#include "holant/signature.hpp"

#include <array>
#include <random>
#include <utility>
#include <vector>

namespace holant {

enum class GridSide { LHS, RHS, Straddled };

// A signature grid: LHS vertices (default the working ternary signature),
// RHS vertices (default =3), optional straddled binary vertices (port 0
// faces the RHS neighbour, port 1 the LHS neighbour), and edges matching
// ports one-to-one.
struct SignatureGrid {
    struct End {
        GridSide side;
        int vertex;
        int port;
    };
    struct Edge {
        End a, b;
    };

    std::vector<DenseSig> lhs, rhs, straddled;
    std::vector<Edge> edges;

    // The canonical Holant(f | =3) instance: every LHS vertex carries f,
    // every RHS vertex =3; ports are assigned in incidence order.
    static SignatureGrid canonical(const SymSig3& f, int nl, int nr,
                                   const std::vector<std::pair<int, int>>& incidences);

    const DenseSig& sig(GridSide side, int v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    void validate() const;  // every port used exactly once

    // All LHS vertices carry the same symmetric rational ternary signature.
    SymSig3 common_lhs_sym3() const;
    bool rhs_all_eq3() const;
};

// Brute-force cap: default 28 edges, overridable by HOLANT_BRUTE_CAP.
int brute_force_cap();

// Exact Holant value by full enumeration over edge assignments, pruning on
// zero factors.  eval_brute partitions the assignment space across OpenMP
// workers and combines by exact summation; eval_brute_serial is the serial
// reference kept for testing.
QuadExt eval_brute(const SignatureGrid& g, int cap = -1);
QuadExt eval_brute_serial(const SignatureGrid& g, int cap = -1);

// Exact evaluation by greedy tensor contraction over dense intermediates.
// Throws cap_exceeded if an intermediate tensor would exceed arity_cap.
QuadExt eval_dp(const SignatureGrid& g, int arity_cap = 20);

// --- set systems -------------------------------------------------------------

// A 3-regular 3-uniform set system: every set has 3 element slots and every
// element fills exactly 3 slots (multisets allowed).
struct SetSystem {
    int element_count = 0;
    std::vector<std::array<int, 3>> sets;
    void validate() const;
};

// Elements become LHS vertices carrying [1,0,-1,2], sets become =3 vertices,
// incidences become edges.
SignatureGrid from_set_system(const SetSystem& s);

// Sum over leafless partial covers S' of (-1)^l 2^h, where l counts elements
// covered exactly twice and h those covered three times.  An element covered
// exactly once makes the subfamily non-leafless; the empty family counts.
Rat cover_value(const SetSystem& s, int set_cap = 24);

// --- holographic transformation of whole grids --------------------------------

// An exact product kept in factored form.
struct ScalarLedger {
    Rat rational_factor = Rat(1);
    std::vector<std::pair<Rat, long>> power_terms;

    void mul(const Rat& r);
    void mul_pow(const Rat& base, long exp);
    Rat collapse() const;
    std::string str() const;
};

// Transforms every LHS signature by M^{tensor arity} and every RHS signature
// by (M^{-1})^{tensor arity}, extracting per-vertex normalization scalars
// into the ledger:  Holant(original) = ledger * Holant(transformed), exactly.
std::pair<SignatureGrid, ScalarLedger> apply_holo_to_grid(const SignatureGrid& g, const Mat2& m);

// Closed-form evaluation for a canonical grid whose LHS signature is
// degenerate or Gen-Eq.  Degenerate scale*[u0,u1]^(x)3: value =
// scale^|lhs| (u0^3 + u1^3)^|rhs|.  Gen-Eq [f0,0,0,f3]: product over
// connected components of (f0^{|lhs_c|} + f3^{|lhs_c|}).
Rat tractable_eval(const SignatureGrid& g);

// Replaces each listed edge with a straddled binary vertex carrying the given
// matrix (row index = value on the edge toward the RHS endpoint).
SignatureGrid insert_straddled(const SignatureGrid& g, const std::vector<int>& slot_edges,
                               const std::vector<Mat2>& mats);

// Random 3-regular bipartite multigraph grid on n+n vertices (permutation of
// 3n ports against 3n ports).
SignatureGrid random_canonical_grid(const SymSig3& f, int n, std::mt19937_64& rng);

}  // namespace holant
