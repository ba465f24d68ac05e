#pragma once

#include "holant/mat2.hpp"
#include "holant/quadext.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace holant {

// Symmetric ternary signature [f0, f1, f2, f3] over Q: the value on an input
// of Hamming weight i is fi.
struct SymSig3 {
    Rat f0, f1, f2, f3;

    SymSig3() : f0(0), f1(0), f2(0), f3(0) {}
    SymSig3(Rat a, Rat b, Rat c, Rat d)
        : f0(std::move(a)), f1(std::move(b)), f2(std::move(c)), f3(std::move(d)) {}

    const Rat& operator[](int w) const;
    bool is_zero() const { return f0 == 0 && f1 == 0 && f2 == 0 && f3 == 0; }
    SymSig3 scaled(const Rat& k) const { return {f0 * k, f1 * k, f2 * k, f3 * k}; }
    friend bool operator==(const SymSig3& a, const SymSig3& b) = default;
    std::string str() const;
};

static inline const SymSig3 kEq3{1, 0, 0, 1};

using Unary = std::array<QuadExt, 2>;
using SymSig2 = std::array<QuadExt, 3>;

// [f0,f1,f2,f3] -> [f3,f2,f1,f0]; an involution.
SymSig3 flip(const SymSig3& s);

// Dense signature: 2^arity values indexed by bit pattern, big-endian
// variable order (variable 0 is the most significant bit).  The side profile
// records how many of the variables are LHS-exposed vs RHS-exposed.
struct DenseSig {
    int arity = 0;
    std::vector<QuadExt> values;
    int lhs_exposed = 0, rhs_exposed = 0;

    static DenseSig from_weights(const std::vector<QuadExt>& by_weight, int lhs_exposed,
                                 int rhs_exposed);
    static DenseSig from_sym3_lhs(const SymSig3& s);
    static DenseSig eq3_rhs();
    static DenseSig unary(const Unary& u, bool on_lhs);

    const QuadExt& at(std::size_t idx) const { return values[idx]; }
    // Symmetric iff the value depends only on popcount; returns per-weight values.
    std::optional<std::vector<QuadExt>> symmetric_weights() const;
    friend bool operator==(const DenseSig& a, const DenseSig& b);
};

std::size_t dense_index(int arity, const std::vector<int>& bits);

// --- tractable-class predicates -------------------------------------------

// s = scale * [u0,u1]^{tensor 3}; present iff all 2x2 minors of
// [[f0,f1,f2],[f1,f2,f3]] vanish.  The zero signature reports factor [0,0].
struct DegenerateInfo {
    Rat u0, u1, scale;
};
std::optional<DegenerateInfo> is_degenerate(const SymSig3& s);

// Gen-Eq: zero unless all inputs are equal, i.e. f1 = f2 = 0.
bool is_gen_eq(const SymSig3& s);

// The affine forms, matched up to a nonzero rational scalar and entry reversal.
enum class AffineForm { Eq3Plus, Eq3Minus, AltPlus, AltMinus, SignPlus, SignMinus };
// [1,0,0,1]   [1,0,0,-1]  [1,0,1,0]  [1,0,-1,0]  [1,1,-1,-1]  [1,-1,-1,1]
const SymSig3& affine_form_signature(AffineForm f);
std::string affine_form_name(AffineForm f);

struct AffineInfo {
    AffineForm form;
    Rat scalar;
    bool reversed;
};
std::optional<AffineInfo> is_affine(const SymSig3& s);

enum class SigClassKind { Degenerate, GenEq, Affine, NotTractableForm };

struct SigClass {
    SigClassKind kind = SigClassKind::NotTractableForm;
    std::optional<DegenerateInfo> degenerate;
    std::optional<AffineInfo> affine;

    bool tractable() const { return kind != SigClassKind::NotTractableForm; }
    std::string str() const;
};

SigClass classify_form(const SymSig3& s);

// --- the binary dichotomy predicate -----------------------------------------
//
// For a symmetric binary signature normalized to [a, 1, b], with X = ab and
// Z = ((a^3+b^3)/2)^2, the problem is P-time exactly in the four cases below
// and #P-hard otherwise.  Inputs with middle entry 0 cannot be normalized and
// are reported as such; callers handle them case by case.
enum class BinaryCase { Hard, X1, XZ0, Xm1Z0, Xm1Zm1, Unnormalizable };

struct BinaryVerdict {
    BinaryCase kind = BinaryCase::Hard;
    bool tractable() const {
        return kind != BinaryCase::Hard && kind != BinaryCase::Unnormalizable;
    }
    std::string str() const;
};

BinaryVerdict binary_tractable(const SymSig2& g);

// --- holographic transformation of signatures -------------------------------

// Row convention: s' = s . M^{tensor arity} for an LHS signature.
DenseSig holo_transform_row(const DenseSig& s, const Mat2& m);

// Column convention for an RHS signature: applies (M^{-1})^{tensor arity} and
// factors out a global scalar so the result is in lowest integer form (first
// nonzero entry positive).  Surd-valued results are returned with scalar 1.
std::pair<DenseSig, Rat> holo_transform_col(const DenseSig& s, const Mat2& m);

// Convenience for ternary symmetric rows under a rational M: returns the
// transformed symmetric signature (symmetry is preserved and asserted).
SymSig3 holo_row_sym3(const SymSig3& s, const Mat2& m);

}  // namespace holant
