#include "holant/signature.hpp"

#include "holant/errors.hpp"

#include <algorithm>
#include <bit>

namespace holant {

const Rat& SymSig3::operator[](int w) const {
    switch (w) {
        case 0: return f0;
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
    }
    throw internal_error("SymSig3: weight out of range");
}

std::string SymSig3::str() const {
    return "[" + rat_str(f0) + ", " + rat_str(f1) + ", " + rat_str(f2) + ", " + rat_str(f3) + "]";
}

SymSig3 flip(const SymSig3& s) { return {s.f3, s.f2, s.f1, s.f0}; }

DenseSig DenseSig::from_weights(const std::vector<QuadExt>& by_weight, int lhs_exposed,
                                int rhs_exposed) {
    DenseSig d;
    d.arity = static_cast<int>(by_weight.size()) - 1;
    d.lhs_exposed = lhs_exposed;
    d.rhs_exposed = rhs_exposed;
    d.values.resize(std::size_t(1) << d.arity);
    for (std::size_t i = 0; i < d.values.size(); ++i)
        d.values[i] = by_weight[std::popcount(i)];
    return d;
}

DenseSig DenseSig::from_sym3_lhs(const SymSig3& s) {
    return from_weights({QuadExt(s.f0), QuadExt(s.f1), QuadExt(s.f2), QuadExt(s.f3)}, 3, 0);
}

DenseSig DenseSig::eq3_rhs() {
    return from_weights({QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)}, 0, 3);
}

DenseSig DenseSig::unary(const Unary& u, bool on_lhs) {
    DenseSig d;
    d.arity = 1;
    d.values = {u[0], u[1]};
    d.lhs_exposed = on_lhs ? 1 : 0;
    d.rhs_exposed = on_lhs ? 0 : 1;
    return d;
}

std::optional<std::vector<QuadExt>> DenseSig::symmetric_weights() const {
    std::vector<QuadExt> w(arity + 1);
    std::vector<bool> seen(arity + 1, false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        int p = std::popcount(i);
        if (!seen[p]) {
            w[p] = values[i];
            seen[p] = true;
        } else if (w[p] != values[i]) {
            return std::nullopt;
        }
    }
    return w;
}

bool operator==(const DenseSig& a, const DenseSig& b) {
    return a.arity == b.arity && a.values == b.values;
}

std::size_t dense_index(int arity, const std::vector<int>& bits) {
    std::size_t idx = 0;
    for (int k = 0; k < arity; ++k)
        idx |= std::size_t(bits[k] & 1) << (arity - 1 - k);
    return idx;
}

std::optional<DegenerateInfo> is_degenerate(const SymSig3& s) {
    // 2x2 minors of [[f0,f1,f2],[f1,f2,f3]]
    if (s.f0 * s.f2 != s.f1 * s.f1) return std::nullopt;
    if (s.f1 * s.f3 != s.f2 * s.f2) return std::nullopt;
    if (s.f0 * s.f3 != s.f1 * s.f2) return std::nullopt;
    if (s.is_zero()) return DegenerateInfo{Rat(0), Rat(0), Rat(1)};
    if (s.f0 != 0) return DegenerateInfo{Rat(1), s.f1 / s.f0, s.f0};
    // f0 = 0 forces f1 = f2 = 0 by the minors; tensor cube of [0,1].
    return DegenerateInfo{Rat(0), Rat(1), s.f3};
}

bool is_gen_eq(const SymSig3& s) { return s.f1 == 0 && s.f2 == 0; }

const SymSig3& affine_form_signature(AffineForm f) {
    static const SymSig3 forms[6] = {
        {1, 0, 0, 1}, {1, 0, 0, -1}, {1, 0, 1, 0}, {1, 0, -1, 0}, {1, 1, -1, -1}, {1, -1, -1, 1},
    };
    return forms[static_cast<int>(f)];
}

std::string affine_form_name(AffineForm f) {
    static const char* names[6] = {"[1,0,0,1]",  "[1,0,0,-1]",  "[1,0,1,0]",
                                   "[1,0,-1,0]", "[1,1,-1,-1]", "[1,-1,-1,1]"};
    return names[static_cast<int>(f)];
}

std::optional<AffineInfo> is_affine(const SymSig3& s) {
    if (s.is_zero()) return std::nullopt;  // reported separately (degenerate)
    for (int rev = 0; rev < 2; ++rev) {
        SymSig3 t = rev ? flip(s) : s;
        for (int fi = 0; fi < 6; ++fi) {
            const SymSig3& form = affine_form_signature(static_cast<AffineForm>(fi));
            // t = k * form with k != 0; form[0] = 1, so k = t.f0.
            Rat k = t.f0;
            if (k == 0) continue;
            if (t == form.scaled(k))
                return AffineInfo{static_cast<AffineForm>(fi), k, rev == 1};
        }
    }
    return std::nullopt;
}

std::string SigClass::str() const {
    switch (kind) {
        case SigClassKind::Degenerate: {
            return "degenerate (" + rat_str(degenerate->scale) + " * [" +
                   rat_str(degenerate->u0) + "," + rat_str(degenerate->u1) + "]^(x)3)";
        }
        case SigClassKind::GenEq: return "Gen-Eq";
        case SigClassKind::Affine:
            return "affine (" + rat_str(affine->scalar) + " * " +
                   affine_form_name(affine->form) + (affine->reversed ? ", reversed)" : ")");
        case SigClassKind::NotTractableForm: return "not a tractable form";
    }
    return "?";
}

SigClass classify_form(const SymSig3& s) {
    SigClass c;
    if (auto d = is_degenerate(s)) {
        c.kind = SigClassKind::Degenerate;
        c.degenerate = d;
        return c;
    }
    if (is_gen_eq(s)) {
        c.kind = SigClassKind::GenEq;
        return c;
    }
    if (auto a = is_affine(s)) {
        c.kind = SigClassKind::Affine;
        c.affine = a;
        return c;
    }
    return c;
}

std::string BinaryVerdict::str() const {
    switch (kind) {
        case BinaryCase::Hard: return "#P-hard";
        case BinaryCase::X1: return "tractable (X=1)";
        case BinaryCase::XZ0: return "tractable (X=Z=0)";
        case BinaryCase::Xm1Z0: return "tractable (X=-1, Z=0)";
        case BinaryCase::Xm1Zm1: return "tractable (X=-1, Z=-1)";
        case BinaryCase::Unnormalizable: return "unnormalizable (middle entry 0)";
    }
    return "?";
}

BinaryVerdict binary_tractable(const SymSig2& g) {
    if (g[1].is_zero()) return {BinaryCase::Unnormalizable};
    QuadExt a = g[0] / g[1], b = g[2] / g[1];
    QuadExt x = a * b;
    QuadExt half(Rat(1, 2));
    QuadExt z = (a.pow(3) + b.pow(3)) * half;
    z = z * z;
    QuadExt one(1), mone(-1), zero(0);
    if (x == one) return {BinaryCase::X1};
    if (x == zero && z == zero) return {BinaryCase::XZ0};
    if (x == mone && z == zero) return {BinaryCase::Xm1Z0};
    if (x == mone && z == mone) return {BinaryCase::Xm1Zm1};
    return {BinaryCase::Hard};
}

namespace {

// Applies the 2x2 matrix to one tensor leg of a dense signature.
// Row convention: new[... j ...] = sum_i old[... i ...] m(i, j).
DenseSig apply_leg_row(const DenseSig& s, const Mat2& m, int leg) {
    DenseSig out = s;
    std::size_t bit = std::size_t(1) << (s.arity - 1 - leg);
    for (std::size_t idx = 0; idx < s.values.size(); ++idx) {
        if (idx & bit) continue;
        const QuadExt& v0 = s.values[idx];
        const QuadExt& v1 = s.values[idx | bit];
        out.values[idx] = v0 * m(0, 0) + v1 * m(1, 0);
        out.values[idx | bit] = v0 * m(0, 1) + v1 * m(1, 1);
    }
    return out;
}

// Column convention: new[... i ...] = sum_j m(i, j) old[... j ...].
DenseSig apply_leg_col(const DenseSig& s, const Mat2& m, int leg) {
    DenseSig out = s;
    std::size_t bit = std::size_t(1) << (s.arity - 1 - leg);
    for (std::size_t idx = 0; idx < s.values.size(); ++idx) {
        if (idx & bit) continue;
        const QuadExt& v0 = s.values[idx];
        const QuadExt& v1 = s.values[idx | bit];
        out.values[idx] = m(0, 0) * v0 + m(0, 1) * v1;
        out.values[idx | bit] = m(1, 0) * v0 + m(1, 1) * v1;
    }
    return out;
}

}  // namespace

DenseSig holo_transform_row(const DenseSig& s, const Mat2& m) {
    DenseSig out = s;
    for (int leg = 0; leg < s.arity; ++leg) out = apply_leg_row(out, m, leg);
    return out;
}

std::pair<DenseSig, Rat> holo_transform_col(const DenseSig& s, const Mat2& m) {
    Mat2 inv = m.inverse();
    DenseSig out = s;
    for (int leg = 0; leg < s.arity; ++leg) out = apply_leg_col(out, inv, leg);

    // Lowest integer form: divide by the rational scalar that makes entries
    // coprime integers with the first nonzero entry positive.
    for (const QuadExt& v : out.values)
        if (!v.is_rational()) return {out, Rat(1)};
    Int g = 0, l = 1;
    int lead = 0;
    for (const QuadExt& v : out.values) {
        Rat r = v.as_rat();
        if (r == 0) continue;
        if (lead == 0) lead = rat_sign(r);
        g = boost::multiprecision::gcd(g, rat_num(r) < 0 ? Int(-rat_num(r)) : rat_num(r));
        l = boost::multiprecision::lcm(l, rat_den(r));
    }
    if (lead == 0) return {out, Rat(1)};  // zero signature
    Rat scalar = Rat(g, l) * lead;
    for (QuadExt& v : out.values) v = QuadExt(v.as_rat() / scalar);
    return {out, scalar};
}

SymSig3 holo_row_sym3(const SymSig3& s, const Mat2& m) {
    DenseSig d = holo_transform_row(DenseSig::from_sym3_lhs(s), m);
    auto w = d.symmetric_weights();
    if (!w) throw internal_error("holo_row_sym3: transform broke symmetry");
    return {(*w)[0].as_rat(), (*w)[1].as_rat(), (*w)[2].as_rat(), (*w)[3].as_rat()};
}

}  // namespace holant
