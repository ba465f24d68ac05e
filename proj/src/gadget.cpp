#include "holant/gadget.hpp"

#include "holant/errors.hpp"

#include <random>

namespace holant {

void Gadget::validate() const {
    std::vector<int> ldeg(lhs_count, 0), rdeg(rhs_count, 0);
    auto bump = [&](Side s, int v) {
        auto& deg = (s == Side::LHS) ? ldeg : rdeg;
        int n = (s == Side::LHS) ? lhs_count : rhs_count;
        if (v < 0 || v >= n) throw input_error("gadget: vertex index out of range");
        ++deg[v];
    };
    for (auto [l, r] : internal_edges) {
        bump(Side::LHS, l);
        bump(Side::RHS, r);
    }
    for (const auto& u : unary_attachments) bump(u.vertex_side, u.vertex);
    int m = 0, n = 0;
    for (const auto& d : dangling) {
        bump(d.vertex_side, d.vertex);
        (d.vertex_side == Side::LHS ? m : n)++;
    }
    for (int d : ldeg)
        if (d != 3) throw input_error("gadget: LHS vertex degree != 3");
    for (int d : rdeg)
        if (d != 3) throw input_error("gadget: RHS vertex degree != 3");
    // In the pure {f, =3} vocabulary the side profile is forced: m - n =
    // 3(|LHS| - |RHS|).  Attached unaries (interpolated signatures) lift the
    // restriction.
    if (unary_attachments.empty() && ((m - n) % 3 + 3) % 3 != 0)
        throw input_error("gadget: side profile m - n must be 0 mod 3");
}

Mat2 GadgetSignature::as_mat2() const {
    if (m != 1 || n != 1 || dense.arity != 2)
        throw internal_error("GadgetSignature: not a straddled binary signature");
    // variable order: the LHS-exposed dangling edge first (row index)
    return Mat2(dense.at(0), dense.at(1), dense.at(2), dense.at(3));
}

SymSig3 GadgetSignature::as_sym3() const {
    if (dense.arity != 3) throw internal_error("GadgetSignature: not ternary");
    auto w = dense.symmetric_weights();
    if (!w) throw internal_error("GadgetSignature: ternary output not symmetric");
    return {(*w)[0].as_rat(), (*w)[1].as_rat(), (*w)[2].as_rat(), (*w)[3].as_rat()};
}

QuadExt GadgetSignature::scalar() const {
    if (dense.arity != 0) throw internal_error("GadgetSignature: not a scalar");
    return dense.at(0);
}

GadgetSignature contract(const Gadget& g, const SymSig3& f) {
    g.validate();

    // Slot bookkeeping: each inner variable is an internal edge or an
    // attachment edge; each vertex accumulates the weights of its incident
    // variables.
    const int ni = static_cast<int>(g.internal_edges.size());
    const int na = static_cast<int>(g.unary_attachments.size());
    const int nd = static_cast<int>(g.dangling.size());
    const int arity = nd;

    GadgetSignature out;
    out.dense.arity = arity;
    out.dense.values.assign(std::size_t(1) << arity, QuadExt(0));
    for (const auto& d : g.dangling) (d.vertex_side == Side::LHS ? out.m : out.n)++;
    out.dense.lhs_exposed = out.m;
    out.dense.rhs_exposed = out.n;

    std::vector<int> lw(g.lhs_count), rw(g.rhs_count);
    for (std::size_t dmask = 0; dmask < out.dense.values.size(); ++dmask) {
        QuadExt total(0);
        for (std::size_t imask = 0; imask < (std::size_t(1) << (ni + na)); ++imask) {
            std::fill(lw.begin(), lw.end(), 0);
            std::fill(rw.begin(), rw.end(), 0);
            for (int k = 0; k < nd; ++k) {
                int bit = (dmask >> (arity - 1 - k)) & 1;
                const auto& d = g.dangling[k];
                (d.vertex_side == Side::LHS ? lw[d.vertex] : rw[d.vertex]) += bit;
            }
            for (int k = 0; k < ni; ++k) {
                int bit = (imask >> k) & 1;
                lw[g.internal_edges[k].first] += bit;
                rw[g.internal_edges[k].second] += bit;
            }
            QuadExt term(1);
            bool dead = false;
            for (int k = 0; k < na && !dead; ++k) {
                int bit = (imask >> (ni + k)) & 1;
                const auto& u = g.unary_attachments[k];
                (u.vertex_side == Side::LHS ? lw[u.vertex] : rw[u.vertex]) += bit;
                if (u.weight[bit].is_zero())
                    dead = true;
                else
                    term *= u.weight[bit];
            }
            if (dead) continue;
            for (int v = 0; v < g.rhs_count && !dead; ++v)
                if (rw[v] != 0 && rw[v] != 3) dead = true;  // =3
            if (dead) continue;
            for (int v = 0; v < g.lhs_count && !dead; ++v) {
                const Rat& fv = f[lw[v]];
                if (fv == 0)
                    dead = true;
                else
                    term *= QuadExt(fv);
            }
            if (dead) continue;
            total += term;
        }
        out.dense.values[dmask] = total;
    }
    return out;
}

// --- named wirings -----------------------------------------------------------

Gadget make_identity_gadget() {
    Gadget g;
    g.lhs_count = 1;
    g.dangling = {{Side::LHS, 0}, {Side::LHS, 0}, {Side::LHS, 0}};
    return g;
}

Gadget make_g1() {
    Gadget g;
    g.lhs_count = 1;
    g.rhs_count = 1;
    g.internal_edges = {{0, 0}, {0, 0}};
    g.dangling = {{Side::LHS, 0}, {Side::RHS, 0}};
    return g;
}

Gadget make_g2() {
    Gadget g;
    g.lhs_count = 3;
    g.rhs_count = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(i == 1 && j == 1)) g.internal_edges.emplace_back(i, j);
    g.dangling = {{Side::LHS, 1}, {Side::RHS, 1}};
    return g;
}

Gadget make_g3() {
    Gadget g;
    g.lhs_count = 2;  // 0: top-left square, 1: bottom-right square
    g.rhs_count = 2;  // 0: top-right circle, 1: bottom-left circle
    g.internal_edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 1}};
    g.dangling = {{Side::LHS, 0}, {Side::RHS, 0}};
    return g;
}

Gadget make_g4() {
    Gadget g;
    g.lhs_count = 4;  // 0..2: outer squares, 3: hub square
    g.rhs_count = 3;
    g.internal_edges = {{0, 0}, {0, 2}, {1, 0}, {1, 1}, {2, 1},
                        {2, 2}, {3, 0}, {3, 1}, {3, 2}};
    g.dangling = {{Side::LHS, 0}, {Side::LHS, 1}, {Side::LHS, 2}};
    return g;
}

Gadget make_gaux() {
    Gadget g;
    g.lhs_count = 3;
    g.rhs_count = 2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) g.internal_edges.emplace_back(i, j);
    g.dangling = {{Side::LHS, 0}, {Side::LHS, 1}, {Side::LHS, 2}};
    return g;
}

Gadget make_g1_chain(int k) {
    Gadget g;
    g.lhs_count = k;
    g.rhs_count = k;
    for (int i = 0; i < k; ++i) {
        g.internal_edges.emplace_back(i, i);
        g.internal_edges.emplace_back(i, i);
        if (i + 1 < k) g.internal_edges.emplace_back(i + 1, i);
    }
    g.dangling = {{Side::LHS, 0}, {Side::RHS, k - 1}};
    return g;
}

Gadget make_nonlin(const QuadExt& y) {
    Gadget g;
    g.lhs_count = 1;
    g.rhs_count = 2;
    g.internal_edges = {{0, 0}, {0, 0}, {0, 1}};
    Unary y1{y, QuadExt(1)};
    g.unary_attachments = {{Side::RHS, 0, y1}, {Side::RHS, 1, y1}};
    g.dangling = {{Side::RHS, 1}};
    return g;
}

Gadget make_absorb_lhs(int which, const QuadExt& x) {
    Unary u{QuadExt(1), x};
    Gadget g;
    switch (which) {
        case 1:
            g.lhs_count = 1;
            g.unary_attachments = {{Side::LHS, 0, u}, {Side::LHS, 0, u}, {Side::LHS, 0, u}};
            return g;
        case 2:
            g.lhs_count = 2;
            g.rhs_count = 1;
            g.internal_edges = {{0, 0}, {1, 0}, {1, 0}};
            g.unary_attachments = {{Side::LHS, 0, u}, {Side::LHS, 0, u}, {Side::LHS, 1, u}};
            return g;
        case 3:
            g = make_gaux();
            g.dangling.clear();
            g.unary_attachments = {{Side::LHS, 0, u}, {Side::LHS, 1, u}, {Side::LHS, 2, u}};
            return g;
        case 4:
            g.lhs_count = 3;
            g.rhs_count = 2;
            g.internal_edges = {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {2, 1}, {2, 1}};
            g.unary_attachments = {{Side::LHS, 1, u}, {Side::LHS, 1, u}, {Side::LHS, 2, u}};
            return g;
    }
    throw input_error("absorbL index must be 1..4");
}

Gadget make_absorb_rhs(int which, const QuadExt& y) {
    Unary u{y, QuadExt(1)};
    Gadget g;
    switch (which) {
        case 1:
            g.rhs_count = 1;
            g.unary_attachments = {{Side::RHS, 0, u}, {Side::RHS, 0, u}, {Side::RHS, 0, u}};
            return g;
        case 2:
            g.lhs_count = 1;
            g.rhs_count = 2;
            g.internal_edges = {{0, 0}, {0, 1}, {0, 1}};
            g.unary_attachments = {{Side::RHS, 0, u}, {Side::RHS, 0, u}, {Side::RHS, 1, u}};
            return g;
        case 3:
            g.lhs_count = 2;
            g.rhs_count = 3;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j) g.internal_edges.emplace_back(i, j);
            g.unary_attachments = {{Side::RHS, 0, u}, {Side::RHS, 1, u}, {Side::RHS, 2, u}};
            return g;
    }
    throw input_error("absorbR index must be 1..3");
}

Gadget make_connect_rhs(const Unary& u) {
    Gadget g;
    g.lhs_count = 1;
    g.unary_attachments = {{Side::LHS, 0, u}};
    g.dangling = {{Side::LHS, 0}, {Side::LHS, 0}};
    return g;
}

Gadget make_pair_to_eq(const Unary& u) {
    Gadget g;
    g.rhs_count = 1;
    g.unary_attachments = {{Side::RHS, 0, u}, {Side::RHS, 0, u}};
    g.dangling = {{Side::RHS, 0}};
    return g;
}

// --- closed forms ------------------------------------------------------------

Mat2 g1_matrix(const SymSig3& f) { return Mat2::from_rats(f.f0, f.f2, f.f1, f.f3); }

Mat2 g2_matrix(const SymSig3& f) {
    auto cube = [](const Rat& r) { return r * r * r; };
    Rat w = cube(f.f0) + 2 * cube(f.f1) + cube(f.f2);
    Rat ap = f.f0 * f.f0 * f.f1 + 2 * f.f1 * f.f1 * f.f2 + f.f2 * f.f2 * f.f3;
    Rat bp = f.f1 * f.f1 * f.f0 + 2 * f.f2 * f.f2 * f.f1 + f.f3 * f.f3 * f.f2;
    Rat cp = cube(f.f1) + 2 * cube(f.f2) + cube(f.f3);
    return Mat2::from_rats(w, bp, ap, cp);
}

Mat2 g3_matrix(const SymSig3& f) {
    return Mat2::from_rats(f.f0 * f.f0 + f.f1 * f.f2, f.f1 * f.f1 + f.f2 * f.f3,
                           f.f1 * f.f0 + f.f2 * f.f2, f.f2 * f.f1 + f.f3 * f.f3);
}

SymSig3 g4_apply(const SymSig3& f) {
    const Rat &a = f.f0, &b = f.f1, &c = f.f2, &d = f.f3;
    Rat g0 = a * a * a * a + 3 * a * b * b * b + 3 * b * b * c * c + c * c * c * d;
    Rat g1 = a * a * a * b + 2 * a * b * b * c + b * b * b * b + 2 * b * c * c * c +
             b * b * c * d + c * c * d * d;
    Rat g2 = a * a * b * b + a * b * c * c + 2 * b * b * b * c + 2 * b * c * c * d +
             c * c * c * c + c * d * d * d;
    Rat g3 = a * b * b * b + 3 * b * b * c * c + 3 * c * c * c * d + d * d * d * d;
    return {g0, g1, g2, g3};
}

SymSig3 gaux_apply(const SymSig3& f) {
    auto cube = [](const Rat& r) { return r * r * r; };
    return {cube(f.f0) + 2 * cube(f.f1) + cube(f.f2),
            f.f0 * f.f0 * f.f1 + 2 * f.f1 * f.f1 * f.f2 + f.f2 * f.f2 * f.f3,
            f.f0 * f.f1 * f.f1 + 2 * f.f1 * f.f2 * f.f2 + f.f2 * f.f3 * f.f3,
            cube(f.f1) + 2 * cube(f.f2) + cube(f.f3)};
}

Unary nonlinearity_apply(const SymSig3& f, const QuadExt& y) {
    return {(y * QuadExt(f.f0) + QuadExt(f.f2)) * y, y * QuadExt(f.f1) + QuadExt(f.f3)};
}

static void require_normalized(const SymSig3& f, const char* who) {
    if (f.f0 != 1) throw input_error(std::string(who) + ": signature must be normalized [1,a,b,c]");
}

std::array<std::array<Rat, 4>, 4> absorb_lhs_coeff_rows(const SymSig3& f) {
    require_normalized(f, "absorb_factor_lhs");
    const Rat &a = f.f1, &b = f.f2, &c = f.f3;
    return {{
        {Rat(1), 3 * a, 3 * b, c},
        {a * b + 1, 3 * a + a * c + 2 * b * b, 2 * a * a + b + 3 * b * c, a * b + c * c},
        {1 + 2 * a * a * a + b * b * b, 3 * (a + 2 * a * a * b + b * b * c),
         3 * (a * a + 2 * a * b * b + b * c * c), a * a * a + 2 * b * b * b + c * c * c},
        {1 + 2 * a * b + a * b * c,
         3 * a + 3 * a * a * b + a * c + 2 * b * b + 2 * b * b * c + a * c * c,
         2 * a * a + b + 2 * a * a * c + 3 * a * b * b + b * c + 3 * b * c * c,
         a * b + 2 * a * b * c + c * c * c},
    }};
}

std::array<std::array<Rat, 4>, 3> absorb_rhs_coeff_rows(const SymSig3& f) {
    require_normalized(f, "absorb_factor_rhs");
    const Rat &a = f.f1, &b = f.f2, &c = f.f3;
    return {{
        {Rat(1), Rat(0), Rat(0), Rat(1)},
        {c, a, b, Rat(1)},
        {c * c, 3 * b * b, 3 * a * a, Rat(1)},
    }};
}

namespace {

QuadExt eval_cubic(const std::array<Rat, 4>& coeff, const QuadExt& x) {
    QuadExt acc(coeff[3]);
    for (int k = 2; k >= 0; --k) acc = acc * x + QuadExt(coeff[k]);
    return acc;
}

}  // namespace

std::array<QuadExt, 4> absorb_factor_lhs(const SymSig3& f, const QuadExt& x) {
    auto rows = absorb_lhs_coeff_rows(f);
    return {eval_cubic(rows[0], x), eval_cubic(rows[1], x), eval_cubic(rows[2], x),
            eval_cubic(rows[3], x)};
}

std::array<QuadExt, 3> absorb_factor_rhs(const SymSig3& f, const QuadExt& y) {
    auto rows = absorb_rhs_coeff_rows(f);
    return {eval_cubic(rows[0], y), eval_cubic(rows[1], y), eval_cubic(rows[2], y)};
}

SymSig2 connect_rhs_unary(const SymSig3& f, const Unary& u) {
    return {QuadExt(f.f0) * u[0] + QuadExt(f.f1) * u[1],
            QuadExt(f.f1) * u[0] + QuadExt(f.f2) * u[1],
            QuadExt(f.f2) * u[0] + QuadExt(f.f3) * u[1]};
}

Unary pair_to_eq(const Unary& u) { return {u[0] * u[0], u[1] * u[1]}; }

// --- verification ------------------------------------------------------------

namespace {

Rat random_rat(std::mt19937_64& rng, int height) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    return Rat(num(rng), den(rng));
}

}  // namespace

ClosedFormReport verify_closedform_trial(const SymSig3& f, const QuadExt& x, const QuadExt& y);

ClosedFormReport verify_closed_forms(int trials, unsigned long seed) {
    ClosedFormReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long>(t));
        SymSig3 f{1, random_rat(rng, 50), random_rat(rng, 50), random_rat(rng, 50)};
        QuadExt x(random_rat(rng, 20)), y(random_rat(rng, 20));
        ClosedFormReport one = verify_closedform_trial(f, x, y);
        for (auto& fl : one.failures)
            rep.failures.push_back("trial " + std::to_string(t) + " f=" + f.str() + ": " + fl);
    }
    return rep;
}

ClosedFormReport verify_closedform_trial(const SymSig3& f, const QuadExt& x, const QuadExt& y) {
    ClosedFormReport rep;
    auto fail = [&](const std::string& who) { rep.failures.push_back(who + " closed form mismatch"); };

    if (contract(make_g1(), f).as_mat2() != g1_matrix(f)) fail("G1");
    if (contract(make_g2(), f).as_mat2() != g2_matrix(f)) fail("G2");
    if (contract(make_g3(), f).as_mat2() != g3_matrix(f)) fail("G3");
    if (!(contract(make_g4(), f).as_sym3() == g4_apply(f))) fail("G4");
    if (!(contract(make_gaux(), f).as_sym3() == gaux_apply(f))) fail("Gaux");

    {
        GadgetSignature s = contract(make_nonlin(y), f);
        Unary nl = nonlinearity_apply(f, y);
        if (s.dense.at(0) != nl[0] || s.dense.at(1) != nl[1]) fail("nonlin");
    }
    auto fl = absorb_factor_lhs(f, x);
    for (int i = 0; i < 4; ++i)
        if (contract(make_absorb_lhs(i + 1, x), f).scalar() != fl[i])
            fail("absorbL" + std::to_string(i + 1));
    auto fr = absorb_factor_rhs(f, y);
    for (int i = 0; i < 3; ++i)
        if (contract(make_absorb_rhs(i + 1, y), f).scalar() != fr[i])
            fail("absorbR" + std::to_string(i + 1));
    return rep;
}

std::vector<std::string> gadget_names() {
    return {"G1",       "G2",       "G3",       "G4",       "Gaux",     "nonlin",
            "absorbL1", "absorbL2", "absorbL3", "absorbL4", "absorbR1", "absorbR2",
            "absorbR3"};
}

std::string run_named_gadget(const std::string& name, const SymSig3& f, const QuadExt& param) {
    if (name == "G1") return g1_matrix(f).str();
    if (name == "G2") return g2_matrix(f).str();
    if (name == "G3") return g3_matrix(f).str();
    if (name == "G4") return g4_apply(f).str();
    if (name == "Gaux") return gaux_apply(f).str();
    if (name == "nonlin") {
        Unary u = nonlinearity_apply(f, param);
        return "[" + u[0].str() + ", " + u[1].str() + "]";
    }
    if (name.rfind("absorbL", 0) == 0 && name.size() == 8) {
        int which = name[7] - '0';
        return absorb_factor_lhs(f, param)[which - 1].str();
    }
    if (name.rfind("absorbR", 0) == 0 && name.size() == 8) {
        int which = name[7] - '0';
        return absorb_factor_rhs(f, param)[which - 1].str();
    }
    throw input_error("unknown gadget name: " + name);
}

}  // namespace holant
