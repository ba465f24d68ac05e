#include "holant/interpolate.hpp"

#include "holant/errors.hpp"
#include "holant/gadget.hpp"

namespace holant {

namespace {

// Shared preflight for the two interpolation routes.
EigenData require_g1_works(const SymSig3& f) {
    Mat2 m = g1_matrix(f);
    if (f.f0 != 1) throw input_error("interpolation: f must be normalized [1,a,b,c]");
    if (m.det().is_zero()) throw input_error("interpolation: G1 is degenerate (c = ab)");
    if (f.f1 == 0) throw input_error("interpolation: a = 0, x and y undefined");
    auto [rou, cond] = ratio_is_root_of_unity(m);
    if (rou)
        throw input_error("interpolation: G1 eigenvalue ratio is a root of unity (condition " +
                          std::to_string(*cond) + ")");
    EigenData e = eigen2(m);
    if (e.complex_pair || e.delta.is_zero() || !e.has_xy)
        throw internal_error("interpolation: unexpected eigen data for a working G1");
    return e;
}

}  // namespace

std::vector<QuadExt> solve_linear(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw internal_error("solve_linear: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        QuadExt inv = a[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            QuadExt factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

InterpResult vandermonde_recover(const SignatureGrid& g, const std::vector<int>& slots,
                                 const SymSig3& f) {
    EigenData e = require_g1_works(f);
    const int n = static_cast<int>(slots.size());
    Mat2 m = g1_matrix(f);

    InterpResult res;
    for (int s = 0; s <= n; ++s) {
        SignatureGrid omega_s =
            s == 0 ? g : insert_straddled(g, slots, {mat_pow(m, static_cast<unsigned long>(s))});
        res.holants.push_back(eval_brute(omega_s));
    }
    if (n == 0) {
        res.value = res.holants[0];
        res.xy_scale = QuadExt(1);
        return res;
    }

    for (int i = 0; i <= n; ++i) res.nodes.push_back(e.lambda.pow(i) * e.mu.pow(n - i));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (res.nodes[i] == res.nodes[j])
                throw internal_error(
                    "vandermonde_recover: repeated nodes despite non-root-of-unity ratio");

    std::vector<std::vector<QuadExt>> v(n + 1, std::vector<QuadExt>(n + 1));
    for (int s = 0; s <= n; ++s)
        for (int i = 0; i <= n; ++i) v[s][i] = res.nodes[i].pow(s);
    res.coeffs = solve_linear(v, res.holants);
    res.value = res.coeffs[0];  // all slots on the mu branch: c_{0,n}
    res.xy_scale = (e.x + e.y).pow(n);
    return res;
}

DirectDResult direct_with_D(const SignatureGrid& g, const std::vector<int>& slots,
                            const SymSig3& f) {
    EigenData e = require_g1_works(f);
    Mat2 d(e.y, e.x * e.y, QuadExt(1), e.x);
    DirectDResult res;
    res.raw = slots.empty() ? eval_brute(g) : eval_brute(insert_straddled(g, slots, {d}));
    res.normalized = res.raw * (e.x + e.y).pow(static_cast<long>(slots.size())).inverse();
    return res;
}

namespace {

Unary row_times(const Unary& s, const Mat2& m) {
    return {s[0] * m(0, 0) + s[1] * m(1, 0), s[0] * m(0, 1) + s[1] * m(1, 1)};
}

bool parallel(const Unary& a, const Unary& b) { return (a[0] * b[1] - a[1] * b[0]).is_zero(); }

}  // namespace

bool UnaryInterpCert::replay() const {
    if (j1 == j2) return false;
    Unary w1 = s, w2 = s;
    for (int k = 0; k < j1; ++k) w1 = row_times(w1, m);
    for (int k = 0; k < j2; ++k) w2 = row_times(w2, m);
    if (!(w1[0] == v1[0] && w1[1] == v1[1] && w2[0] == v2[0] && w2[1] == v2[1])) return false;
    auto check = [&](const std::array<QuadExt, 2>& c, const QuadExt& t0, const QuadExt& t1) {
        return c[0] * v1[0] + c[1] * v2[0] == t0 && c[0] * v1[1] + c[1] * v2[1] == t1;
    };
    return check(combo_delta0, QuadExt(1), QuadExt(0)) &&
           check(combo_delta1, QuadExt(0), QuadExt(1));
}

std::string UnaryInterpCert::str() const {
    return "span{s.M^" + std::to_string(j1) + ", s.M^" + std::to_string(j2) +
           "} = all unaries; s.M^" + std::to_string(j1) + " = [" + v1[0].str() + ", " +
           v1[1].str() + "], s.M^" + std::to_string(j2) + " = [" + v2[0].str() + ", " +
           v2[1].str() + "]";
}

UnaryInterpCert unary_interp_coeffs(const Mat2& m, const Unary& s) {
    if (m.det().is_zero()) throw input_error("unary interpolation: singular matrix");
    if (!m.is_rational()) throw input_error("unary interpolation: rational matrix required");
    EigenData e = eigen2(m);
    if (e.disc == 0) throw input_error("unary interpolation: repeated eigenvalues");
    if (s[0].is_zero() && s[1].is_zero()) throw input_error("unary interpolation: zero signature");

    if (!e.complex_pair) {
        // Row eigenvectors: [m10, lambda - m00] (or [lambda - m11, m01]).
        for (auto [eig, name] : {std::pair<QuadExt, const char*>{e.lambda, "lambda"},
                                 std::pair<QuadExt, const char*>{e.mu, "mu"}}) {
            Unary v{m(1, 0), eig - m(0, 0)};
            if (v[0].is_zero() && v[1].is_zero()) v = {eig - m(1, 1), m(0, 1)};
            if (parallel(s, v))
                throw input_error(std::string("unary interpolation: s is the row eigenvector "
                                              "for ") +
                                  name);
        }
    }

    UnaryInterpCert cert;
    cert.m = m;
    cert.s = s;
    cert.j1 = 0;
    cert.j2 = 1;
    cert.v1 = s;
    cert.v2 = row_times(s, m);
    QuadExt det = cert.v1[0] * cert.v2[1] - cert.v1[1] * cert.v2[0];
    if (det.is_zero())
        throw internal_error("unary interpolation: iterates dependent for a non-eigenvector");
    QuadExt inv = det.inverse();
    // a*v1 + b*v2 = t  solved by Cramer on the column matrix [v1 v2].
    auto solve = [&](const QuadExt& t0, const QuadExt& t1) -> std::array<QuadExt, 2> {
        return {(t0 * cert.v2[1] - t1 * cert.v2[0]) * inv,
                (cert.v1[0] * t1 - cert.v1[1] * t0) * inv};
    };
    cert.combo_delta0 = solve(QuadExt(1), QuadExt(0));
    cert.combo_delta1 = solve(QuadExt(0), QuadExt(1));
    if (!cert.replay()) throw internal_error("unary interpolation: certificate failed replay");
    return cert;
}

}  // namespace holant
