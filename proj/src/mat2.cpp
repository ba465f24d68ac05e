#include "holant/mat2.hpp"

#include "holant/errors.hpp"

namespace holant {

Mat2 Mat2::from_rats(const Rat& m00, const Rat& m01, const Rat& m10, const Rat& m11) {
    return Mat2(QuadExt(m00), QuadExt(m01), QuadExt(m10), QuadExt(m11));
}

Mat2 Mat2::identity() { return from_rats(1, 0, 0, 1); }

Mat2 Mat2::hadamard() { return from_rats(1, 1, 1, -1); }

QuadExt Mat2::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

QuadExt Mat2::trace() const { return a[0][0] + a[1][1]; }

bool Mat2::is_rational() const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!a[i][j].is_rational()) return false;
    return true;
}

Mat2 Mat2::inverse() const {
    QuadExt d = det();
    if (d.is_zero()) throw internal_error("Mat2: inverse of a singular matrix");
    QuadExt inv = d.inverse();
    return Mat2(a[1][1] * inv, -a[0][1] * inv, -a[1][0] * inv, a[0][0] * inv);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
    return r;
}

bool operator==(const Mat2& x, const Mat2& y) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (x.a[i][j] != y.a[i][j]) return false;
    return true;
}

std::string Mat2::str() const {
    return "[[" + a[0][0].str() + ", " + a[0][1].str() + "], [" + a[1][0].str() + ", " +
           a[1][1].str() + "]]";
}

Mat2 mat_pow(const Mat2& m, unsigned long s) {
    Mat2 acc = Mat2::identity(), base = m;
    while (s) {
        if (s & 1) acc = acc * base;
        base = base * base;
        s >>= 1;
    }
    return acc;
}

EigenData eigen2(const Mat2& m) {
    if (!m.is_rational()) throw internal_error("eigen2: matrix entries must be rational");
    Rat w = m(0, 0).as_rat(), bp = m(0, 1).as_rat();
    Rat ap = m(1, 0).as_rat(), cp = m(1, 1).as_rat();

    EigenData e;
    e.degenerate = (w * cp - ap * bp) == 0;
    e.disc = (w - cp) * (w - cp) + 4 * ap * bp;
    if (e.disc < 0) {
        e.complex_pair = true;
        return e;
    }
    e.delta = QuadExt::sqrt_of(e.disc);
    QuadExt tr(w + cp);
    QuadExt half(Rat(1, 2));
    e.lambda = (tr - e.delta) * half;
    e.mu = (tr + e.delta) * half;
    if (ap != 0) {
        QuadExt diff(w - cp);
        QuadExt inv2a(Rat(1) / (2 * ap));
        e.x = (e.delta - diff) * inv2a;
        e.y = (e.delta + diff) * inv2a;
        e.has_xy = true;
    }
    return e;
}

namespace {

// Arithmetic in the formal extension Q[omega]/(omega^2 - d) with d of any
// sign; used only for the cyclotomic route, where d is the discriminant and
// may be negative (complex eigenvalue pair).
struct FormalQuad {
    Rat r, s, d;

    FormalQuad mul(const FormalQuad& o) const {
        return FormalQuad{r * o.r + s * o.s * d, r * o.s + s * o.r, d};
    }
    bool is_one() const {
        if (s == 0) return r == 1;
        // d a perfect square would have been folded by the caller's setup;
        // for non-square d, r + s*omega = 1 requires s = 0.
        return false;
    }
    FormalQuad pow(unsigned k) const {
        FormalQuad acc{Rat(1), Rat(0), d};
        FormalQuad base = *this;
        while (k) {
            if (k & 1) acc = acc.mul(base);
            base = base.mul(base);
            k >>= 1;
        }
        return acc;
    }
};

void require_nonsingular_rational(const Mat2& m) {
    if (!m.is_rational()) throw internal_error("root-of-unity test: rational matrix required");
    if (m.det().is_zero()) throw input_error("root-of-unity test: singular matrix rejected");
}

}  // namespace

RouResult ratio_rou_by_conditions(const Mat2& m) {
    require_nonsingular_rational(m);
    Rat w = m(0, 0).as_rat(), bp = m(0, 1).as_rat();
    Rat ap = m(1, 0).as_rat(), cp = m(1, 1).as_rat();
    Rat A = w + cp;
    Rat B = (cp - w) * (cp - w) + 4 * ap * bp;

    RouResult r;
    r.is_rou = true;
    if (A == 0) {
        r.condition = 1;
        r.order = 2;
    } else if (B == 0) {
        r.condition = 2;
        r.order = 1;
    } else if (A * A + B == 0) {
        r.condition = 3;
        r.order = 4;
    } else if (A * A + 3 * B == 0) {
        r.condition = 4;
        r.order = 6;
    } else if (3 * A * A + B == 0) {
        r.condition = 5;
        r.order = 3;
    } else {
        r.is_rou = false;
    }
    return r;
}

RouResult ratio_rou_by_cyclotomic(const Mat2& m) {
    require_nonsingular_rational(m);
    Rat w = m(0, 0).as_rat(), bp = m(0, 1).as_rat();
    Rat ap = m(1, 0).as_rat(), cp = m(1, 1).as_rat();
    Rat A = w + cp;
    Rat D = w * cp - ap * bp;
    Rat B = A * A - 4 * D;  // discriminant

    RouResult res;
    if (B == 0) {  // lambda == mu, ratio is exactly 1
        res.is_rou = true;
        res.order = 1;
        res.condition = 2;
        return res;
    }

    // ratio = lambda/mu = lambda * conj(mu) / (mu * conj(mu))
    //       = (A^2 + B - 2A*omega) / (4D)   in Q[omega]/(omega^2 - B).
    // Fold square |B| so that is_one() can rely on a non-square radicand.
    Rat dcanon = B;
    Rat scale(1);  // omega = scale * omega_canon
    Rat root;
    if (rat_sqrt_exact(B < 0 ? -B : B, root)) {
        dcanon = B < 0 ? Rat(-1) : Rat(1);
        scale = root;
    }
    if (dcanon == 1) {
        // B itself a positive square: eigenvalues rational; ratio rational.
        Rat sq;
        rat_sqrt_exact(B, sq);
        Rat lam = (A - sq) / 2, mu = (A + sq) / 2;
        Rat ratio = lam / mu;
        if (ratio == 1 || ratio == -1) {
            res.is_rou = true;
            res.order = ratio == 1 ? 1 : 2;
            res.condition = ratio == 1 ? 2 : 1;
        }
        return res;
    }

    FormalQuad ratio{(A * A + B) / (4 * D), -2 * A * scale / (4 * D), dcanon};
    for (unsigned k : {1u, 2u, 3u, 4u, 6u}) {
        if (ratio.pow(k).is_one()) {
            res.is_rou = true;
            res.order = static_cast<int>(k);
            switch (k) {
                case 1: res.condition = 2; break;
                case 2: res.condition = 1; break;
                case 3: res.condition = 5; break;
                case 4: res.condition = 3; break;
                case 6: res.condition = 4; break;
            }
            return res;
        }
    }
    return res;
}

std::pair<bool, std::optional<int>> ratio_is_root_of_unity(const Mat2& m) {
    RouResult c = ratio_rou_by_conditions(m);
    RouResult y = ratio_rou_by_cyclotomic(m);
    if (c.is_rou != y.is_rou || (c.is_rou && c.order != y.order))
        throw internal_error("root-of-unity routes disagree on " + m.str());
    if (!c.is_rou) return {false, std::nullopt};
    return {true, c.condition};
}

}  // namespace holant
