#include "holant/conditions.hpp"
#include <algorithm>

#include "holant/errors.hpp"
#include "holant/gadget.hpp"

#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holant {

namespace {

SymSig3 to_sig(const Point3& p) { return SymSig3{1, p[0], p[1], p[2]}; }

std::string point_str(const Point3& p) {
    return "(" + rat_str(p[0]) + ", " + rat_str(p[1]) + ", " + rat_str(p[2]) + ")";
}

// The root-of-unity lines of (c1eq) in (a,b,c).
Rat c1eq_line(int sub, const Rat& a, const Rat& b, const Rat& c) {
    switch (sub) {
        case 1: return c + 1;
        case 2: return a * b + c * c + c + 1;
        case 3: return 2 * a * b + c * c + 1;
        case 4: return 3 * a * b + c * c - c + 1;
        case 5: return 4 * a * b + c * c - 2 * c + 1;
    }
    throw input_error("c1eq line index must be 1..5");
}

// The (c3eq) lines in A = trace, B = discriminant of a straddled matrix.
Rat c3eq_line(int sub, const Rat& A, const Rat& B) {
    switch (sub) {
        case 1: return A;
        case 2: return B;
        case 3: return A * A + B;
        case 4: return A * A + 3 * B;
        case 5: return 3 * A * A + B;
    }
    throw input_error("c3eq line index must be 1..5");
}

void trace_disc(const Mat2& m, Rat& A, Rat& B, Rat& det) {
    Rat w = m(0, 0).as_rat(), bp = m(0, 1).as_rat();
    Rat ap = m(1, 0).as_rat(), cp = m(1, 1).as_rat();
    A = w + cp;
    B = (cp - w) * (cp - w) + 4 * ap * bp;
    det = w * cp - ap * bp;
}

// Irreducible degree-7 polynomial from the G3 exception list.
Rat g3_f1_poly(const Rat& a, const Rat& b, const Rat& c) {
    Rat a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
    Rat b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b;
    Rat c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c, c7 = c5 * c2;
    return a3 + 4 * a6 + 3 * a5 * b2 + a3 * b3 - c - 4 * a3 * c + 6 * a4 * b * c -
           6 * a2 * b2 * c - b3 * c - 3 * a2 * b5 * c - 3 * a3 * c2 - 3 * a * b * c2 -
           4 * b3 * c2 - a3 * b3 * c2 - 6 * a * b4 * c2 - 4 * b6 * c2 + 3 * c3 + 4 * a3 * c3 +
           6 * a2 * b2 * c3 + 3 * b3 * c3 + a3 * c4 + 3 * a * b * c4 + 4 * b3 * c4 - 3 * c5 -
           b3 * c5 + c7;
}

// S-shaped membership checks applied to a 4-tuple (the tractable forms).
bool s_form(int sub, const SymSig3& g) {
    const Rat &w = g.f0, &x = g.f1, &y = g.f2, &z = g.f3;
    switch (sub) {
        case 1: return x * x == w * y && y * y == x * z;       // degenerate form
        case 2: return x == 0 && y == 0;                       // Gen-Eq form
        case 3: return w == y && x == 0 && z == 0;             // [1,0,1,0]
        case 4: return w + y == 0 && x == 0 && z == 0;         // [1,0,-1,0]
        case 5: return w == x && w + y == 0 && w + z == 0;     // [1,1,-1,-1]
        case 6: return w + x == 0 && w + y == 0 && w == z;     // [1,-1,-1,1]
    }
    throw input_error("S/U line index must be 1..6");
}

// T-shaped lines applied to a 4-tuple (c1eq on the normalized tuple, cleared
// of denominators, plus the degeneracy line T6).
bool t_form(int sub, const SymSig3& g) {
    const Rat &w = g.f0, &x = g.f1, &y = g.f2, &z = g.f3;
    switch (sub) {
        case 1: return z * w + w * w == 0;
        case 2: return x * y + z * z + z * w + w * w == 0;
        case 3: return 2 * x * y + z * z + w * w == 0;
        case 4: return 3 * x * y + z * z - z * w + w * w == 0;
        case 5: return 4 * x * y + z * z - 2 * z * w + w * w == 0;
        case 6: return x * y == w * z;
    }
    throw input_error("T/V line index must be 1..6");
}

}  // namespace

std::string cond_system_name(CondSystem sys) {
    switch (sys) {
        case CondSystem::C1EQ: return "c1eq";
        case CondSystem::C3EQ_G2: return "c3eq(G2)";
        case CondSystem::C3EQ_G3: return "c3eq(G3)";
        case CondSystem::G3WORKS: return "g3works";
        case CondSystem::CON1: return "con1";
        case CondSystem::CON2A: return "con2";
        case CondSystem::CON2B: return "con2'";
        case CondSystem::R: return "R";
        case CondSystem::S: return "S";
        case CondSystem::T: return "T";
        case CondSystem::U: return "U";
        case CondSystem::V: return "V";
    }
    return "?";
}

int cond_sub_count(CondSystem sys) {
    switch (sys) {
        case CondSystem::C1EQ:
        case CondSystem::C3EQ_G2:
        case CondSystem::C3EQ_G3: return 5;  // plus sub 0 = degeneracy
        case CondSystem::G3WORKS: return 4;
        case CondSystem::CON1:
        case CondSystem::CON2A:
        case CondSystem::CON2B: return 1;
        case CondSystem::R: return 5;
        case CondSystem::S:
        case CondSystem::T:
        case CondSystem::U:
        case CondSystem::V: return 6;
    }
    return 0;
}

bool eval_condition(CondSystem sys, int sub, const Point3& p) {
    const Rat &a = p[0], &b = p[1], &c = p[2];
    switch (sys) {
        case CondSystem::C1EQ:
            if (sub == 0) return c == a * b;  // degenerate G1
            return c1eq_line(sub, a, b, c) == 0;
        case CondSystem::C3EQ_G2:
        case CondSystem::C3EQ_G3: {
            Mat2 m = sys == CondSystem::C3EQ_G2 ? g2_matrix(to_sig(p)) : g3_matrix(to_sig(p));
            Rat A, B, det;
            trace_disc(m, A, B, det);
            if (sub == 0) return det == 0;
            return c3eq_line(sub, A, B) == 0;
        }
        case CondSystem::G3WORKS:
            switch (sub) {
                case 1: return c == a * b;
                case 2: return a + b * b == 0;
                case 3: return a * a * a - b * b * b * c + a * b * (c * c - 1) == 0;
                case 4: return g3_f1_poly(a, b, c) == 0;
            }
            throw input_error("g3works line index must be 1..4");
        case CondSystem::CON1: return a * a * a - b * b * b - a * b * (1 - c) == 0;
        case CondSystem::CON2A: return a * a * a + a * b + 2 * b * b * b == 0;
        case CondSystem::CON2B: {
            Rat lhs = a * a * a * a * b + a * b * b * b * b;
            Rat a4 = a * a * a * a, b4 = b * b * b * b;
            return lhs * lhs == (a4 * a + b4) * (b4 * b + a4 * c);
        }
        case CondSystem::R: return c1eq_line(sub, a, b, c) == 0;
        case CondSystem::S: return s_form(sub, gaux_apply(to_sig(p)));
        case CondSystem::T: return t_form(sub, gaux_apply(to_sig(p)));
        case CondSystem::U: return s_form(sub, gaux_apply(gaux_apply(to_sig(p))));
        case CondSystem::V: return t_form(sub, gaux_apply(gaux_apply(to_sig(p))));
    }
    throw input_error("unknown condition system");
}

bool eval_any(CondSystem sys, const Point3& p) { return first_matching(sys, p) != 0; }

int first_matching(CondSystem sys, const Point3& p) {
    for (int sub = 1; sub <= cond_sub_count(sys); ++sub)
        if (eval_condition(sys, sub, p)) return sub;
    return 0;
}

bool holds_RS(const Point3& p) {
    return eval_any(CondSystem::R, p) && eval_any(CondSystem::S, p);
}
bool holds_RTU(const Point3& p) {
    return eval_any(CondSystem::R, p) && eval_any(CondSystem::T, p) &&
           eval_any(CondSystem::U, p);
}
bool holds_RTV(const Point3& p) {
    return eval_any(CondSystem::R, p) && eval_any(CondSystem::T, p) &&
           eval_any(CondSystem::V, p);
}

const std::vector<Point3>& rs_solutions() {
    static const std::vector<Point3> pts = {
        {Rat(-1), Rat(1), Rat(-1)},
        {Rat(1), Rat(-1), Rat(-1)},
        {Rat(1), Rat(-1), Rat(1)},
        {Rat(1, 2), Rat(-1, 2), Rat(-1)},
    };
    return pts;
}

const std::vector<Point3>& rtu_solutions() {
    static const std::vector<Point3> pts = {
        {Rat(-1), Rat(1), Rat(-1)}, {Rat(1), Rat(-1), Rat(-1)}, {Rat(-1), Rat(1), Rat(1)},
        {Rat(1), Rat(-1), Rat(1)},  {Rat(1, 2), Rat(-1, 2), Rat(-1)},
    };
    return pts;
}

bool is_documented_rtv_solution(const Point3& p) {
    if (p[1] == -p[0] && p[2] == -1) return true;  // the one-parameter family
    return (p == Point3{Rat(-1), Rat(1), Rat(1)}) || (p == Point3{Rat(1), Rat(-1), Rat(1)});
}

SolutionReport verify_paper_solutions() {
    SolutionReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
    };

    for (const Point3& p : rs_solutions())
        add("R&S at " + point_str(p), holds_RS(p) && p[0] * p[1] * p[2] != 0,
            "R line " + std::to_string(first_matching(CondSystem::R, p)) + ", S line " +
                std::to_string(first_matching(CondSystem::S, p)));

    for (const Point3& p : rtu_solutions())
        add("R&T&U at " + point_str(p), holds_RTU(p) && p[0] * p[1] * p[2] != 0,
            "R line " + std::to_string(first_matching(CondSystem::R, p)) + ", T line " +
                std::to_string(first_matching(CondSystem::T, p)) + ", U line " +
                std::to_string(first_matching(CondSystem::U, p)));

    for (const Point3& p : {Point3{Rat(-1), Rat(1), Rat(1)}, Point3{Rat(1), Rat(-1), Rat(1)}})
        add("R&T&V at " + point_str(p), holds_RTV(p), "listed point");

    for (const Rat& a : {Rat(2), Rat(3, 2), Rat(-5)}) {
        Point3 p{a, -a, Rat(-1)};
        add("R&T&V on the family at a=" + rat_str(a), holds_RTV(p), "b=-a, c=-1");
    }

    // a handful of generic points must violate each conjunction
    for (const Point3& p : {Point3{Rat(2), Rat(3), Rat(5)}, Point3{Rat(1), Rat(2), Rat(7, 3)},
                            Point3{Rat(-4), Rat(9, 2), Rat(11)}}) {
        add("no conjunction at generic " + point_str(p),
            !holds_RS(p) && !holds_RTU(p) && !holds_RTV(p), "negative control");
    }
    return rep;
}

std::optional<FalsifySystem> falsify_system_by_name(const std::string& name) {
    if (name == "f1f4") return FalsifySystem::F1F4;
    if (name == "g1g2g3") return FalsifySystem::G1G2G3;
    if (name == "rs") return FalsifySystem::RS;
    if (name == "rtu") return FalsifySystem::RTU;
    if (name == "rtv") return FalsifySystem::RTV;
    return std::nullopt;
}

std::string falsify_system_name(FalsifySystem sys) {
    switch (sys) {
        case FalsifySystem::F1F4: return "f1f4";
        case FalsifySystem::G1G2G3: return "g1g2g3";
        case FalsifySystem::RS: return "rs";
        case FalsifySystem::RTU: return "rtu";
        case FalsifySystem::RTV: return "rtv";
    }
    return "?";
}

namespace {

Rat random_rat(std::mt19937_64& rng, int height) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    return Rat(num(rng), den(rng));
}

Rat random_nonzero_rat(std::mt19937_64& rng, int height) {
    Rat r = random_rat(rng, height);
    while (r == 0) r = random_rat(rng, height);
    return r;
}

// Real and imaginary parts of sum_k coeff[k] x^k at x = u + v i, per the
// appendix encoding: r2 = u^2 - v^2, i2 = 2uv, r3 = u^3 - 3uv^2, i3 = 3u^2v - v^3.
std::pair<Rat, Rat> cubic_at_complex(const std::array<Rat, 4>& coeff, const Rat& u,
                                     const Rat& v) {
    Rat r1 = u, i1 = v;
    Rat r2 = u * u - v * v, i2 = 2 * u * v;
    Rat r3 = u * u * u - 3 * u * v * v, i3 = 3 * u * u * v - v * v * v;
    Rat re = coeff[0] + coeff[1] * r1 + coeff[2] * r2 + coeff[3] * r3;
    Rat im = coeff[1] * i1 + coeff[2] * i2 + coeff[3] * i3;
    return {re, im};
}

}  // namespace

FalsifyReport falsify_emptiness(FalsifySystem sys, long samples, int height, unsigned long seed) {
    FalsifyReport rep;
    rep.system = sys;
    rep.samples = samples;
    rep.height = height;
    rep.seed = seed;

    std::vector<FalsifyReport::Hit> hits;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<FalsifyReport::Hit> local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long t = 0; t < samples; ++t) {
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long>(t));
            switch (sys) {
                case FalsifySystem::F1F4: {
                    Rat a = random_nonzero_rat(rng, height), b = random_rat(rng, height);
                    Rat c = random_rat(rng, height);
                    Rat u = random_rat(rng, height), v = random_rat(rng, height);
                    auto rows = absorb_lhs_coeff_rows(SymSig3{1, a, b, c});
                    bool all_zero = true;
                    for (const auto& row : rows) {
                        auto [re, im] = cubic_at_complex(row, u, v);
                        if (re != 0 || im != 0) {
                            all_zero = false;
                            break;
                        }
                    }
                    if (all_zero)
                        local.push_back({point_str({a, b, c}) + " x=" + rat_str(u) + "+" +
                                             rat_str(v) + "i",
                                         "all four absorption factors vanish", false});
                    break;
                }
                case FalsifySystem::G1G2G3: {
                    Rat a = random_rat(rng, height), b = random_rat(rng, height);
                    Rat c = random_rat(rng, height), y = random_rat(rng, height);
                    auto g = absorb_factor_rhs(SymSig3{1, a, b, c}, QuadExt(y));
                    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) {
                        bool doc = (y == -1) && ((b == a && c == 1) ||
                                                 (b == -2 * a - 1 && c == 3 * a + 2));
                        local.push_back({point_str({a, b, c}) + " y=" + rat_str(y),
                                         doc ? "documented y=-1 exceptional family"
                                             : "UNDOCUMENTED",
                                         doc});
                    }
                    break;
                }
                case FalsifySystem::RS:
                case FalsifySystem::RTU:
                case FalsifySystem::RTV: {
                    Point3 p{random_nonzero_rat(rng, height), random_nonzero_rat(rng, height),
                             random_nonzero_rat(rng, height)};
                    bool hit = sys == FalsifySystem::RS    ? holds_RS(p)
                               : sys == FalsifySystem::RTU ? holds_RTU(p)
                                                           : holds_RTV(p);
                    if (hit) {
                        bool doc;
                        if (sys == FalsifySystem::RS)
                            doc = std::find(rs_solutions().begin(), rs_solutions().end(), p) !=
                                  rs_solutions().end();
                        else if (sys == FalsifySystem::RTU)
                            doc = std::find(rtu_solutions().begin(), rtu_solutions().end(), p) !=
                                  rtu_solutions().end();
                        else
                            doc = is_documented_rtv_solution(p);
                        local.push_back(
                            {point_str(p), doc ? "listed solution" : "UNDOCUMENTED", doc});
                    }
                    break;
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        hits.insert(hits.end(), local.begin(), local.end());
    }
    rep.hits = std::move(hits);

    // Directed sweeps confirming the documented families.
    if (sys == FalsifySystem::G1G2G3) {
        for (const Rat& a : {Rat(2), Rat(-3), Rat(1, 2), Rat(7, 5)}) {
            for (int fam = 0; fam < 2; ++fam) {
                SymSig3 f = fam == 0 ? SymSig3{1, a, a, 1}
                                     : SymSig3{1, a, -2 * a - 1, 3 * a + 2};
                auto g = absorb_factor_rhs(f, QuadExt(-1));
                if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
                    rep.rediscovered.push_back(
                        {point_str({f.f1, f.f2, f.f3}) + " y=-1",
                         fam == 0 ? "family [1,a,a,1]" : "family [1,a,-2a-1,3a+2]", true});
            }
        }
    }
    if (sys == FalsifySystem::RTV) {
        for (const Rat& a : {Rat(2), Rat(3, 2), Rat(-5)}) {
            Point3 p{a, -a, Rat(-1)};
            if (holds_RTV(p))
                rep.rediscovered.push_back({point_str(p), "family b=-a, c=-1", true});
        }
    }
    return rep;
}

}  // namespace holant
