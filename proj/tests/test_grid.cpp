#include <doctest.h>

#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/grid.hpp"

#include <random>

using namespace holant;

namespace {

SignatureGrid k33(const SymSig3& f) {
    std::vector<std::pair<int, int>> inc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inc.emplace_back(i, j);
    return SignatureGrid::canonical(f, 3, 3, inc);
}

SetSystem triple_system() {
    SetSystem s;
    s.element_count = 3;
    s.sets = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    return s;
}

}  // namespace

TEST_CASE("K33 paper values") {
    CHECK(eval_brute(k33(SymSig3{1, 0, -1, 2})).as_rat() == 6);
    CHECK(eval_brute(k33(SymSig3{0, 1, 0, 0})).as_rat() == 3);
    CHECK(eval_brute(k33(SymSig3{1, 0, 0, 0})).as_rat() == 1);
    // any grid with [1,0,0,0]: only the all-zero assignment survives
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t)
        CHECK(eval_brute(random_canonical_grid(SymSig3{1, 0, 0, 0}, 4, rng)).as_rat() == 1);
}

TEST_CASE("serial, parallel, and dp evaluators agree") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 12; ++t) {
        SymSig3 f{d(rng), d(rng), d(rng), d(rng)};
        SignatureGrid g = random_canonical_grid(f, 2 + t % 4, rng);
        QuadExt a = eval_brute_serial(g);
        CHECK(eval_brute(g) == a);
        CHECK(eval_dp(g) == a);
    }
}

TEST_CASE("flip covariance: Holant(flip f | =3) = Holant(f | =3)") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 10; ++t) {
        SymSig3 f{d(rng), d(rng), d(rng), d(rng)};
        std::mt19937_64 topo(1000 + t);
        SignatureGrid g1 = random_canonical_grid(f, 3, topo);
        std::mt19937_64 topo2(1000 + t);
        SignatureGrid g2 = random_canonical_grid(flip(f), 3, topo2);
        CHECK(eval_brute(g1) == eval_brute(g2));
    }
}

TEST_CASE("brute-force cap") {
    SignatureGrid g = k33(SymSig3{1, 1, 1, 1});
    CHECK_THROWS_AS(eval_brute(g, 5), cap_exceeded);
}

TEST_CASE("set system validation") {
    SetSystem bad;
    bad.element_count = 3;
    bad.sets = {{0, 1, 2}, {0, 1, 2}};  // each element in only 2 sets
    CHECK_THROWS_AS(bad.validate(), input_error);
    SetSystem range;
    range.element_count = 2;
    range.sets = {{0, 1, 2}};
    CHECK_THROWS_AS(range.validate(), input_error);
}

TEST_CASE("cover_value: triple system = 6 = Holant of its grid") {
    SetSystem s = triple_system();
    CHECK(cover_value(s) == 6);
    CHECK(eval_brute(from_set_system(s)).as_rat() == 6);
}

TEST_CASE("cover_value always includes the empty-family +1 term") {
    // a system whose only leafless subfamilies are {} and the full family
    SetSystem s;
    s.element_count = 6;
    s.sets = {{0, 1, 2}, {0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    Rat v = cover_value(s);
    CHECK(eval_brute(from_set_system(s)).as_rat() == v);
}

TEST_CASE("cover_value equals Holant on multiset systems") {
    SetSystem s;  // elements {0,1}; sets {0,0,1} and {1,1,0}
    s.element_count = 2;
    s.sets = {{0, 0, 1}, {1, 1, 0}};
    CHECK(cover_value(s) == eval_brute(from_set_system(s)).as_rat());
}

TEST_CASE("holographic invariance on random grids") {
    Mat2 mats[3] = {Mat2::hadamard(), Mat2::from_rats(1, 2, 0, 1), Mat2::from_rats(2, 0, 0, 3)};
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 12; ++t) {
        SymSig3 f{d(rng), d(rng), d(rng), d(rng)};
        SignatureGrid g = random_canonical_grid(f, 2 + t % 3, rng);
        QuadExt original = eval_brute(g);
        for (const Mat2& m : mats) {
            auto [tg, ledger] = apply_holo_to_grid(g, m);
            CHECK(QuadExt(ledger.collapse()) * eval_brute(tg) == original);
        }
    }
}

TEST_CASE("holographic transform of the K33 leafless-cover grid by H") {
    SignatureGrid g = k33(SymSig3{1, 0, -1, 2});
    auto [tg, ledger] = apply_holo_to_grid(g, Mat2::hadamard());
    // LHS carries the raw row transform [0,0,4,-4]; RHS normalizes to [1,0,1,0]
    auto lw = tg.lhs[0].symmetric_weights();
    REQUIRE(lw);
    CHECK((*lw)[2].as_rat() == 4);
    CHECK((*lw)[3].as_rat() == -4);
    auto rw = tg.rhs[0].symmetric_weights();
    REQUIRE(rw);
    CHECK((*rw)[0].as_rat() == 1);
    CHECK((*rw)[2].as_rat() == 1);
    CHECK(ledger.collapse() == Rat(1, 64));
    CHECK(QuadExt(Rat(1, 64)) * eval_brute(tg) == QuadExt(6));
}

TEST_CASE("double Hadamard transform scales the grid by powers of 2") {
    SignatureGrid g = k33(SymSig3{1, 0, -1, 2});
    auto [t1, l1] = apply_holo_to_grid(g, Mat2::hadamard());
    auto [t2, l2] = apply_holo_to_grid(t1, Mat2::hadamard());
    // H^2 = 2I: LHS signatures come back scaled by 8
    auto w = t2.lhs[0].symmetric_weights();
    REQUIRE(w);
    CHECK((*w)[0].as_rat() == 8);
    CHECK((*w)[2].as_rat() == -8);
    CHECK(QuadExt(l1.collapse() * l2.collapse()) * eval_brute(t2) == QuadExt(6));
}

TEST_CASE("scalar ledger keeps factored powers") {
    ScalarLedger l;
    l.mul_pow(Rat(1, 4), 3);
    l.mul(Rat(2));
    CHECK(l.collapse() == Rat(2, 64));
    l.mul_pow(Rat(1, 4), -3);
    CHECK(l.collapse() == Rat(2));
}

TEST_CASE("tractable_eval closed forms agree with brute force") {
    CHECK(tractable_eval(k33(SymSig3{1, 2, 4, 8})) == 729);
    CHECK(eval_brute(k33(SymSig3{1, 2, 4, 8})).as_rat() == 729);

    CHECK(tractable_eval(k33(SymSig3{1, 0, 0, 5})) == 126);
    CHECK(eval_brute(k33(SymSig3{1, 0, 0, 5})).as_rat() == 126);

    // connected 6-vertex grid with =3: two constant assignments
    SignatureGrid g =
        SignatureGrid::canonical(SymSig3{1, 0, 0, 1}, 3, 3,
                                 {{0, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 2},
                                  {2, 0}});
    CHECK(tractable_eval(g) == 2);
    CHECK(eval_brute(g).as_rat() == 2);

    // disconnected Gen-Eq grid: product over components
    SignatureGrid h = SignatureGrid::canonical(
        SymSig3{1, 0, 0, 5}, 2, 2, {{0, 0}, {0, 0}, {0, 0}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(tractable_eval(h) == 36);  // (1+5)^1 per component
    CHECK(eval_brute(h).as_rat() == 36);

    CHECK_THROWS_AS(tractable_eval(k33(SymSig3{1, 0, -1, 2})), input_error);

    std::mt19937_64 rng(77);
    for (int t = 0; t < 6; ++t) {
        SignatureGrid r = random_canonical_grid(SymSig3{1, -2, 4, -8}, 3, rng);
        CHECK(QuadExt(tractable_eval(r)) == eval_brute(r));
        SignatureGrid q = random_canonical_grid(SymSig3{3, 0, 0, -2}, 4, rng);
        CHECK(QuadExt(tractable_eval(q)) == eval_brute(q));
    }
}

TEST_CASE("degenerate with u0^3 + u1^3 = 0: Holant identically zero") {
    std::mt19937_64 rng(31337);
    SignatureGrid g = random_canonical_grid(SymSig3{1, -1, 1, -1}, 4, rng);
    CHECK(eval_brute(g).as_rat() == 0);
    CHECK(tractable_eval(g) == 0);
}

TEST_CASE("straddled insertion: identity matrix slot equals the plain grid") {
    SignatureGrid g = k33(SymSig3{1, 2, 3, 5});
    QuadExt base = eval_brute(g);
    SignatureGrid s = insert_straddled(g, {4}, {Mat2::identity()});
    CHECK(eval_brute(s) == base);
    CHECK(eval_dp(s) == base);
}

TEST_CASE("straddled insertion: G1^s slot equals chaining the gadget") {
    // replacing an edge by the G1 matrix is the same as evaluating the grid
    // where that edge runs through the physical double-edge gadget
    SymSig3 f{1, 2, 3, 5};
    SignatureGrid g = k33(f);
    SignatureGrid s1 = insert_straddled(g, {0}, {g1_matrix(f)});
    // physical: new LHS vertex (the square) + new RHS vertex (the circle)
    SignatureGrid phys = g;
    phys.lhs.push_back(DenseSig::from_sym3_lhs(f));
    phys.rhs.push_back(DenseSig::eq3_rhs());
    auto old = phys.edges[0];
    // old edge (l0 port p, r0 port q): l0 -> new circle, new square -> r0,
    // square == circle double edge
    phys.edges[0] = {old.a, SignatureGrid::End{GridSide::RHS, 3, 0}};  // l0 - new circle
    phys.edges.push_back({SignatureGrid::End{GridSide::LHS, 3, 0}, old.b});
    phys.edges.push_back(
        {SignatureGrid::End{GridSide::LHS, 3, 1}, SignatureGrid::End{GridSide::RHS, 3, 1}});
    phys.edges.push_back(
        {SignatureGrid::End{GridSide::LHS, 3, 2}, SignatureGrid::End{GridSide::RHS, 3, 2}});
    CHECK(eval_brute(s1) == eval_brute(phys));
}

TEST_CASE("grid validation") {
    SignatureGrid g = k33(SymSig3{1, 1, 1, 1});
    g.edges.pop_back();  // leaves two ports unused
    CHECK_THROWS_AS(g.validate(), input_error);
}
