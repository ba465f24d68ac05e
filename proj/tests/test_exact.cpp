#include <doctest.h>

#include "holant/errors.hpp"
#include "holant/mat2.hpp"
#include "holant/quadext.hpp"
#include "holant/rational.hpp"

#include <random>

using namespace holant;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-6/8") == Rat(-3, 4));
    CHECK(rat_parse("7") == Rat(7));
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1.5"), input_error);
    CHECK_THROWS_AS(rat_parse("1/0"), input_error);
    CHECK_THROWS_AS(rat_parse(""), input_error);
}

TEST_CASE("rat_pow and exact square roots") {
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
    Rat root;
    CHECK(rat_sqrt_exact(Rat(9, 4), root));
    CHECK(root == Rat(3, 2));
    CHECK(!rat_sqrt_exact(Rat(10), root));
    CHECK(!rat_sqrt_exact(Rat(-4), root));
}

TEST_CASE("QuadExt normalizes square radicands eagerly") {
    QuadExt v(Rat(1), Rat(3), Rat(4));  // 1 + 3*sqrt(4) = 7
    CHECK(v.is_rational());
    CHECK(v.as_rat() == Rat(7));
    QuadExt w = QuadExt::sqrt_of(Rat(40));  // lives in the same field as sqrt(10)
    QuadExt t = QuadExt::sqrt_of(Rat(10));
    CHECK(w == t * QuadExt(2));
    CHECK_THROWS_AS((void)(QuadExt::sqrt_of(Rat(2)) + QuadExt::sqrt_of(Rat(3))), internal_error);
}

TEST_CASE("QuadExt is a field for a fixed radicand") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    auto rnd = [&]() { return QuadExt(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(7)); };
    for (int t = 0; t < 300; ++t) {
        QuadExt u = rnd(), v = rnd(), w = rnd();
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK(u + v == v + u);
        if (!u.is_zero()) CHECK(u * u.inverse() == QuadExt(1));
        CHECK(u - u == QuadExt(0));
    }
}

TEST_CASE("mat_pow") {
    Mat2 m = Mat2::from_rats(1, 1, 0, 1);
    CHECK(mat_pow(m, 0) == Mat2::identity());
    CHECK(mat_pow(m, 3) == Mat2::from_rats(1, 3, 0, 1));
    Mat2 n = Mat2::from_rats(1, 3, 2, 5);
    CHECK(mat_pow(n, 2) == Mat2::from_rats(7, 18, 12, 31));
}

TEST_CASE("eigen2 on [[1,0],[a,c]] gives delta = |1-c| and ratio {c, 1/c}") {
    for (Rat c : {Rat(3), Rat(1, 2), Rat(-2)}) {
        EigenData e = eigen2(Mat2::from_rats(1, 0, 5, c));
        Rat d = c > 1 ? Rat(c - 1) : Rat(1 - c);
        CHECK(e.delta == QuadExt(d));
        // {lambda, mu} = {1, c} in some order, so the ratio is c or 1/c.
        QuadExt ratio = e.lambda / e.mu;
        CHECK((ratio == QuadExt(c) || ratio == QuadExt(Rat(1) / c)));
    }
}

TEST_CASE("eigen2 identity: repeated eigenvalue 1") {
    EigenData e = eigen2(Mat2::identity());
    CHECK(e.delta == QuadExt(0));
    CHECK(e.lambda == QuadExt(1));
    CHECK(e.mu == QuadExt(1));
    CHECK(!e.degenerate);
}

TEST_CASE("eigen2 Jordan factorization reproduces M exactly") {
    auto check_jordan = [](const Mat2& m) {
        EigenData e = eigen2(m);
        REQUIRE(e.has_xy);
        REQUIRE(!e.complex_pair);
        Mat2 p(-e.x, e.y, QuadExt(1), QuadExt(1));
        Mat2 d(e.lambda, QuadExt(0), QuadExt(0), e.mu);
        CHECK(p * d * p.inverse() == m);
        CHECK(e.lambda * e.mu == m.det());
        CHECK(e.lambda + e.mu == m.trace());
    };
    check_jordan(Mat2::from_rats(1, 3, 2, 5));  // lambda*mu = -1, lambda+mu = 6
    EigenData e = eigen2(Mat2::from_rats(1, 3, 2, 5));
    CHECK(e.lambda * e.mu == QuadExt(-1));
    CHECK(e.lambda + e.mu == QuadExt(6));
    check_jordan(Mat2::from_rats(1, 2, 3, 4));
    check_jordan(Mat2::from_rats(0, 1, 1, 0));
}

TEST_CASE("eigen2 reports complex pairs as a condition, not an exception") {
    EigenData e = eigen2(Mat2::from_rats(0, 1, -1, 0));  // rotation by 90 degrees
    CHECK(e.complex_pair);
    CHECK(!e.degenerate);
}

TEST_CASE("root-of-unity: paper examples") {
    auto [rou1, c1] = ratio_is_root_of_unity(Mat2::from_rats(0, 1, -1, 0));
    CHECK(rou1);  // eigenvalues +-i, ratio -1
    CHECK(*c1 == 1);

    // eigenvalues 1 +- i, ratio i: matches the A^2 + B = 0 condition, which is
    // the 2ab + c^2 + 1 = 0 line of the G1 list.
    auto [rou2, c2] = ratio_is_root_of_unity(Mat2::from_rats(1, 1, -1, 1));
    CHECK(rou2);
    CHECK(*c2 == 3);

    auto [rou3, c3] = ratio_is_root_of_unity(Mat2::from_rats(1, 3, 2, 5));
    CHECK(!rou3);

    CHECK_THROWS_AS(ratio_is_root_of_unity(Mat2::from_rats(1, 2, 2, 4)), input_error);
}

TEST_CASE("root-of-unity: all five orders are hit") {
    // order 1: repeated eigenvalue (B = 0)
    CHECK(ratio_rou_by_cyclotomic(Mat2::from_rats(2, 0, 0, 2)).order == 1);
    // order 2: trace 0
    CHECK(ratio_rou_by_cyclotomic(Mat2::from_rats(2, 0, 0, -2)).order == 2);
    // order 3: A^2 = det, e.g. eigenvalues being primitive cube roots scaled:
    // trace 1, det 1 -> [[0,-1],[1,1]]
    CHECK(ratio_rou_by_cyclotomic(Mat2::from_rats(0, -1, 1, 1)).order == 3);
    // order 4: trace^2 = 2 det: [[1,1],[-1,1]]
    CHECK(ratio_rou_by_cyclotomic(Mat2::from_rats(1, 1, -1, 1)).order == 4);
    // order 6: trace^2 = 3 det: trace 3, det 3 -> [[1,-1],[1,2]]
    CHECK(ratio_rou_by_cyclotomic(Mat2::from_rats(1, -1, 1, 2)).order == 6);
}

TEST_CASE("root-of-unity: the two routes agree on 1e5 random rational matrices") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
    int rou_count = 0;
    for (int t = 0; t < 100000; ++t) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        Rat c(num(rng), den(rng)), d(num(rng), den(rng));
        if (a * d - b * c == 0) continue;
        Mat2 m = Mat2::from_rats(a, b, c, d);
        RouResult r1 = ratio_rou_by_conditions(m);
        RouResult r2 = ratio_rou_by_cyclotomic(m);
        REQUIRE(r1.is_rou == r2.is_rou);
        if (r1.is_rou) {
            REQUIRE(r1.order == r2.order);
            REQUIRE(r1.condition == r2.condition);
            ++rou_count;
        }
    }
    CHECK(rou_count > 0);  // the sample does exercise the positive branch
}
