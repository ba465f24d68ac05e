#include <doctest.h>

#include "holant/classify.hpp"
#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/grid.hpp"

#include <random>

using namespace holant;

TEST_CASE("eval_condition examples") {
    // R at (a, b, -1) is true via the first line
    CHECK(eval_condition(CondSystem::R, 1, {Rat(7), Rat(-3), Rat(-1)}));
    CHECK(first_matching(CondSystem::R, {Rat(7), Rat(-3), Rat(-1)}) == 1);

    // S at (-1, 1, -1): the G_aux image is the zero tuple, degenerate form
    CHECK(eval_condition(CondSystem::S, 1, {Rat(-1), Rat(1), Rat(-1)}));

    // T6 holds whenever xy = wz on the transformed tuple; (1,-1,1) is such a point
    CHECK(eval_condition(CondSystem::T, 6, {Rat(1), Rat(-1), Rat(1)}));

    // con1 and con2' hold along the degenerate curve b = a^2, c = a^3
    Rat a(5, 3);
    Point3 degen{a, a * a, a * a * a};
    CHECK(eval_condition(CondSystem::CON1, 1, degen));
    CHECK(eval_condition(CondSystem::CON2B, 1, degen));
}

TEST_CASE("g_works") {
    CHECK(g_works(1, SymSig3{1, 2, 3, 5}).works);

    auto w1 = g_works(1, SymSig3{1, 2, 3, 6});  // c = ab: degenerate
    CHECK(!w1.works);
    CHECK(w1.failing->first == CondSystem::C1EQ);
    CHECK(w1.failing->second == 0);

    auto w2 = g_works(1, SymSig3{1, 1, -1, 1});  // 2ab + c^2 + 1 = 0: line 3
    CHECK(!w2.works);
    CHECK(w2.failing->second == 3);

    // G2 works on [1, a, -1/a, -1] (eigenvalue ratio 1/2)
    CHECK(g_works(2, SymSig3{1, 2, Rat(-1, 2), -1}).works);
    // G3 works on [1,-1,0,2] (the sqrt(5) interpolation example)
    CHECK(g_works(3, SymSig3{1, -1, 0, 2}).works);
    CHECK_THROWS_AS(g_works(1, SymSig3{2, 0, 0, 1}), input_error);
}

TEST_CASE("dichotomy: spec examples") {
    CHECK(dichotomy(SymSig3{1, 2, 4, 8}).kind == VerdictKind::PTime);
    CHECK(dichotomy(SymSig3{1, 2, 4, 8}).reason.kind == SigClassKind::Degenerate);

    CHECK(dichotomy(SymSig3{1, 1, -1, -1}).kind == VerdictKind::PTime);
    CHECK(dichotomy(SymSig3{1, 1, -1, -1}).reason.kind == SigClassKind::Affine);

    Verdict zero = dichotomy(SymSig3{0, 0, 0, 0});
    CHECK(zero.kind == VerdictKind::PTime);
    CHECK(zero.holant_identically_zero);

    Verdict planar = dichotomy(SymSig3{1, 0, -1, 2});
    CHECK(planar.kind == VerdictKind::SharpPHardPlanarPTime);
    CHECK(planar.planar_ab->first == Rat(1, 2));
    CHECK(planar.planar_ab->second == Rat(-1, 2));

    // [3,-1,-1,3] is #P-hard in general; it also sits in the planar family
    // at (a,b) = (1,0), so the planar flag is set per the family criterion.
    Verdict three = dichotomy(SymSig3{3, -1, -1, 3});
    CHECK(three.hard());
    CHECK(three.kind == VerdictKind::SharpPHardPlanarPTime);
    CHECK(three.planar_ab->first == Rat(1));
    CHECK(three.planar_ab->second == Rat(0));

    CHECK(dichotomy(SymSig3{1, -1, 1, -1}).kind == VerdictKind::PTime);
    CHECK(dichotomy(SymSig3{1, -1, 1, -1}).holant_identically_zero);

    CHECK(dichotomy(SymSig3{0, 1, 0, 0}).kind == VerdictKind::SharpPHard);
    CHECK(dichotomy(SymSig3{1, 1, -1, 1}).kind == VerdictKind::SharpPHard);
}

TEST_CASE("planar family match") {
    auto m = planar_family_match(SymSig3{1, 0, -1, 2});
    REQUIRE(m);
    CHECK(m->first == Rat(1, 2));
    CHECK(m->second == Rat(-1, 2));
    CHECK(!planar_family_match(SymSig3{1, 1, -1, 1}));
    // scale and flip closure
    auto s = planar_family_match(SymSig3{2, 0, -2, 4});
    REQUIRE(s);
    CHECK(s->first == Rat(1));
    auto fl = planar_family_match(flip(SymSig3{1, 0, -1, 2}));
    REQUIRE(fl);
}

TEST_CASE("certificates replay, including the double-G4 chain") {
    Verdict v = dichotomy(SymSig3{1, 1, -1, 1});
    CHECK(v.cert.concludes_hard);
    CHECK(certificate_check(v.cert));
    // the chain must contain G4 producing [1,1,-1,3] and then [1,1,-5,19]
    bool saw_first = false, saw_second = false;
    for (const auto& s : v.cert.steps) {
        if (s.kind == StepKind::GadgetStep && s.gadget == "G4") {
            if (s.sig_out == SymSig3{1, 1, -1, 3}) saw_first = true;
            if (s.sig_out == SymSig3{1, 1, -5, 19}) saw_second = true;
        }
    }
    CHECK(saw_first);
    CHECK(saw_second);
}

TEST_CASE("tampered certificates fail replay") {
    Verdict v = dichotomy(SymSig3{1, 1, -1, 1});
    Certificate bad = v.cert;
    for (auto& s : bad.steps)
        if (s.kind == StepKind::GadgetStep) {
            s.scalar *= 2;
            break;
        }
    CHECK(!certificate_check(bad));

    Certificate bad2 = v.cert;
    for (auto& s : bad2.steps)
        if (s.kind == StepKind::ConditionCheck) {
            s.cond_value = !s.cond_value;
            break;
        }
    CHECK(!certificate_check(bad2));
}

TEST_CASE("P-time certificate is a single classify step") {
    Verdict v = dichotomy(SymSig3{1, -1, 1, -1});
    CHECK(v.cert.steps.size() == 1);
    CHECK(v.cert.steps[0].kind == StepKind::Classify);
    CHECK(certificate_check(v.cert));
}

TEST_CASE("certificates replay on the flowchart branches") {
    for (SymSig3 f : {
             SymSig3{0, 1, 2, 0},            // 0ab0, a != b
             SymSig3{0, 2, 2, 0},            // 0ab0, a == b (Gaux route)
             SymSig3{0, 0, 5, 0},            // exact-cover branch
             SymSig3{1, 2, 3, 0},            // 1ab0, G1 works
             SymSig3{1, 1, -1, 0},           // 1ab0, G1 fails (k=1 family)
             SymSig3{1, 3, 0, 0},            // [1,a,0,0]
             SymSig3{1, -1, 0, 0},           // [1,a,0,0] with a=-1 detour
             SymSig3{1, 0, 5, 0},            // [1,0,b,0]
             SymSig3{1, 3, 0, 2},            // 1a0c, c generic
             SymSig3{1, 3, 0, 1},            // 1a0c, c=1 (G4 route)
             SymSig3{1, -1, 0, 1},           // 1a0c, a=-1 detour
             SymSig3{1, 0, 3, 5},            // a=0: flip into 1a0c
             SymSig3{1, 2, 3, 5},            // large5, G1 works
             SymSig3{1, 2, 3, 6},            // c = ab chain
             SymSig3{1, 2, 1, 2},            // c = ab, X=1 (b=1, Gaux-easy route)
             SymSig3{1, 2, Rat(-1, 2), -1},  // c = ab, X=Z=0 (G2 route)
             SymSig3{1, -4, 2, -8},          // c = ab, unnormalizable (p1 route)
             SymSig3{1, 5, 5, 1},            // easy family, binary hard
             SymSig3{3, -1, -1, 3},          // easy family, a=-1/3 Hadamard route
             SymSig3{1, 2, -5, 8},           // p3 family member (a=2)
             SymSig3{1, -1, 1, 1},           // R&S point, double-G4
             SymSig3{1, 2, -2, -1},          // R&T&V family point
             SymSig3{1, Rat(1, 2), Rat(-1, 2), -1},  // listed R&S point
         }) {
        Verdict v = dichotomy(f);
        CHECK(v.hard());
        CHECK(v.cert.concludes_hard);
        bool ok = certificate_check(v.cert);
        if (!ok) {
            MESSAGE("certificate failed for " << f.str());
            for (const auto& s : v.cert.steps) MESSAGE("  " << s.str());
        }
        CHECK(ok);
    }
}

TEST_CASE("verdict invariant under flip and positive scaling") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 120; ++t) {
        SymSig3 f{d(rng), d(rng), d(rng), d(rng)};
        Verdict v = dichotomy(f);
        CHECK(dichotomy(flip(f)).hard() == v.hard());
        CHECK(dichotomy(f.scaled(Rat(3, 2))).hard() == v.hard());
    }
}

TEST_CASE("soundness of tractable verdicts on grids") {
    std::mt19937_64 rng(505);
    for (SymSig3 f : {SymSig3{1, 2, 4, 8}, SymSig3{1, 0, 0, 5}, SymSig3{2, 0, 0, -3}}) {
        REQUIRE(dichotomy(f).kind == VerdictKind::PTime);
        for (int t = 0; t < 3; ++t) {
            SignatureGrid g = random_canonical_grid(f, 3, rng);
            CHECK(QuadExt(tractable_eval(g)) == eval_brute(g));
        }
    }
}

TEST_CASE("verify_paper_solutions") {
    SolutionReport rep = verify_paper_solutions();
    for (const auto& i : rep.items)
        if (!i.pass) MESSAGE(i.name << ": " << i.detail);
    CHECK(rep.ok());
    CHECK(rep.items.size() >= 15);
}

TEST_CASE("falsify: smoke runs find nothing undocumented") {
    FalsifyReport f14 = falsify_emptiness(FalsifySystem::F1F4, 3000, 10, 2024);
    CHECK(f14.undocumented_hits() == 0);

    FalsifyReport ggg = falsify_emptiness(FalsifySystem::G1G2G3, 3000, 10, 2024);
    CHECK(ggg.undocumented_hits() == 0);
    CHECK(ggg.rediscovered.size() == 8);  // two families at four sweep points

    FalsifyReport rs = falsify_emptiness(FalsifySystem::RS, 2000, 6, 2024);
    CHECK(rs.undocumented_hits() == 0);
    FalsifyReport rtv = falsify_emptiness(FalsifySystem::RTV, 2000, 6, 2024);
    CHECK(rtv.undocumented_hits() == 0);
    CHECK(rtv.rediscovered.size() == 3);
}

TEST_CASE("falsify: the documented g-system exception is recognized as a hit") {
    // feed the exceptional point directly through the evaluator
    auto g = absorb_factor_rhs(SymSig3{1, 2, 2, 1}, QuadExt(-1));
    CHECK(g[0].is_zero());
    CHECK(g[1].is_zero());
    CHECK(g[2].is_zero());
}

TEST_CASE("exhaustive 5^3 sample of the main criterion") {
    // a fast subset of the acceptance grid: verdict matches the explicit
    // criterion and every hard certificate replays
    std::vector<Rat> vals = {Rat(-1), Rat(-1, 2), Rat(0), Rat(1), Rat(2)};
    for (const Rat& a : vals)
        for (const Rat& b : vals)
            for (const Rat& c : vals) {
                SymSig3 f{1, a, b, c};
                Verdict v = dichotomy(f);
                CHECK(v.hard() == !classify_form(f).tractable());
                if (v.hard()) CHECK(certificate_check(v.cert));
            }
}
