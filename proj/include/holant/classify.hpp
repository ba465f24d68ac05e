#pragma once

#include "holant/conditions.hpp"
#include "holant/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holant {

// --- certificates --------------------------------------------------------------

// A certificate is an ordered list of replayable steps tracing the proof
// flowchart: gadget evaluations replay through the gadget engine, condition
// checks through eval_condition, binary verdicts through binary_tractable,
// and classification steps through classify_form.  Lemma citations carry no
// replay obligation.
enum class StepKind { Flip, Normalize, GadgetStep, ConditionCheck, BinaryVerdict, LemmaCite,
                      Classify };

struct CertStep {
    StepKind kind;

    SymSig3 sig_in, sig_out;  // Flip / Normalize / ternary-output gadgets / Classify
    Rat scalar = Rat(1);      // Normalize: sig_in = scalar * sig_out
                              // GadgetStep: raw result = scalar * recorded output
    std::string gadget;       // G4, Gaux, holoH, connect-rhs, pair-to-eq, nonlin
    std::optional<Unary> aux;
    std::optional<SymSig2> out_binary;
    std::optional<Unary> out_unary;

    CondSystem cond_sys = CondSystem::C1EQ;
    int cond_sub = 0;
    Point3 point{Rat(0), Rat(0), Rat(0)};
    bool cond_value = false;

    SymSig2 binary{QuadExt(0), QuadExt(0), QuadExt(0)};
    BinaryCase binary_case = BinaryCase::Hard;

    std::string lemma;

    SigClassKind class_kind = SigClassKind::NotTractableForm;

    std::string str() const;
};

struct Certificate {
    std::vector<CertStep> steps;
    bool concludes_hard = false;
};

// Replays every step; true iff every replay reproduces the recorded data.
bool certificate_check(const Certificate& cert);

// --- the dichotomy -------------------------------------------------------------

enum class VerdictKind { PTime, SharpPHard, SharpPHardPlanarPTime };

struct Verdict {
    VerdictKind kind = VerdictKind::PTime;
    SigClass reason;                             // populated for P-time verdicts
    bool holant_identically_zero = false;        // zero signature or [t,-t] cube
    std::optional<std::pair<Rat, Rat>> planar_ab;  // the family parameters
    Certificate cert;

    bool hard() const { return kind != VerdictKind::PTime; }
    std::string str() const;
};

// P-time iff the signature is degenerate, Gen-Eq, or affine; otherwise
// #P-hard, with the planar flag when f = [3a+b, -a-b, -a+b, 3a-b], a != 0.
// The certificate walks the proof flowchart; its conclusion is asserted to
// agree with the explicit criterion.
Verdict dichotomy(const SymSig3& f);

// f matches [3a+b, -a-b, -a+b, 3a-b]; returns (a, b) when it does.
std::optional<std::pair<Rat, Rat>> planar_family_match(const SymSig3& f);

// The gadget "works": its straddled matrix is nonsingular and the eigenvalue
// ratio is not a root of unity.  The failing condition names the degeneracy
// (sub 0) or the matched root-of-unity line of (c1eq) / (c3eq).
struct WorksResult {
    bool works = false;
    std::optional<std::pair<CondSystem, int>> failing;
};
WorksResult g_works(int which /* 1, 2, or 3 */, const SymSig3& f);

}  // namespace holant
