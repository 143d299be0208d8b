#pragma once

#include <string>

namespace abtaxon {

enum class VerdictValue { Yes, No, Unknown };

const char* verdict_value_text(VerdictValue v);

/// Registered rule identifiers.  These are part of the stable public output
/// vocabulary: every verdict cites exactly one of them, machine output
/// carries the string form, and the strings never change between versions.
enum class Citation {
    MainThmI,              // reduced groups: Bassian iff r0 and every rp finite
    MainThmII,             // non-reduced groups: Bassian iff Q^n + reduced Bassian
    Prop1,                 // Bassian == hereditarily Hopfian
    Cor2,                  // hereditarily Bassian == Bassian
    Prop3,                 // nearly Bassian: quasi-cyclic or Bassian
    ThmSuper,              // super Bassian characterization
    BassianImpliesGb,      // Bassian groups are generalized Bassian (H = 0 is a summand)
    DkFiniteRank,          // generalized Bassian forces finite torsion-free rank
    DkShape,               // generalized Bassian forces T_p = finite + elementary
    PropDivnear,           // quasi-cyclic groups are not generalized Bassian
    Thm210,                // torsion groups with every T_p finite + elementary are GB
    Prop28,                // torsion-free groups of finite rank are GB
    Cor212,                // reduced splitting mixed with GB parts is GB
    ThmChief,              // nearly GB: quasi-cyclic or generalized Bassian
    ThmDkDecomp,           // generalized Bassian splits as elementary + Bassian
    RemarkAbsorb,          // all order-p cyclic summands can be moved into E
    BassianHereditary,     // subgroups of Bassian groups are Bassian
    NgbDerivedTorsion,     // derived rule N4: torsion GB groups are nearly GB
    NgbDerivedTorsionFree, // derived rule N5: torsion-free GB groups are nearly GB
    Problem1,              // open: hereditarily / super generalized Bassian structure
    Problem2,              // open: elementary + Bassian without order-p summands
    Problem3,              // open: Bassian + generalized Bassian sums
    HereditaryGbOpen,      // open: subgroups of generalized Bassian groups
    LemmaBasic,            // A <= B + C, B elementary, A meets pC trivially => A elementary
};

/// Stable string id, e.g. "MAIN-THM-I", "THM-CHIEF", "PROBLEM-2".
const char* citation_id(Citation c);

/// One-line description for the documented registry listing.
const char* citation_summary(Citation c);

/// Tri-valued classification result with the rule that decided it.
/// Deterministic: equal inputs produce equal verdicts including citation.
struct Verdict {
    VerdictValue value = VerdictValue::Unknown;
    Citation citation = Citation::Problem1;
    std::string detail;

    bool yes() const { return value == VerdictValue::Yes; }
    bool no() const { return value == VerdictValue::No; }
    bool unknown() const { return value == VerdictValue::Unknown; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace abtaxon
