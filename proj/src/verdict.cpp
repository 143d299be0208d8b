#include "abtaxon/verdict.hpp"

namespace abtaxon {

const char* verdict_value_text(VerdictValue v) {
    switch (v) {
        case VerdictValue::Yes: return "Yes";
        case VerdictValue::No: return "No";
        case VerdictValue::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* citation_id(Citation c) {
    switch (c) {
        case Citation::MainThmI: return "MAIN-THM-I";
        case Citation::MainThmII: return "MAIN-THM-II";
        case Citation::Prop1: return "PROP-1";
        case Citation::Cor2: return "COR-2";
        case Citation::Prop3: return "PROP-3";
        case Citation::ThmSuper: return "THM-SUPER";
        case Citation::BassianImpliesGb: return "BASSIAN-IMPLIES-GB";
        case Citation::DkFiniteRank: return "DK-FINITE-RANK";
        case Citation::DkShape: return "DK-SHAPE";
        case Citation::PropDivnear: return "PROP-DIVNEAR";
        case Citation::Thm210: return "THM-210";
        case Citation::Prop28: return "PROP-28";
        case Citation::Cor212: return "COR-212";
        case Citation::ThmChief: return "THM-CHIEF";
        case Citation::ThmDkDecomp: return "THM-DKDECOMP";
        case Citation::RemarkAbsorb: return "REMARK-ABSORB";
        case Citation::BassianHereditary: return "BASSIAN-HEREDITARY";
        case Citation::NgbDerivedTorsion: return "NGB-DERIVED-TORSION";
        case Citation::NgbDerivedTorsionFree: return "NGB-DERIVED-TORSION-FREE";
        case Citation::Problem1: return "PROBLEM-1";
        case Citation::Problem2: return "PROBLEM-2";
        case Citation::Problem3: return "PROBLEM-3";
        case Citation::HereditaryGbOpen: return "HEREDITARY-GB-OPEN";
        case Citation::LemmaBasic: return "LEMMA-BASIC";
    }
    return "UNREGISTERED";
}

const char* citation_summary(Citation c) {
    switch (c) {
        case Citation::MainThmI:
            return "a reduced group is Bassian iff r0 and every rp are finite";
        case Citation::MainThmII:
            return "a non-reduced group is Bassian iff it is Q^n + (reduced Bassian), n finite";
        case Citation::Prop1: return "Bassian coincides with hereditarily Hopfian";
        case Citation::Cor2: return "hereditarily Bassian coincides with Bassian";
        case Citation::Prop3:
            return "nearly Bassian groups are exactly the quasi-cyclic and the Bassian groups";
        case Citation::ThmSuper:
            return "super Bassian iff reduced Bassian (torsion case) / Bassian with property (P)";
        case Citation::BassianImpliesGb:
            return "a Bassian group is generalized Bassian: the forced H = 0 is a summand";
        case Citation::DkFiniteRank:
            return "a generalized Bassian group has finite torsion-free rank";
        case Citation::DkShape:
            return "generalized Bassian forces T_p = (finite p-group) + (elementary p-group)";
        case Citation::PropDivnear: return "quasi-cyclic groups are not generalized Bassian";
        case Citation::Thm210:
            return "a torsion group with every T_p finite + elementary is generalized Bassian";
        case Citation::Prop28:
            return "a torsion-free group of finite rank is generalized Bassian";
        case Citation::Cor212:
            return "reduced splitting mixed with generalized Bassian parts is generalized Bassian";
        case Citation::ThmChief:
            return "a nearly generalized Bassian group is quasi-cyclic or generalized Bassian";
        case Citation::ThmDkDecomp:
            return "a generalized Bassian group splits as elementary + Bassian";
        case Citation::RemarkAbsorb:
            return "every order-p cyclic summand can be absorbed into the elementary part";
        case Citation::BassianHereditary: return "subgroups of Bassian groups are Bassian";
        case Citation::NgbDerivedTorsion:
            return "derived: subgroups of a torsion generalized Bassian group keep the "
                   "finite + elementary shape";
        case Citation::NgbDerivedTorsionFree:
            return "derived: subgroups of finite-rank torsion-free groups have finite rank";
        case Citation::Problem1:
            return "open: structure of hereditarily and super generalized Bassian groups";
        case Citation::Problem2:
            return "open: is elementary + (Bassian without order-p summands) generalized Bassian";
        case Citation::Problem3:
            return "open: is Bassian + generalized Bassian again generalized Bassian";
        case Citation::HereditaryGbOpen:
            return "open: whether subgroups of generalized Bassian groups are generalized Bassian";
        case Citation::LemmaBasic:
            return "A <= B + C with B elementary and A meet pC = 0 forces A elementary";
    }
    return "";
}

}  // namespace abtaxon
