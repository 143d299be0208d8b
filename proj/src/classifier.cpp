#include "abtaxon/classifier.hpp"

#include <algorithm>

#include "abtaxon/errors.hpp"

namespace abtaxon {

namespace {

Verdict yes(Citation c, std::string detail) {
    return Verdict{VerdictValue::Yes, c, std::move(detail)};
}
Verdict no(Citation c, std::string detail) {
    return Verdict{VerdictValue::No, c, std::move(detail)};
}
Verdict unknown(Citation c, std::string detail) {
    return Verdict{VerdictValue::Unknown, c, std::move(detail)};
}

const Term* find_prufer(const GroupExpr& g) {
    for (const Term& t : g.terms())
        if (std::holds_alternative<Prufer>(t.atom)) return &t;
    return nullptr;
}

/// Exactly one Z(p^inf) summand and nothing else.
bool is_quasi_cyclic(const GroupExpr& g) {
    return g.terms().size() == 1 && std::holds_alternative<Prufer>(g.terms()[0].atom) &&
           g.terms()[0].multiplicity == Cardinal::finite(1);
}

std::string primes_text(const QuasiCyclicImages& qc) {
    if (qc.every_prime) return "every prime";
    std::string s = "p in {";
    bool first = true;
    for (std::uint64_t p : qc.primes) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(p);
    }
    return s + "}";
}

}  // namespace

Verdict is_bassian(const GroupExpr& g) {
    const InvariantProfile prof = invariant_profile(g);

    if (const Term* pr = find_prufer(g))
        return no(Citation::MainThmII, "divisible part contains " + atom_text(pr->atom) +
                                           ", not a finite-dimensional Q-vector space");
    if (prof.divisible_rational_rank.is_infinite())
        return no(Citation::MainThmII, "divisible part Q^" + prof.divisible_rational_rank.str() +
                                           " has infinite dimension");
    if (prof.r0.is_infinite())
        return no(Citation::MainThmI, "torsion-free rank r0 = " + prof.r0.str() + " is infinite");
    for (const auto& [p, rp] : prof.rp) {
        if (rp.is_infinite())
            return no(Citation::MainThmI,
                      "p-rank r_" + std::to_string(p) + " = " + rp.str() + " is infinite");
    }
    if (prof.is_reduced)
        return yes(Citation::MainThmI, "reduced with finite r0 and finite p-ranks");
    return yes(Citation::MainThmII, "Q^" + prof.divisible_rational_rank.str() +
                                        " plus a reduced group with all ranks finite");
}

Verdict is_hereditarily_bassian(const GroupExpr& g) {
    Verdict b = is_bassian(g);
    b.citation = Citation::Cor2;
    b.detail = (b.yes() ? "Bassian, hence hereditarily Bassian: " : "not Bassian: ") + b.detail;
    return b;
}

Verdict is_hereditarily_hopfian(const GroupExpr& g) {
    Verdict b = is_bassian(g);
    b.citation = Citation::Prop1;
    b.detail = (b.yes() ? "Bassian, which coincides with hereditarily Hopfian: "
                        : "not Bassian, hence not hereditarily Hopfian: ") +
               b.detail;
    return b;
}

Verdict is_nearly_bassian(const GroupExpr& g) {
    if (is_quasi_cyclic(g))
        return yes(Citation::Prop3, "quasi-cyclic: every proper subgroup is finite cyclic");
    Verdict b = is_bassian(g);
    if (b.yes()) return yes(Citation::Prop3, "Bassian, and subgroups of Bassian groups are Bassian");
    return no(Citation::Prop3, "neither quasi-cyclic nor Bassian: " + b.detail);
}

Verdict is_super_bassian(const GroupExpr& g) {
    const InvariantProfile prof = invariant_profile(g);
    const Verdict b = is_bassian(g);

    if (prof.is_torsion) {
        if (b.yes() && prof.is_reduced)
            return yes(Citation::ThmSuper,
                       "reduced torsion Bassian: every image keeps finite primary components");
        if (!b.yes()) return no(Citation::ThmSuper, "not Bassian: " + b.detail);
        return no(Citation::ThmSuper, "torsion but not reduced: a quasi-cyclic image exists");
    }
    if (b.yes() && prof.property_p)
        return yes(Citation::ThmSuper, "Bassian with property (P)");
    if (!b.yes()) return no(Citation::ThmSuper, "not Bassian: " + b.detail);
    return no(Citation::ThmSuper, "property (P) fails: quasi-cyclic image at " +
                                      primes_text(prof.quasi_cyclic_images));
}

Verdict is_generalized_bassian(const GroupExpr& g) {
    // R1: Bassian groups are generalized Bassian.
    const Verdict b = is_bassian(g);
    if (b.yes())
        return yes(Citation::BassianImpliesGb, "Bassian; the only admissible H is 0 (rule R1)");

    const InvariantProfile prof = invariant_profile(g);

    // R2: finite torsion-free rank is necessary.
    if (prof.r0.is_infinite())
        return no(Citation::DkFiniteRank,
                  "torsion-free rank r0 = " + prof.r0.str() + " is infinite (rule R2)");

    // R3: no quasi-cyclic summand survives summand closure.
    if (const Term* pr = find_prufer(g))
        return no(Citation::PropDivnear,
                  "quasi-cyclic summand " + atom_text(pr->atom) + " present (rule R3)");

    // R4: every primary component must be (finite p-group) + (elementary p-group).
    for (const auto& [p, ok] : prof.p_shape_elem_plus_finite) {
        if (!ok)
            return no(Citation::DkShape, "T_" + std::to_string(p) +
                                             " is not (finite + elementary) (rule R4)");
    }

    // R5: torsion groups with the R4 shape.
    if (prof.is_torsion)
        return yes(Citation::Thm210,
                   "torsion with every T_p of the form finite + elementary (rule R5)");

    // R6: torsion-free of finite rank.
    if (prof.is_torsion_free)
        return yes(Citation::Prop28, "torsion-free of finite rank (rule R6)");

    // R7: reduced splitting mixed with generalized Bassian parts.
    if (prof.is_reduced) {
        const Verdict tors = is_generalized_bassian(torsion_subgroup(g));
        const Verdict tf = is_generalized_bassian(quotient_mod_torsion(g));
        if (tors.yes() && tf.yes())
            return yes(Citation::Cor212,
                       "reduced splitting mixed; both parts generalized Bassian (rule R7)");
    }

    // R8: non-reduced mixed sums of this shape are open territory.
    return unknown(Citation::Problem2,
                   "no complete characterization is known for this shape; whether elementary + "
                   "Bassian sums (and Bassian + generalized Bassian sums) are generalized "
                   "Bassian is open (rule R8)");
}

Verdict is_nearly_generalized_bassian(const GroupExpr& g, const ClassifyOptions& opts) {
    // N1: quasi-cyclic groups have only finite proper subgroups.
    if (is_quasi_cyclic(g))
        return yes(Citation::ThmChief,
                   "quasi-cyclic: every proper subgroup is finite, hence generalized Bassian "
                   "(rule N1)");

    // N2: Bassian groups are hereditarily Bassian.
    if (is_bassian(g).yes())
        return yes(Citation::BassianHereditary,
                   "Bassian; every subgroup is Bassian, hence generalized Bassian (rule N2)");

    // N3: contrapositive of the dichotomy.
    const Verdict gb = is_generalized_bassian(g);
    if (gb.no())
        return no(Citation::ThmChief,
                  "not quasi-cyclic and not generalized Bassian, so some proper subgroup "
                  "already fails (rule N3): " + gb.detail);

    const InvariantProfile prof = invariant_profile(g);

    if (!opts.strict_paper) {
        // N4 (derived): subgroups of a torsion group whose primary components
        // are finite + elementary keep that shape.
        if (gb.yes() && prof.is_torsion)
            return yes(Citation::NgbDerivedTorsion,
                       "torsion generalized Bassian; subgroups keep the finite + elementary "
                       "primary shape (derived rule N4)");
        // N5 (derived): subgroups of finite-rank torsion-free groups.
        if (gb.yes() && prof.is_torsion_free)
            return yes(Citation::NgbDerivedTorsionFree,
                       "torsion-free of finite rank; so is every subgroup (derived rule N5)");
    }

    return unknown(Citation::HereditaryGbOpen,
                   "whether subgroups of generalized Bassian groups are generalized Bassian "
                   "is not settled (rule N6)");
}

Decomposition extract_elementary_plus_bassian(const GroupExpr& g) {
    const InvariantProfile prof = invariant_profile(g);
    if (prof.r0.is_infinite())
        throw PreconditionError("torsion-free rank r0 = " + prof.r0.str() + " is infinite");
    if (const Term* pr = find_prufer(g))
        throw PreconditionError("quasi-cyclic summand " + atom_text(pr->atom) + " present");
    for (const auto& [p, ok] : prof.p_shape_elem_plus_finite)
        if (!ok)
            throw PreconditionError("T_" + std::to_string(p) + " not elementary + finite");

    // Absorb the entire order-p multiplicity into E, every prime; the
    // remainder keeps finite p-ranks and finite r0, so it is Bassian.
    std::vector<Term> elementary, rest;
    for (const Term& t : g.terms()) {
        const auto* c = std::get_if<Cyclic>(&t.atom);
        if (c && c->k == 1)
            elementary.push_back(t);
        else
            rest.push_back(t);
    }
    return Decomposition{normalize(std::move(elementary)), normalize(std::move(rest))};
}

ClassificationReport explain(const GroupExpr& g, const ClassifyOptions& opts) {
    ClassificationReport r;
    r.input = g;
    r.profile = invariant_profile(g);
    r.bassian = is_bassian(g);
    r.hereditarily_bassian = is_hereditarily_bassian(g);
    r.hereditarily_hopfian = is_hereditarily_hopfian(g);
    r.nearly_bassian = is_nearly_bassian(g);
    r.super_bassian = is_super_bassian(g);
    r.generalized_bassian = is_generalized_bassian(g);
    r.nearly_generalized_bassian = is_nearly_generalized_bassian(g, opts);
    r.strict_paper = opts.strict_paper;
    return r;
}

}  // namespace abtaxon
