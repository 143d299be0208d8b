#include "abtaxon/group_expr.hpp"

#include <algorithm>

namespace abtaxon {

GroupExpr normalize(std::vector<Term> raw) {
    for (const Term& t : raw) validate_atom(t.atom);
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.atom < b.atom; });

    GroupExpr out;
    for (Term& t : raw) {
        if (t.multiplicity.is_zero()) continue;
        if (!out.terms_.empty() && out.terms_.back().atom == t.atom)
            out.terms_.back().multiplicity += t.multiplicity;
        else
            out.terms_.push_back(std::move(t));
    }
    return out;
}

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b) {
    std::vector<Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return normalize(std::move(all));
}

namespace {

template <typename Pred>
GroupExpr filter_terms(const GroupExpr& g, Pred keep) {
    std::vector<Term> kept;
    for (const Term& t : g.terms())
        if (keep(t.atom)) kept.push_back(t);
    return normalize(std::move(kept));
}

}  // namespace

GroupExpr torsion_subgroup(const GroupExpr& g) {
    return filter_terms(g, [](const Atom& a) { return is_torsion_atom(a); });
}

GroupExpr divisible_part(const GroupExpr& g) {
    return filter_terms(g, [](const Atom& a) { return is_divisible_atom(a); });
}

GroupExpr reduced_part(const GroupExpr& g) {
    return filter_terms(g, [](const Atom& a) { return !is_divisible_atom(a); });
}

GroupExpr quotient_mod_torsion(const GroupExpr& g) {
    return filter_terms(g, [](const Atom& a) { return !is_torsion_atom(a); });
}

}  // namespace abtaxon
