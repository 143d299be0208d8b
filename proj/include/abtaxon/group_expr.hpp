#pragma once

#include <compare>
#include <vector>

#include "abtaxon/atom.hpp"
#include "abtaxon/cardinal.hpp"

namespace abtaxon {

/// One summand: multiplicity-many copies of an atom.
struct Term {
    Atom atom;
    Cardinal multiplicity;
    friend auto operator<=>(const Term&, const Term&) = default;
};

/// A normalized formal direct sum of atoms with cardinal multiplicities.
/// Invariants: no zero multiplicities, no duplicate atoms, terms sorted in
/// the canonical atom order.  Equal groups (in this model) have identical
/// representations, so operator== is semantic equality.  The empty term list
/// is the zero group.  Values are immutable after construction.
class GroupExpr {
public:
    GroupExpr() = default;  // zero group

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

private:
    friend GroupExpr normalize(std::vector<Term> raw);
    std::vector<Term> terms_;
};

/// Canonicalize a raw term list: validate atoms, merge duplicates by
/// cardinal addition, drop zero multiplicities, sort.  Idempotent.
/// Throws ValidationError for malformed atoms.
GroupExpr normalize(std::vector<Term> raw);

/// Multiset union followed by normalization.  Commutative, associative,
/// zero group as identity.
GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);

/// T(G): the torsion terms (Cyclic, Prufer, UnboundedDsc).  In this model
/// the torsion subgroup is always a direct summand.
GroupExpr torsion_subgroup(const GroupExpr& g);

/// d(G): the Rational and Prufer terms.
GroupExpr divisible_part(const GroupExpr& g);

/// Complement of divisible_part; divisible_part(g) + reduced_part(g) == g.
GroupExpr reduced_part(const GroupExpr& g);

/// G/T(G).  Valid in this splitting model: the torsion-free terms.
GroupExpr quotient_mod_torsion(const GroupExpr& g);

}  // namespace abtaxon
