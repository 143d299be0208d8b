#pragma once

#include "abtaxon/group_expr.hpp"
#include "abtaxon/invariants.hpp"
#include "abtaxon/verdict.hpp"

namespace abtaxon {

struct ClassifyOptions {
    /// Restrict the nearly-generalized-Bassian cascade to rules N1-N3 + N6,
    /// disabling the derived sufficiency rules N4/N5.
    bool strict_paper = false;
};

/// Bassian: every injection G -> G/H forces H = 0.  Decidable from the
/// invariants: no quasi-cyclic summand, finite r0, every rp finite.
/// Never Unknown.
Verdict is_bassian(const GroupExpr& g);

/// Coincides with is_bassian as a function; cites COR-2.
Verdict is_hereditarily_bassian(const GroupExpr& g);

/// Coincides with is_bassian as a function; cites PROP-1.
Verdict is_hereditarily_hopfian(const GroupExpr& g);

/// Every proper subgroup Bassian: exactly the quasi-cyclic groups and the
/// Bassian groups.  Never Unknown.
Verdict is_nearly_bassian(const GroupExpr& g);

/// Every epimorphic image Bassian: reduced Bassian for torsion groups,
/// Bassian with property (P) otherwise.  Never Unknown.
Verdict is_super_bassian(const GroupExpr& g);

/// Generalized Bassian: every injection G -> G/H forces H to be a direct
/// summand.  Rule cascade R1-R8; no complete characterization is known, so
/// non-reduced splitting mixed non-Bassian groups come back Unknown citing
/// the open problem.
Verdict is_generalized_bassian(const GroupExpr& g);

/// Every proper subgroup generalized Bassian.  Rules N1-N6; N4/N5 are
/// derived sufficiency rules that opts.strict_paper disables.
Verdict is_nearly_generalized_bassian(const GroupExpr& g, const ClassifyOptions& opts = {});

struct Decomposition {
    GroupExpr elementary;  // E: all order-p cyclic summands, every prime
    GroupExpr bassian;     // H: the remainder; Bassian, no order-p cyclic terms
};

/// Split g = E + H with E elementary and H Bassian, absorbing the entire
/// order-p multiplicity into E for every prime.  Requires the necessary
/// generalized-Bassian conditions (finite r0, no quasi-cyclic summand, every
/// T_p finite + elementary); throws PreconditionError naming the first
/// failed condition otherwise.
Decomposition extract_elementary_plus_bassian(const GroupExpr& g);

/// Every predicate's verdict plus the invariant profile, in a fixed order.
struct ClassificationReport {
    GroupExpr input;
    InvariantProfile profile;
    Verdict bassian;
    Verdict hereditarily_bassian;
    Verdict hereditarily_hopfian;
    Verdict nearly_bassian;
    Verdict super_bassian;
    Verdict generalized_bassian;
    Verdict nearly_generalized_bassian;
    bool strict_paper = false;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport explain(const GroupExpr& g, const ClassifyOptions& opts = {});

}  // namespace abtaxon
