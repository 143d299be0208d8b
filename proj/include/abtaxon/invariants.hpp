#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "abtaxon/cardinal.hpp"
#include "abtaxon/group_expr.hpp"

namespace abtaxon {

/// The primes p such that some Z(p^inf) is an epimorphic image of the
/// group.  A Rational summand surjects onto Z(p^inf) for every prime, which
/// the finite `primes` set cannot carry; `every_prime` is that marker.
struct QuasiCyclicImages {
    bool every_prime = false;
    std::set<std::uint64_t> primes;

    /// Property (P): no quasi-cyclic epimorphic image at all.
    bool none() const { return !every_prime && primes.empty(); }

    friend bool operator==(const QuasiCyclicImages&, const QuasiCyclicImages&) = default;
};

/// Everything the classification rules consume, computed in one pass.
/// Per-prime maps contain exactly the primes occurring in the expression;
/// absence means rank 0 / trivially true shape.
struct InvariantProfile {
    Cardinal r0;                                 // torsion-free rank
    std::map<std::uint64_t, Cardinal> rp;        // p-rank (socle dimension) per prime
    Cardinal divisible_rational_rank;            // multiplicity of Q
    std::map<std::uint64_t, Cardinal> prufer_ranks;
    bool is_torsion = false;
    bool is_torsion_free = false;
    bool is_reduced = false;
    bool is_elementary = false;
    std::map<std::uint64_t, bool> bounded_at;    // is T_p bounded?
    std::map<std::uint64_t, bool> p_shape_elem_plus_finite;
    bool property_p = false;
    QuasiCyclicImages quasi_cyclic_images;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

/// r0(G): sum over terms of per-atom rank times multiplicity.
Cardinal torsion_free_rank(const GroupExpr& g);

/// rp(G): socle dimension at p.  Cyclic(p,*) and Prufer(p) contribute their
/// multiplicity, B(p) contributes aleph_0.  Throws ValidationError for
/// non-prime p.
Cardinal p_rank(const GroupExpr& g, std::uint64_t p);

/// T_p(G): the torsion terms at prime p.  Throws for non-prime p.
GroupExpr primary_component(const GroupExpr& g, std::uint64_t p);

/// Whether T_p has the form F_p + E_p with F_p a finite p-group and E_p
/// elementary: no Prufer(p) or B(p) term and finite multiplicity on every
/// Cyclic(p,k) with k >= 2 (order-p cyclics may have any multiplicity).
bool p_shape_elementary_plus_finite(const GroupExpr& g, std::uint64_t p);

/// Per-atom union of quasi-cyclic image primes; see QuasiCyclicImages.
QuasiCyclicImages quasi_cyclic_image_primes(const GroupExpr& g);

/// Property (P): no quasi-cyclic group is an epimorphic image of g.
bool has_property_p(const GroupExpr& g);

/// Every term is Cyclic(p,1) for some prime p (true for the zero group).
bool is_elementary_expr(const GroupExpr& g);

/// All primes appearing anywhere in the expression (torsion atoms and
/// TorsionFreeFiniteRank non-free sets).
std::set<std::uint64_t> occurring_primes(const GroupExpr& g);

InvariantProfile invariant_profile(const GroupExpr& g);

}  // namespace abtaxon
