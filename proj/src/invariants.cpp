#include "abtaxon/invariants.hpp"

#include "abtaxon/errors.hpp"
#include "abtaxon/primality.hpp"

namespace abtaxon {

namespace {

void require_prime_arg(std::uint64_t p) {
    if (!is_prime(p))
        throw ValidationError(std::to_string(p) + " is not prime (" + factorization_text(p) + ")");
}

}  // namespace

Cardinal torsion_free_rank(const GroupExpr& g) {
    Cardinal r = Cardinal::finite(0);
    for (const Term& t : g.terms()) r += t.multiplicity.scaled_by(atom_torsion_free_rank(t.atom));
    return r;
}

Cardinal p_rank(const GroupExpr& g, std::uint64_t p) {
    require_prime_arg(p);
    Cardinal r = Cardinal::finite(0);
    for (const Term& t : g.terms()) {
        if (atom_prime(t.atom) != p) continue;
        if (std::holds_alternative<UnboundedDsc>(t.atom))
            r += Cardinal::aleph(0);  // one socle dimension per exponent
        else
            r += t.multiplicity;
    }
    return r;
}

GroupExpr primary_component(const GroupExpr& g, std::uint64_t p) {
    require_prime_arg(p);
    std::vector<Term> kept;
    for (const Term& t : g.terms())
        if (is_torsion_atom(t.atom) && atom_prime(t.atom) == p) kept.push_back(t);
    return normalize(std::move(kept));
}

bool p_shape_elementary_plus_finite(const GroupExpr& g, std::uint64_t p) {
    for (const Term& t : g.terms()) {
        if (atom_prime(t.atom) != p) continue;
        if (std::holds_alternative<Prufer>(t.atom) || std::holds_alternative<UnboundedDsc>(t.atom))
            return false;
        const auto& c = std::get<Cyclic>(t.atom);
        if (c.k >= 2 && t.multiplicity.is_infinite()) return false;
    }
    return true;
}

std::set<std::uint64_t> occurring_primes(const GroupExpr& g) {
    std::set<std::uint64_t> ps;
    for (const Term& t : g.terms()) {
        if (std::uint64_t p = atom_prime(t.atom); p != 0) ps.insert(p);
        if (const auto* tf = std::get_if<TorsionFreeFiniteRank>(&t.atom))
            ps.insert(tf->non_free_primes.begin(), tf->non_free_primes.end());
    }
    return ps;
}

QuasiCyclicImages quasi_cyclic_image_primes(const GroupExpr& g) {
    QuasiCyclicImages out;
    for (const Term& t : g.terms()) {
        if (std::holds_alternative<Rational>(t.atom)) {
            // Q surjects onto Z(p^inf) for every prime.
            out.every_prime = true;
        } else if (const auto* q = std::get_if<Prufer>(&t.atom)) {
            out.primes.insert(q->p);
        } else if (const auto* b = std::get_if<UnboundedDsc>(&t.atom)) {
            out.primes.insert(b->p);
        } else if (const auto* tf = std::get_if<TorsionFreeFiniteRank>(&t.atom)) {
            out.primes.insert(tf->non_free_primes.begin(), tf->non_free_primes.end());
        }
        // FreeZ and Cyclic contribute nothing: their images are finitely
        // generated resp. bounded, quasi-cyclic groups are neither.
    }
    if (out.every_prime) {
        auto all = occurring_primes(g);
        out.primes.insert(all.begin(), all.end());
    }
    return out;
}

bool has_property_p(const GroupExpr& g) { return quasi_cyclic_image_primes(g).none(); }

bool is_elementary_expr(const GroupExpr& g) {
    for (const Term& t : g.terms()) {
        const auto* c = std::get_if<Cyclic>(&t.atom);
        if (!c || c->k != 1) return false;
    }
    return true;
}

InvariantProfile invariant_profile(const GroupExpr& g) {
    InvariantProfile prof;
    prof.r0 = torsion_free_rank(g);

    bool any_torsion_free_atom = false;
    bool any_torsion_atom = false;
    prof.divisible_rational_rank = Cardinal::finite(0);
    std::set<std::uint64_t> torsion_primes;

    for (const Term& t : g.terms()) {
        if (is_torsion_atom(t.atom))
            any_torsion_atom = true;
        else
            any_torsion_free_atom = true;
        if (std::holds_alternative<Rational>(t.atom))
            prof.divisible_rational_rank += t.multiplicity;
        if (const auto* q = std::get_if<Prufer>(&t.atom)) {
            auto [it, inserted] = prof.prufer_ranks.emplace(q->p, t.multiplicity);
            if (!inserted) it->second += t.multiplicity;
        }
        if (std::uint64_t p = atom_prime(t.atom); p != 0) torsion_primes.insert(p);
    }

    for (std::uint64_t p : torsion_primes) {
        prof.rp.emplace(p, p_rank(g, p));
        bool bounded = true;
        for (const Term& t : g.terms()) {
            if (atom_prime(t.atom) != p) continue;
            if (std::holds_alternative<Prufer>(t.atom) ||
                std::holds_alternative<UnboundedDsc>(t.atom))
                bounded = false;
        }
        prof.bounded_at.emplace(p, bounded);
        prof.p_shape_elem_plus_finite.emplace(p, p_shape_elementary_plus_finite(g, p));
    }

    prof.is_torsion = !any_torsion_free_atom;
    prof.is_torsion_free = !any_torsion_atom;
    prof.is_reduced = divisible_part(g).is_zero();
    prof.is_elementary = prof.is_torsion && is_elementary_expr(g);
    prof.quasi_cyclic_images = quasi_cyclic_image_primes(g);
    prof.property_p = prof.quasi_cyclic_images.none();
    return prof;
}

}  // namespace abtaxon
