#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace abtaxon {

// The six atom kinds a group expression is built from.  The variant order
// below is the canonical sort order of terms inside an expression.

/// The infinite cyclic group Z.
struct FreeZ {
    friend constexpr auto operator<=>(const FreeZ&, const FreeZ&) = default;
};

/// The additive rationals Q.
struct Rational {
    friend constexpr auto operator<=>(const Rational&, const Rational&) = default;
};

/// Cyclic group of order p^k, k >= 1.
struct Cyclic {
    std::uint64_t p = 2;
    std::uint32_t k = 1;
    friend constexpr auto operator<=>(const Cyclic&, const Cyclic&) = default;
};

/// Quasi-cyclic (Pruefer) group Z(p^inf).
struct Prufer {
    std::uint64_t p = 2;
    friend constexpr auto operator<=>(const Prufer&, const Prufer&) = default;
};

/// The unbounded direct sum of cyclics B(p) = Z(p) + Z(p^2) + Z(p^3) + ...,
/// exactly one summand per exponent.  Reduced, unbounded, p-rank aleph_0.
struct UnboundedDsc {
    std::uint64_t p = 2;
    friend constexpr auto operator<=>(const UnboundedDsc&, const UnboundedDsc&) = default;
};

/// A reduced torsion-free group of finite rank whose localization at p is a
/// non-free Z_(p)-module exactly for the primes in non_free_primes.  That set
/// is also the set of primes q with an epimorphism onto Z(q^inf).
struct TorsionFreeFiniteRank {
    std::uint32_t rank = 1;
    std::vector<std::uint64_t> non_free_primes;  // sorted, deduplicated
    friend auto operator<=>(const TorsionFreeFiniteRank&, const TorsionFreeFiniteRank&) = default;
};

using Atom = std::variant<FreeZ, Rational, Cyclic, Prufer, UnboundedDsc, TorsionFreeFiniteRank>;

/// True for Cyclic, Prufer, UnboundedDsc.
bool is_torsion_atom(const Atom& a);
/// True for Rational and Prufer (the divisible atoms).
bool is_divisible_atom(const Atom& a);
/// Torsion-free rank of one copy of the atom (0 for torsion atoms).
std::uint64_t atom_torsion_free_rank(const Atom& a);
/// The prime attached to a torsion atom, or 0 for torsion-free atoms.
std::uint64_t atom_prime(const Atom& a);

/// Canonical DSL spelling: "Z", "Q", "Z(2^3)", "Z(5^inf)", "B(7)", "TF(2;3,5)".
std::string atom_text(const Atom& a);

/// Throws ValidationError naming the atom if a prime slot is not prime, a
/// Cyclic exponent is 0, or a TorsionFreeFiniteRank rank is 0.
void validate_atom(const Atom& a);

}  // namespace abtaxon
