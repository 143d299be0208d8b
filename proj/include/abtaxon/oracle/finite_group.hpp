#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abtaxon/oracle/integer_matrix.hpp"

namespace abtaxon::oracle {

inline constexpr std::uint64_t kDefaultOrderBudget = 512;
inline constexpr std::uint64_t kTableOrderLimit = 4096;  // dense add-table ceiling
inline constexpr std::uint64_t kDefaultHomBudget = 1u << 20;
inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

/// A finite abelian group in elementary-divisor form: a multiset of prime
/// powers p^k, stored sorted.  The empty multiset is the zero group.
struct FiniteAbelianGroup {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> elementary_divisors;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::pair<std::uint64_t, std::uint32_t>> divisors);

    std::uint64_t order() const;
    /// The cyclic factor orders p^k, one per divisor, in storage order.
    std::vector<std::uint64_t> cyclic_orders() const;
    /// The p-primary part.
    FiniteAbelianGroup primary_part(std::uint64_t p) const;
    /// Exponent partition at p, descending (empty if p does not occur).
    std::vector<std::uint32_t> exponent_partition(std::uint64_t p) const;

    static FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);
    /// From Smith invariant factors: drops units, splits into prime powers.
    static FiniteAbelianGroup from_invariant_factors(const std::vector<Int>& factors);

    std::string str() const;  // "Z/4 + Z/2", "0"

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
    friend auto operator<=>(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Dense arithmetic for one group instance: elements are indices in
/// [0, order) under the mixed-radix encoding of coordinate vectors.
/// Construction is refused above the order budget.
class GroupTable {
public:
    explicit GroupTable(FiniteAbelianGroup g, std::uint64_t budget = kDefaultOrderBudget);

    const FiniteAbelianGroup& group() const { return group_; }
    std::uint32_t order() const { return order_; }
    std::size_t coords() const { return radices_.size(); }
    std::uint64_t radix(std::size_t i) const { return radices_[i]; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * order_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t scalar_mul(std::uint32_t e, std::uint64_t n) const;
    std::uint64_t element_order(std::uint32_t e) const;

    std::vector<std::uint32_t> decode(std::uint32_t e) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& coords) const;

private:
    FiniteAbelianGroup group_;
    std::vector<std::uint64_t> radices_;
    std::uint32_t order_ = 1;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
};

/// A subgroup reported by enumerate_subgroups: a generating set (coordinate
/// vectors relative to the parent group) plus the subgroup order.
struct Subgroup {
    std::vector<std::vector<std::uint32_t>> generators;
    std::uint64_t order = 1;
};

/// All subgroups, exhaustively, deduplicated by element set, in a
/// deterministic order (by order, then by sorted element list).  Includes
/// the trivial and improper subgroups.  Throws ResourceError when
/// order(g) > budget.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::uint64_t budget = kDefaultOrderBudget);

/// Isomorphism type of g / <h_gens>.  Generators are coordinate vectors
/// relative to cyclic_orders() (reduced mod the divisor profile); the
/// quotient is read off the Smith normal form of the stacked relation
/// presentation [diag | gens].
FiniteAbelianGroup quotient(const FiniteAbelianGroup& g,
                            const std::vector<std::vector<std::uint64_t>>& h_gens);

/// |Hom(a, b)| by the gcd formula: product over cyclic factor pairs of
/// gcd of the factor orders.  Exact.
Int count_homs(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

/// Streams every homomorphism a -> b, as images of a's cyclic generators.
/// Admissible images are found by scanning b for elements annihilated by
/// each factor order, independently of the gcd formula.
class HomEnumerator {
public:
    HomEnumerator(const GroupTable& a, const GroupTable& b);

    /// Total number of maps the stream will yield (product of admissible
    /// image counts), computed without iterating.
    Int total() const;

    /// Fills gen_images with the next map; false when exhausted.
    bool next(std::vector<std::uint32_t>& gen_images);

    /// Image of element x under the map given by gen_images.
    static std::uint32_t apply(const GroupTable& a, const GroupTable& b,
                               const std::vector<std::uint32_t>& gen_images, std::uint32_t x);

private:
    const GroupTable* a_;
    const GroupTable* b_;
    std::vector<std::vector<std::uint32_t>> admissible_;
    std::vector<std::size_t> state_;
    bool done_ = false;
    bool started_ = false;
};

/// Literal injection test: enumerate homomorphisms and test each kernel by
/// evaluating on every element of a.  Early-exits on the first injection.
/// Throws ResourceError when |Hom(a,b)| exceeds max_homs.
bool exists_injection(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                      std::uint64_t max_homs = kDefaultHomBudget);

/// Exact backtracking search for an injection, equivalent to the literal
/// enumeration but feasible on much larger instances.  Works prime by prime;
/// a homomorphism of p-groups is injective iff it is injective on the socle,
/// so the search walks generator images and keeps the socle images linearly
/// independent.  Throws ResourceError past node_budget.
bool injection_exists_search(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b,
                             std::uint64_t node_budget = kDefaultNodeBudget);

/// Conjectured structural criterion: per prime, pointwise dominance of the
/// conjugate exponent partitions, i.e. sum_i min(k_i, j) compared for every
/// j.  Validated against the search exhaustively before being trusted; the
/// symbolic layer never depends on it.
bool embedding_criterion(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

struct BassianCheckStats {
    std::uint64_t subgroups = 0;
    std::uint64_t literal_crosschecks = 0;
};

/// The finite shadow of the Bassian definition: for every subgroup H of g,
/// an injection g -> g/H exists iff H is trivial.  Injection existence is
/// decided by injection_exists_search, cross-checked against
/// embedding_criterion on every pair and against the literal enumeration
/// whenever |Hom| <= hom_crosscheck_budget.  True iff no counterexample.
bool oracle_bassian_check(const FiniteAbelianGroup& g,
                          std::uint64_t order_budget = kDefaultOrderBudget,
                          std::uint64_t hom_crosscheck_budget = 4096,
                          BassianCheckStats* stats = nullptr);

/// Checks the elementary-intersection lemma on G = B + C: every subgroup A
/// with A meet pC = 0 consists of elements of order dividing p.  Exhausts
/// all subgroups when |G| <= exhaustive_threshold, otherwise samples
/// `trials` random subgroups with the given seed.  b_elem must be an
/// elementary p-group and c a p-group.
bool lemma_basic_check(std::uint64_t p, const FiniteAbelianGroup& b_elem,
                       const FiniteAbelianGroup& c, std::uint32_t trials, std::uint64_t seed,
                       std::uint64_t exhaustive_threshold = 256,
                       std::uint64_t order_budget = kDefaultOrderBudget);

/// All abelian groups of order exactly n (one per isomorphism type),
/// deterministic order.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::uint64_t n);

/// All abelian p-groups of order p^e for e in [0, max_exp], deterministic.
std::vector<FiniteAbelianGroup> abelian_p_groups_up_to(std::uint64_t p, std::uint32_t max_exp);

}  // namespace abtaxon::oracle
