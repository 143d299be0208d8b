#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abtaxon::oracle {

/// Controls the verification sweeps.  Every sweep has one kernel invoked
/// either serially or under OpenMP; results are aggregated with
/// order-independent joins and sorted, so the parallel output is identical
/// to the serial one.
struct SweepConfig {
    bool parallel = true;
    std::uint64_t order_ceiling = 512;           // resource ceiling for budgets
    std::uint64_t hom_crosscheck_budget = 4096;  // literal enumeration cap per pair
};

struct SweepResult {
    std::string name;
    std::uint64_t items = 0;                // groups / pairs visited
    std::uint64_t checks = 0;               // individual assertions evaluated
    std::uint64_t literal_crosschecks = 0;  // brute-force enumerations run
    std::vector<std::string> counterexamples;  // sorted; expected empty
    bool criterion_demoted = false;  // embedding criterion failed validation
    double seconds = 0.0;

    bool ok() const { return counterexamples.empty(); }
};

/// For every abelian group of order <= max_order and every subgroup H:
/// an injection G -> G/H exists iff H is trivial, and |G/H| * |H| = |G|.
SweepResult bassian_sweep(std::uint32_t max_order, const SweepConfig& cfg = {});

/// For every pair of groups of order <= max_order: the gcd-product hom count
/// equals the enumeration length (admissible image sets found by scanning);
/// small hom spaces are fully materialized and checked for distinctness and
/// the homomorphism property.
SweepResult hom_count_sweep(std::uint32_t max_order, const SweepConfig& cfg = {});

/// For every pair of p-groups of order <= p^max_exp: embedding_criterion
/// agrees with the exact injection search; literal enumeration cross-checks
/// pairs with small hom spaces.  A disagreement demotes the criterion
/// rather than failing the sweep (it is conjectural); demotions are
/// reported in the result.
SweepResult embedding_equiv_sweep(std::uint64_t p, std::uint32_t max_exp,
                                  const SweepConfig& cfg = {});

/// For every pair (B, C) with B an elementary p-group, C a p-group and
/// |B + C| <= max_total_order: every subgroup A of B + C with A meet pC = 0
/// is elementary.  Exhaustive at these orders; trials/seed control the
/// sampling fallback for larger groups.
SweepResult lemma_basic_sweep(std::uint64_t p, std::uint32_t max_total_order,
                              std::uint32_t trials, std::uint64_t seed,
                              const SweepConfig& cfg = {});

}  // namespace abtaxon::oracle
