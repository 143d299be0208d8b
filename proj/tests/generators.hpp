#pragma once

// Seeded random generators shared by the property suites.

#include <algorithm>
#include <random>
#include <vector>

#include "abtaxon/group_expr.hpp"
#include "abtaxon/oracle/integer_matrix.hpp"

namespace abtaxon_test {

inline const std::uint64_t kPrimePool[] = {2, 3, 5, 7, 11, 13};

inline std::uint64_t random_prime(std::mt19937_64& rng) {
    return kPrimePool[rng() % std::size(kPrimePool)];
}

inline abtaxon::Atom random_atom(std::mt19937_64& rng) {
    switch (rng() % 6) {
        case 0: return abtaxon::FreeZ{};
        case 1: return abtaxon::Rational{};
        case 2:
            return abtaxon::Cyclic{random_prime(rng), static_cast<std::uint32_t>(1 + rng() % 4)};
        case 3: return abtaxon::Prufer{random_prime(rng)};
        case 4: return abtaxon::UnboundedDsc{random_prime(rng)};
        default: {
            std::vector<std::uint64_t> non_free;
            for (std::uint64_t i = rng() % 3; i > 0; --i) non_free.push_back(random_prime(rng));
            std::sort(non_free.begin(), non_free.end());
            non_free.erase(std::unique(non_free.begin(), non_free.end()), non_free.end());
            return abtaxon::TorsionFreeFiniteRank{static_cast<std::uint32_t>(1 + rng() % 3),
                                                  std::move(non_free)};
        }
    }
}

inline abtaxon::Cardinal random_cardinal(std::mt19937_64& rng) {
    if (rng() % 4 == 0) return abtaxon::Cardinal::aleph(static_cast<std::uint32_t>(rng() % 3));
    return abtaxon::Cardinal::finite(1 + rng() % 6);
}

inline abtaxon::GroupExpr random_expr(std::mt19937_64& rng, std::size_t max_terms = 6) {
    std::vector<abtaxon::Term> terms;
    for (std::size_t i = rng() % (max_terms + 1); i > 0; --i)
        terms.push_back(abtaxon::Term{random_atom(rng), random_cardinal(rng)});
    return abtaxon::normalize(std::move(terms));
}

inline abtaxon::oracle::IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 6,
                                                    long long magnitude = 50) {
    std::size_t rows = 1 + rng() % max_dim;
    std::size_t cols = 1 + rng() % max_dim;
    abtaxon::oracle::IntegerMatrix m(rows, cols);
    std::uniform_int_distribution<long long> entry(-magnitude, magnitude);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace abtaxon_test
