#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abtaxon {

/// Deterministic primality by trial division.  Inputs come from the DSL and
/// are capped at 10^9 there, so sqrt-division is plenty.
bool is_prime(std::uint64_t n);

/// Prime factorization, smallest factors first, with multiplicity.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

/// "12 = 2^2 * 3" — used as a hint when a prime was expected.
std::string factorization_text(std::uint64_t n);

}  // namespace abtaxon
