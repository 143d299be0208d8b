#pragma once

// Bitmap-based exhaustive subgroup enumeration over a GroupTable.  Internal
// machinery shared by the finite-group oracle and the verification sweeps;
// not part of the public surface.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "abtaxon/oracle/finite_group.hpp"

namespace abtaxon::oracle::detail {

inline constexpr std::size_t kMaxWords = 8;  // element sets up to order 512

struct Bitmap {
    std::array<std::uint64_t, kMaxWords> w{};

    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t word : w) c += static_cast<std::uint32_t>(std::popcount(word));
        return c;
    }

    Bitmap intersect(const Bitmap& o) const {
        Bitmap out;
        for (std::size_t i = 0; i < kMaxWords; ++i) out.w[i] = w[i] & o.w[i];
        return out;
    }

    friend bool operator==(const Bitmap&, const Bitmap&) = default;
    friend auto operator<=>(const Bitmap&, const Bitmap&) = default;
};

struct BitmapHash {
    std::size_t operator()(const Bitmap& b) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t word : b.w) {
            h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

template <typename Fn>
void for_each_bit(const Bitmap& b, Fn fn) {
    for (std::size_t wi = 0; wi < kMaxWords; ++wi) {
        std::uint64_t word = b.w[wi];
        while (word) {
            std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(word));
            fn(static_cast<std::uint32_t>(wi * 64 + bit));
            word &= word - 1;
        }
    }
}

/// <S, x>: the union of cosets S + i*x, for a subgroup bitmap S.
Bitmap extend_subgroup(const GroupTable& t, const Bitmap& s, std::uint32_t x);

/// Subgroup generated by the given elements.
Bitmap closure_of(const GroupTable& t, const std::vector<std::uint32_t>& gens);

/// Every subgroup of the group, deduplicated by element set, sorted by
/// (order, element set).  Deterministic.
std::vector<Bitmap> all_subgroup_bitmaps(const GroupTable& t);

/// Greedy minimal generating elements of a subgroup bitmap, in increasing
/// element order.  Deterministic.
std::vector<std::uint32_t> generating_elements(const GroupTable& t, const Bitmap& s);

}  // namespace abtaxon::oracle::detail
