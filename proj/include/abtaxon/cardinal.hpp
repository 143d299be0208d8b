#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace abtaxon {

/// A cardinal number: either a finite natural or aleph_k for a machine
/// natural k.  This is all the classification theorems need — the only
/// arithmetic used is addition (max-absorbing above finite), scaling by a
/// finite natural, and the total order Finite(m) < Finite(n) < Aleph(i) < Aleph(j).
class Cardinal {
public:
    constexpr Cardinal() = default;  // Finite(0)

    static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(false, n); }
    static constexpr Cardinal aleph(std::uint32_t k) { return Cardinal(true, k); }

    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

    /// Valid only when is_finite().
    constexpr std::uint64_t finite_value() const { return value_; }
    /// Valid only when is_infinite().
    constexpr std::uint32_t aleph_index() const { return static_cast<std::uint32_t>(value_); }

    friend constexpr Cardinal operator+(Cardinal a, Cardinal b) {
        if (a.infinite_ || b.infinite_) return a < b ? b : a;
        return finite(a.value_ + b.value_);
    }
    constexpr Cardinal& operator+=(Cardinal o) { return *this = *this + o; }

    /// Multiplication by a finite natural: Finite(m)*n = Finite(m*n); an
    /// aleph scaled by n >= 1 is unchanged; scaling by 0 gives Finite(0).
    constexpr Cardinal scaled_by(std::uint64_t n) const {
        if (n == 0) return finite(0);
        if (infinite_) return *this;
        return finite(value_ * n);
    }

    friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(Cardinal a, Cardinal b) = default;

    /// "0", "5", "w" (= aleph_0), "w2" (= aleph_2); matches the DSL
    /// multiplicity syntax.
    std::string str() const {
        if (!infinite_) return std::to_string(value_);
        if (value_ == 0) return "w";
        return "w" + std::to_string(value_);
    }

private:
    constexpr Cardinal(bool infinite, std::uint64_t value) : infinite_(infinite), value_(value) {}

    bool infinite_ = false;
    std::uint64_t value_ = 0;  // the natural n, or the aleph index k
};

}  // namespace abtaxon
