#include "abtaxon/atom.hpp"

#include "abtaxon/errors.hpp"
#include "abtaxon/primality.hpp"

namespace abtaxon {

bool is_torsion_atom(const Atom& a) {
    return std::holds_alternative<Cyclic>(a) || std::holds_alternative<Prufer>(a) ||
           std::holds_alternative<UnboundedDsc>(a);
}

bool is_divisible_atom(const Atom& a) {
    return std::holds_alternative<Rational>(a) || std::holds_alternative<Prufer>(a);
}

std::uint64_t atom_torsion_free_rank(const Atom& a) {
    if (std::holds_alternative<FreeZ>(a) || std::holds_alternative<Rational>(a)) return 1;
    if (const auto* tf = std::get_if<TorsionFreeFiniteRank>(&a)) return tf->rank;
    return 0;
}

std::uint64_t atom_prime(const Atom& a) {
    if (const auto* c = std::get_if<Cyclic>(&a)) return c->p;
    if (const auto* q = std::get_if<Prufer>(&a)) return q->p;
    if (const auto* b = std::get_if<UnboundedDsc>(&a)) return b->p;
    return 0;
}

std::string atom_text(const Atom& a) {
    struct Visitor {
        std::string operator()(const FreeZ&) const { return "Z"; }
        std::string operator()(const Rational&) const { return "Q"; }
        std::string operator()(const Cyclic& c) const {
            if (c.k == 1) return "Z(" + std::to_string(c.p) + ")";
            return "Z(" + std::to_string(c.p) + "^" + std::to_string(c.k) + ")";
        }
        std::string operator()(const Prufer& q) const {
            return "Z(" + std::to_string(q.p) + "^inf)";
        }
        std::string operator()(const UnboundedDsc& b) const {
            return "B(" + std::to_string(b.p) + ")";
        }
        std::string operator()(const TorsionFreeFiniteRank& tf) const {
            std::string s = "TF(" + std::to_string(tf.rank);
            for (std::size_t i = 0; i < tf.non_free_primes.size(); ++i)
                s += (i == 0 ? ";" : ",") + std::to_string(tf.non_free_primes[i]);
            return s + ")";
        }
    };
    return std::visit(Visitor{}, a);
}

namespace {

void require_prime(std::uint64_t p, const Atom& a) {
    if (!is_prime(p))
        throw ValidationError("atom " + atom_text(a) + ": " + std::to_string(p) +
                              " is not prime (" + factorization_text(p) + ")");
}

}  // namespace

void validate_atom(const Atom& a) {
    if (const auto* c = std::get_if<Cyclic>(&a)) {
        require_prime(c->p, a);
        if (c->k == 0) throw ValidationError("atom " + atom_text(a) + ": exponent must be >= 1");
    } else if (const auto* q = std::get_if<Prufer>(&a)) {
        require_prime(q->p, a);
    } else if (const auto* b = std::get_if<UnboundedDsc>(&a)) {
        require_prime(b->p, a);
    } else if (const auto* tf = std::get_if<TorsionFreeFiniteRank>(&a)) {
        if (tf->rank == 0) throw ValidationError("atom " + atom_text(a) + ": rank must be >= 1");
        for (std::size_t i = 0; i < tf->non_free_primes.size(); ++i) {
            require_prime(tf->non_free_primes[i], a);
            if (i > 0 && tf->non_free_primes[i - 1] >= tf->non_free_primes[i])
                throw ValidationError("atom " + atom_text(a) +
                                      ": non-free primes must be sorted and distinct");
        }
    }
}

}  // namespace abtaxon
