#include <doctest.h>

#include <random>

#include "abtaxon/classifier.hpp"
#include "abtaxon/errors.hpp"
#include "abtaxon/parser.hpp"
#include "generators.hpp"

using namespace abtaxon;
using abtaxon_test::random_expr;

namespace {
GroupExpr expr(const char* text) { return parse_group_expr(text); }
}  // namespace

TEST_CASE("Bassian classification") {
    SUBCASE("quasi-cyclic groups are not Bassian") {
        Verdict v = is_bassian(expr("Z(2^inf)"));
        CHECK(v.no());
        CHECK(v.citation == Citation::MainThmII);
    }
    SUBCASE("finite-dimensional Q-power plus reduced finite ranks") {
        Verdict v = is_bassian(expr("Q^2 + Z^3 + Z(3^2)^7"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::MainThmII);
    }
    SUBCASE("infinite p-rank fails") {
        Verdict v = is_bassian(expr("Z(2)^w"));
        CHECK(v.no());
        CHECK(v.citation == Citation::MainThmI);
    }
    SUBCASE("infinite torsion-free rank fails") {
        CHECK(is_bassian(expr("Z^w")).no());
        CHECK(is_bassian(expr("Q^w")).no());
    }
    SUBCASE("reduced finite ranks pass") {
        Verdict v = is_bassian(expr("Z^4 + Z(2^3)^5 + B(3)"));
        CHECK(v.no());  // B(3) has infinite 3-rank
        CHECK(is_bassian(expr("Z^4 + Z(2^3)^5")).yes());
    }
}

TEST_CASE("hereditary aliases carry their own citations") {
    Verdict hb = is_hereditarily_bassian(expr("Z(3^2)^5"));
    CHECK(hb.yes());
    CHECK(hb.citation == Citation::Cor2);

    CHECK(is_hereditarily_bassian(expr("Z(2^inf)")).no());

    Verdict hh = is_hereditarily_hopfian(expr("Z + Z(2)^3"));
    CHECK(hh.yes());
    CHECK(hh.citation == Citation::Prop1);
}

TEST_CASE("nearly Bassian") {
    Verdict v = is_nearly_bassian(expr("Z(5^inf)"));
    CHECK(v.yes());
    CHECK(v.citation == Citation::Prop3);

    CHECK(is_nearly_bassian(expr("Z(5^inf)^2")).no());
    CHECK(is_nearly_bassian(expr("Z^4")).yes());
    CHECK(is_nearly_bassian(expr("Z(5^inf) + Z(5)")).no());
}

TEST_CASE("super Bassian") {
    Verdict v = is_super_bassian(expr("Z(2^2)^3 + Z(3)"));
    CHECK(v.yes());
    CHECK(v.citation == Citation::ThmSuper);

    CHECK(is_super_bassian(expr("Z^4")).yes());
    CHECK(is_super_bassian(expr("Q")).no());          // not reduced
    CHECK(is_super_bassian(expr("TF(2;3)")).no());    // quasi-cyclic image at 3
    CHECK(is_super_bassian(expr("Z + Z(2)^3")).yes());
    CHECK(is_super_bassian(GroupExpr{}).yes());
}

TEST_CASE("generalized Bassian rule cascade") {
    SUBCASE("R1: Bassian groups") {
        Verdict v = is_generalized_bassian(expr("Q^2 + Z^3"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::BassianImpliesGb);
    }
    SUBCASE("R2: infinite torsion-free rank") {
        Verdict v = is_generalized_bassian(expr("Z^w"));
        CHECK(v.no());
        CHECK(v.citation == Citation::DkFiniteRank);
    }
    SUBCASE("R3: quasi-cyclic summand") {
        Verdict v = is_generalized_bassian(expr("Z(5^inf)^2"));
        CHECK(v.no());
        CHECK(v.citation == Citation::PropDivnear);
    }
    SUBCASE("R4: primary component shape") {
        Verdict v = is_generalized_bassian(expr("B(3)"));
        CHECK(v.no());
        CHECK(v.citation == Citation::DkShape);
        CHECK(is_generalized_bassian(expr("Z(13^2)^w")).no());
    }
    SUBCASE("R5: torsion with the right shape") {
        Verdict v = is_generalized_bassian(expr("Z(2)^w + Z(2^4)^3"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::Thm210);
    }
    SUBCASE("R7: reduced splitting mixed") {
        Verdict v = is_generalized_bassian(expr("Z + Z(2)^w"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::Cor212);
    }
    SUBCASE("R8: open territory") {
        Verdict v = is_generalized_bassian(expr("Q + Z(2)^w"));
        CHECK(v.unknown());
        CHECK(v.citation == Citation::Problem2);
    }
}

TEST_CASE("nearly generalized Bassian rule cascade") {
    SUBCASE("N1: quasi-cyclic") {
        Verdict v = is_nearly_generalized_bassian(expr("Z(7^inf)"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::ThmChief);
    }
    SUBCASE("N2: Bassian") {
        Verdict v = is_nearly_generalized_bassian(expr("Z^3"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::BassianHereditary);
    }
    SUBCASE("N3: dichotomy contrapositive") {
        Verdict v = is_nearly_generalized_bassian(expr("B(2)"));
        CHECK(v.no());
        CHECK(v.citation == Citation::ThmChief);
    }
    SUBCASE("N4: torsion, derived") {
        Verdict v = is_nearly_generalized_bassian(expr("Z(2)^w"));
        CHECK(v.yes());
        CHECK(v.citation == Citation::NgbDerivedTorsion);
    }
    SUBCASE("N6: mixed generalized Bassian stays open") {
        Verdict v = is_nearly_generalized_bassian(expr("Z + Z(2)^w"));
        CHECK(v.unknown());
        CHECK(v.citation == Citation::HereditaryGbOpen);
    }
    SUBCASE("strict-paper mode disables N4/N5") {
        ClassifyOptions strict{true};
        Verdict v = is_nearly_generalized_bassian(expr("Z(2)^w"), strict);
        CHECK(v.unknown());
        CHECK(v.citation == Citation::HereditaryGbOpen);
        // rules N1-N3 are unaffected
        CHECK(is_nearly_generalized_bassian(expr("Z(7^inf)"), strict).yes());
        CHECK(is_nearly_generalized_bassian(expr("Z^3"), strict).yes());
        CHECK(is_nearly_generalized_bassian(expr("B(2)"), strict).no());
    }
}

TEST_CASE("elementary + Bassian decomposition") {
    SUBCASE("absorbs the whole order-p multiplicity") {
        auto [e, h] = extract_elementary_plus_bassian(expr("Z(2)^w + Z(2^3)^2 + Z"));
        CHECK(e == expr("Z(2)^w"));
        CHECK(h == expr("Z(2^3)^2 + Z"));
    }
    SUBCASE("no order-p summand survives in H") {
        auto [e, h] = extract_elementary_plus_bassian(expr("Z(3)^2 + Z(3^2)"));
        CHECK(e == expr("Z(3)^2"));
        CHECK(h == expr("Z(3^2)"));
    }
    SUBCASE("zero group") {
        auto [e, h] = extract_elementary_plus_bassian(GroupExpr{});
        CHECK(e.is_zero());
        CHECK(h.is_zero());
    }
    SUBCASE("precondition failures name the condition") {
        CHECK_THROWS_WITH_AS(extract_elementary_plus_bassian(expr("B(3)")),
                             "precondition failed: T_3 not elementary + finite",
                             PreconditionError);
        CHECK_THROWS_AS(extract_elementary_plus_bassian(expr("Z^w")), PreconditionError);
        CHECK_THROWS_AS(extract_elementary_plus_bassian(expr("Z(5^inf)")), PreconditionError);
    }
}

TEST_CASE("explain bundles deterministic verdicts") {
    auto rep = explain(expr("Z(5^inf)"));
    CHECK(rep.bassian.no());
    CHECK(rep.nearly_bassian.yes());
    CHECK(rep.super_bassian.no());
    CHECK(rep.generalized_bassian.no());
    CHECK(rep.nearly_generalized_bassian.yes());

    auto zero = explain(GroupExpr{});
    CHECK(zero.bassian.yes());
    CHECK(zero.hereditarily_bassian.yes());
    CHECK(zero.hereditarily_hopfian.yes());
    CHECK(zero.nearly_bassian.yes());
    CHECK(zero.super_bassian.yes());
    CHECK(zero.generalized_bassian.yes());
    CHECK(zero.nearly_generalized_bassian.yes());

    CHECK(explain(expr("Q + Z(2)^w")).generalized_bassian.unknown());

    // byte-level determinism of the whole report
    CHECK(explain(expr("Q + Z(2)^w + TF(2;3)")) == explain(expr("Q + Z(2)^w + TF(2;3)")));
}

TEST_CASE("implication chain on random expressions") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 2000; ++i) {
        GroupExpr g = random_expr(rng);
        auto prof = invariant_profile(g);
        Verdict b = is_bassian(g);
        Verdict gb = is_generalized_bassian(g);
        Verdict nb = is_nearly_bassian(g);
        Verdict sb = is_super_bassian(g);

        if (b.yes()) {
            CHECK(gb.yes());
            CHECK(nb.yes());
        }
        if (sb.yes()) {
            CHECK(b.yes());
            CHECK(prof.property_p);
            CHECK(prof.is_reduced);
        }
        if (gb.no()) CHECK(b.no());
        CHECK(is_hereditarily_bassian(g).value == b.value);
        CHECK(is_hereditarily_hopfian(g).value == b.value);

        // Theorem-chief dichotomy: nearly GB Yes with GB No only for a
        // single quasi-cyclic summand.
        Verdict ngb = is_nearly_generalized_bassian(g);
        if (ngb.yes() && gb.no()) {
            REQUIRE(g.terms().size() == 1);
            CHECK(std::holds_alternative<Prufer>(g.terms()[0].atom));
            CHECK(g.terms()[0].multiplicity == Cardinal::finite(1));
        }
    }
}

TEST_CASE("Bassian respects finite direct sums") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 1000; ++i) {
        GroupExpr a = random_expr(rng), b = random_expr(rng);
        bool sum_bassian = is_bassian(direct_sum(a, b)).yes();
        CHECK(sum_bassian == (is_bassian(a).yes() && is_bassian(b).yes()));
    }
}

TEST_CASE("property (P) transfers to the torsion-free quotient for Bassian groups") {
    std::mt19937_64 rng(1010);
    for (int i = 0; i < 1000; ++i) {
        GroupExpr g = random_expr(rng);
        if (!is_bassian(g).yes()) continue;
        CHECK(has_property_p(g) == has_property_p(quotient_mod_torsion(g)));
    }
}

TEST_CASE("decomposition round-trip on admissible random expressions") {
    std::mt19937_64 rng(1111);
    int admissible = 0;
    for (int i = 0; i < 2000; ++i) {
        GroupExpr g = random_expr(rng);
        auto prof = invariant_profile(g);
        bool ok = prof.r0.is_finite() && prof.prufer_ranks.empty();
        for (const auto& [p, shape] : prof.p_shape_elem_plus_finite) ok = ok && shape;
        if (!ok) continue;
        ++admissible;
        auto [e, h] = extract_elementary_plus_bassian(g);
        CHECK(direct_sum(e, h) == g);
        CHECK(is_elementary_expr(e));
        CHECK(is_bassian(h).yes());
        for (const Term& t : h.terms()) {
            const auto* c = std::get_if<Cyclic>(&t.atom);
            CHECK((c == nullptr || c->k >= 2));
        }
    }
    CHECK(admissible > 100);  // the filter must not be vacuous
}
