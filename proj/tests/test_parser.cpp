#include <doctest.h>

#include <random>
#include <string>

#include "abtaxon/errors.hpp"
#include "abtaxon/parser.hpp"
#include "generators.hpp"

using namespace abtaxon;
using abtaxon_test::random_expr;

TEST_CASE("parse direct transcriptions") {
    GroupExpr g = parse_group_expr("Z^3 + Q + Z(2^3)^w");
    REQUIRE(g.terms().size() == 3);
    CHECK(g.terms()[0] == Term{FreeZ{}, Cardinal::finite(3)});
    CHECK(g.terms()[1] == Term{Rational{}, Cardinal::finite(1)});
    CHECK(g.terms()[2] == Term{Cyclic{2, 3}, Cardinal::aleph(0)});

    GroupExpr h = parse_group_expr("Z(5^inf) + B(7) + TF(2;3,5)");
    REQUIRE(h.terms().size() == 3);
    CHECK(h.terms()[0] == Term{Prufer{5}, Cardinal::finite(1)});
    CHECK(h.terms()[1] == Term{UnboundedDsc{7}, Cardinal::finite(1)});
    CHECK(h.terms()[2] ==
          Term{TorsionFreeFiniteRank{2, {3, 5}}, Cardinal::finite(1)});
}

TEST_CASE("parse zero and shorthand forms") {
    CHECK(parse_group_expr("0").is_zero());
    CHECK(parse_group_expr("Z(2)") == parse_group_expr("Z(2^1)"));
    CHECK(parse_group_expr("TF(3)") ==
          normalize({Term{TorsionFreeFiniteRank{3, {}}, Cardinal::finite(1)}}));
    CHECK(parse_group_expr("Z^w2") ==
          normalize({Term{FreeZ{}, Cardinal::aleph(2)}}));
}

TEST_CASE("whitespace insensitivity and unicode aliases") {
    CHECK(parse_group_expr("  Z ^ 3+Q ") == parse_group_expr("Z^3 + Q"));
    CHECK(parse_group_expr("Q ⊕ Z(2^∞)") == parse_group_expr("Q + Z(2^inf)"));
    CHECK(render(parse_group_expr("Q ⊕ Z(2^∞)")) == "Q + Z(2^inf)");
}

TEST_CASE("validation failures are positioned parse errors") {
    SUBCASE("composite base with factorization hint") {
        try {
            parse_group_expr("Z(4^2)");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.pos().line == 1);
            CHECK(e.pos().column == 3);
            CHECK(e.hint() == "4 = 2^2");
        }
    }
    SUBCASE("zero rank") {
        try {
            parse_group_expr("TF(0)");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.pos().column == 4);
            CHECK(e.found() == "0");
        }
    }
    CHECK_THROWS_AS(parse_group_expr("Z(2^0)"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Z^0"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("TF(2;4)"), ParseError);
    CHECK_THROWS_AS(parse_group_expr(""), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Z +"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Z + 0"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("X^2"), ParseError);
    CHECK_THROWS_AS(parse_group_expr("Z^1000000000000"), ParseError);
}

TEST_CASE("render canonical forms") {
    CHECK(render(GroupExpr{}) == "0");
    CHECK(render(normalize({Term{Cyclic{2, 3}, Cardinal::finite(5)}})) == "Z(2^3)^5");
    CHECK(render(normalize({Term{FreeZ{}, Cardinal::aleph(1)}})) == "Z^w1");
    CHECK(render(normalize({Term{Cyclic{3, 1}, Cardinal::aleph(0)}})) == "Z(3)^w");
    CHECK(render(parse_group_expr("Z + Z")) == "Z^2");
}

TEST_CASE("round trip on random expressions") {
    std::mt19937_64 rng(1212);
    for (int i = 0; i < 2000; ++i) {
        GroupExpr g = random_expr(rng);
        CHECK(parse_group_expr(render(g)) == g);
    }
}

TEST_CASE("parser normalization matches normalize on the raw term list") {
    CHECK(parse_group_expr("Z(2^3)^2 + Z + Z(2^3)^3") ==
          normalize({Term{Cyclic{2, 3}, Cardinal::finite(2)},
                     Term{FreeZ{}, Cardinal::finite(1)},
                     Term{Cyclic{2, 3}, Cardinal::finite(3)}}));
}

TEST_CASE("fuzzing yields positioned errors, never crashes") {
    std::mt19937_64 rng(1313);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 500; ++i) {
        std::string s;
        for (int j = len(rng); j > 0; --j) s.push_back(static_cast<char>(byte(rng)));
        try {
            (void)parse_group_expr(s);
        } catch (const ParseError& e) {
            CHECK(e.pos().line >= 1);
            CHECK(e.pos().column >= 1);
        }
        // anything else escaping is a failure doctest reports as a crash
    }
}
