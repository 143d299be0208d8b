#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "abtaxon/errors.hpp"
#include "abtaxon/oracle/finite_group.hpp"

using namespace abtaxon::oracle;

namespace {

FiniteAbelianGroup fag(std::vector<std::pair<std::uint64_t, std::uint32_t>> divs) {
    return FiniteAbelianGroup(std::move(divs));
}

// Independent check of a claimed quotient type: build the coset space of
// <gens> in g literally and compare element-order histograms.  For finite
// abelian groups the order statistics determine the isomorphism type.
void check_quotient_by_coset_orders(const FiniteAbelianGroup& g,
                                    const std::vector<std::vector<std::uint64_t>>& gens,
                                    const FiniteAbelianGroup& claimed) {
    GroupTable t(g);

    // close <gens> under addition
    std::set<std::uint32_t> h{0};
    std::vector<std::uint32_t> frontier{0};
    std::vector<std::uint32_t> gen_elems;
    for (const auto& gen : gens) {
        std::vector<std::uint32_t> coords(gen.begin(), gen.end());
        gen_elems.push_back(t.encode(coords));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(h.begin(), h.end());
        for (std::uint32_t e : cur)
            for (std::uint32_t x : gen_elems)
                if (h.insert(t.add(e, x)).second) grew = true;
    }

    // canonical representative of each coset
    std::vector<std::uint32_t> rep(t.order());
    for (std::uint32_t e = 0; e < t.order(); ++e) {
        std::uint32_t best = e;
        for (std::uint32_t x : h) best = std::min(best, t.add(e, x));
        rep[e] = best;
    }

    std::map<std::uint64_t, std::uint64_t> quotient_orders;
    for (std::uint32_t e = 0; e < t.order(); ++e) {
        if (rep[e] != e) continue;  // one element per coset
        std::uint64_t ord = 1;
        std::uint32_t cur = rep[e];
        while (cur != rep[0]) {
            cur = rep[t.add(cur, e)];
            ++ord;
        }
        ++quotient_orders[ord];
    }

    std::map<std::uint64_t, std::uint64_t> claimed_orders;
    GroupTable ct(claimed);
    for (std::uint32_t e = 0; e < ct.order(); ++e) ++claimed_orders[ct.element_order(e)];

    CHECK(quotient_orders == claimed_orders);
}

}  // namespace

TEST_CASE("finite group basics") {
    FiniteAbelianGroup g = fag({{2, 2}, {2, 1}});
    CHECK(g.order() == 8);
    CHECK(g.cyclic_orders() == std::vector<std::uint64_t>{2, 4});
    CHECK(g.str() == "Z/2 + Z/4");
    CHECK(FiniteAbelianGroup{}.order() == 1);
    CHECK(FiniteAbelianGroup{}.str() == "0");
    CHECK(g.exponent_partition(2) == std::vector<std::uint32_t>{2, 1});
    CHECK_THROWS_AS(fag({{4, 1}}), abtaxon::ValidationError);
    CHECK_THROWS_AS(fag({{2, 0}}), abtaxon::ValidationError);
}

TEST_CASE("quotient worked example Z/4 + Z/2 over <(2,1)>") {
    // divisors sorted as (2,1),(2,2): coordinates are (Z/2, Z/4), so the
    // generator (2,1) of the original presentation reads (1,2) here.
    FiniteAbelianGroup g = fag({{2, 2}, {2, 1}});
    std::vector<std::vector<std::uint64_t>> gens = {{1, 2}};
    FiniteAbelianGroup q = quotient(g, gens);
    CHECK(q == fag({{2, 2}}));  // Z/4
    check_quotient_by_coset_orders(g, gens, q);
}

TEST_CASE("quotient reduces generator coordinates into the divisor profile") {
    FiniteAbelianGroup g = fag({{2, 2}, {2, 1}});  // orders (2, 4)
    CHECK(quotient(g, {{3, 6}}) == quotient(g, {{1, 2}}));
    CHECK_THROWS_AS(quotient(g, {{1}}), abtaxon::ValidationError);  // wrong length
}

TEST_CASE("quotient degenerate cases") {
    FiniteAbelianGroup g = fag({{2, 2}, {3, 1}});
    CHECK(quotient(g, {}) == g);
    // dividing by the full generator set gives 0
    std::vector<std::vector<std::uint64_t>> full = {{1, 0}, {0, 1}};
    CHECK(quotient(g, full) == FiniteAbelianGroup{});
    CHECK(quotient(FiniteAbelianGroup{}, {}) == FiniteAbelianGroup{});
}

TEST_CASE("quotient cross-checked by coset orders on assorted subgroups") {
    for (const auto& g : {fag({{2, 3}}), fag({{2, 1}, {2, 2}}), fag({{3, 1}, {3, 1}}),
                          fag({{2, 1}, {3, 1}, {3, 1}})}) {
        for (const Subgroup& s : enumerate_subgroups(g)) {
            std::vector<std::vector<std::uint64_t>> gens;
            for (const auto& v : s.generators) gens.emplace_back(v.begin(), v.end());
            check_quotient_by_coset_orders(g, gens, quotient(g, gens));
        }
    }
}

TEST_CASE("subgroup enumeration counts") {
    CHECK(enumerate_subgroups(fag({{2, 1}, {2, 1}})).size() == 5);
    CHECK(enumerate_subgroups(fag({{3, 1}})).size() == 2);
    CHECK(enumerate_subgroups(FiniteAbelianGroup{}).size() == 1);
    CHECK(enumerate_subgroups(fag({{2, 2}})).size() == 3);   // 0, 2Z/4, Z/4
    CHECK(enumerate_subgroups(fag({{2, 1}, {2, 1}, {2, 1}})).size() == 16);
    CHECK_THROWS_AS(enumerate_subgroups(fag({{2, 10}})), abtaxon::ResourceError);
}

TEST_CASE("order is multiplicative over subgroup quotients") {
    for (const auto& g : {fag({{2, 2}, {2, 1}}), fag({{2, 1}, {3, 2}}), fag({{5, 1}, {5, 1}})}) {
        const std::uint64_t n = g.order();
        for (const Subgroup& s : enumerate_subgroups(g)) {
            std::vector<std::vector<std::uint64_t>> gens;
            for (const auto& v : s.generators) gens.emplace_back(v.begin(), v.end());
            CHECK(quotient(g, gens).order() * s.order == n);
        }
    }
}

TEST_CASE("hom counting") {
    CHECK(count_homs(fag({{2, 2}, {2, 1}}), fag({{2, 1}})) == 4);
    CHECK(count_homs(FiniteAbelianGroup{}, fag({{2, 3}})) == 1);
    CHECK(count_homs(fag({{3, 1}}), fag({{2, 2}})) == 1);

    SUBCASE("formula equals enumeration for all pairs of order <= 16") {
        std::vector<FiniteAbelianGroup> groups;
        for (std::uint64_t n = 1; n <= 16; ++n)
            for (const auto& g : abelian_groups_of_order(n)) groups.push_back(g);
        for (const auto& a : groups)
            for (const auto& b : groups) {
                GroupTable ta(a), tb(b);
                HomEnumerator homs(ta, tb);
                CHECK(homs.total() == count_homs(a, b));
                Int yielded = 0;
                std::vector<std::uint32_t> images;
                while (homs.next(images)) ++yielded;
                CHECK(yielded == count_homs(a, b));
            }
    }
}

TEST_CASE("injection tests") {
    SUBCASE("socle dimension obstruction") {
        CHECK_FALSE(exists_injection(fag({{2, 1}, {2, 1}}), fag({{2, 2}})));
        CHECK_FALSE(injection_exists_search(fag({{2, 1}, {2, 1}}), fag({{2, 2}})));
        CHECK_FALSE(embedding_criterion(fag({{2, 1}, {2, 1}}), fag({{2, 2}})));
    }
    SUBCASE("cyclic into bigger cyclic") {
        CHECK(exists_injection(fag({{2, 1}}), fag({{2, 2}})));
        CHECK(injection_exists_search(fag({{2, 1}}), fag({{2, 2}})));
        CHECK(embedding_criterion(fag({{2, 1}}), fag({{2, 2}})));
    }
    SUBCASE("identity embedding") {
        FiniteAbelianGroup a = fag({{2, 2}, {3, 1}});
        CHECK(exists_injection(a, a));
        CHECK(injection_exists_search(a, a));
        CHECK(embedding_criterion(a, a));
    }
    SUBCASE("exponent obstruction") {
        CHECK_FALSE(injection_exists_search(fag({{3, 2}}), fag({{3, 1}, {3, 1}})));
        CHECK_FALSE(embedding_criterion(fag({{3, 2}}), fag({{3, 1}, {3, 1}})));
    }
    SUBCASE("zero group embeds everywhere") {
        CHECK(exists_injection(FiniteAbelianGroup{}, fag({{2, 1}})));
        CHECK(injection_exists_search(FiniteAbelianGroup{}, FiniteAbelianGroup{}));
    }
    SUBCASE("hom budget is a resource error") {
        CHECK_THROWS_AS(exists_injection(fag({{2, 1}, {2, 1}, {2, 1}, {2, 1}}),
                                         fag({{2, 1}, {2, 1}, {2, 1}, {2, 1}}), 100),
                        abtaxon::ResourceError);
    }
    SUBCASE("all three routes agree on every pair of order <= 32") {
        std::vector<FiniteAbelianGroup> groups;
        for (std::uint64_t n = 1; n <= 32; ++n)
            for (const auto& g : abelian_groups_of_order(n)) groups.push_back(g);
        for (const auto& a : groups)
            for (const auto& b : groups) {
                bool search = injection_exists_search(a, b);
                CHECK(embedding_criterion(a, b) == search);
                if (count_homs(a, b) <= 4096) CHECK(exists_injection(a, b) == search);
            }
    }
}

TEST_CASE("bassian definition shadow on small orders") {
    for (std::uint64_t n = 1; n <= 36; ++n)
        for (const auto& g : abelian_groups_of_order(n)) {
            BassianCheckStats stats;
            CHECK(oracle_bassian_check(g, kDefaultOrderBudget, 4096, &stats));
            CHECK(stats.subgroups >= 1);
        }
    CHECK(oracle_bassian_check(fag({{2, 1}})));
    CHECK(oracle_bassian_check(FiniteAbelianGroup{}));
}

TEST_CASE("lemma basic checks") {
    CHECK(lemma_basic_check(2, fag({{2, 1}, {2, 1}}), fag({{2, 2}}), 0, 1));
    CHECK(lemma_basic_check(2, FiniteAbelianGroup{}, fag({{2, 3}}), 0, 1));
    CHECK(lemma_basic_check(3, fag({{3, 1}}), fag({{3, 2}}), 0, 1));
    CHECK(lemma_basic_check(2, fag({{2, 1}}), fag({{2, 2}, {2, 3}}), 50, 7,
                            /*exhaustive_threshold=*/16));  // sampling path
    CHECK_THROWS_AS(lemma_basic_check(2, fag({{2, 2}}), fag({{2, 1}}), 0, 1),
                    abtaxon::ValidationError);
    CHECK_THROWS_AS(lemma_basic_check(2, fag({{2, 1}}), fag({{3, 1}}), 0, 1),
                    abtaxon::ValidationError);
}

TEST_CASE("group inventories") {
    CHECK(abelian_groups_of_order(8).size() == 3);
    CHECK(abelian_groups_of_order(1).size() == 1);
    CHECK(abelian_groups_of_order(12).size() == 2);
    CHECK(abelian_groups_of_order(36).size() == 4);
    // partitions of 0..4: 1+1+2+3+5
    CHECK(abelian_p_groups_up_to(2, 4).size() == 12);

    // deterministic and duplicate-free
    auto a = abelian_groups_of_order(64);
    auto b = abelian_groups_of_order(64);
    CHECK(a == b);
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    CHECK(a.size() == 11);
}
