#include <doctest.h>

#include <set>

#include "uta/auta.hpp"
#include "uta/autc.hpp"
#include "uta/auto_ordered.hpp"
#include "uta/autp.hpp"
#include "uta/oracle.hpp"
#include "uta/schema.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::flat;

namespace {

const std::string kFixtures = UTA_FIXTURE_DIR;

} // namespace

TEST_CASE("tree enumeration") {
    SUBCASE("one node") {
        EnumConfig cfg;
        cfg.max_nodes = 1;
        CHECK(enum_trees(cfg) == std::vector<DataTree>{DataTree::leaf()});
    }
    SUBCASE("two nodes over one symbol") {
        EnumConfig cfg;
        cfg.symbols = "a";
        cfg.max_nodes = 2;
        // the empty word is a label too
        std::vector<DataTree> expect = {
            DataTree::leaf(),
            DataTree::make({{"", DataTree::leaf()}}),
            DataTree::make({{"a", DataTree::leaf()}}),
        };
        CHECK(enum_trees(cfg) == expect);
    }
    SUBCASE("count and uniqueness at the defaults") {
        std::vector<DataTree> ts = enum_trees(EnumConfig{});
        // 1 leaf + 3 one-edge trees + 6 two-leaf-children + 9 chains
        CHECK(ts.size() == 19);
        std::set<DataTree> uniq(ts.begin(), ts.end());
        CHECK(uniq.size() == ts.size());
        for (std::size_t i = 1; i < ts.size(); ++i)
            CHECK(ts[i - 1].node_count() <= ts[i].node_count());
    }
    SUBCASE("explicit label list with truncation") {
        std::vector<DataTree> all = enum_trees_over({"x", "y"}, 3, 1000);
        std::vector<DataTree> cut = enum_trees_over({"x", "y"}, 3, 5);
        REQUIRE(all.size() > 5);
        CHECK(cut.size() == 5);
        std::set<DataTree> allset(all.begin(), all.end());
        for (const DataTree& t : cut) CHECK(allset.count(t) == 1);
        std::set<DataTree> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }
}

TEST_CASE("multiset enumeration") {
    CHECK(enum_multisets(1, 2).size() == 3);
    std::vector<std::vector<std::uint64_t>> expect = {{0, 0}, {1, 0}, {0, 1}};
    CHECK(enum_multisets(2, 1) == expect);
    CHECK(enum_multisets(3, 6).size() == 84); // C(9,3)
}

TEST_CASE("reference semantics agree with the fast paths") {
    SUBCASE("presburger class") {
        Aut A = load_schema_file(kFixtures + "/ab_eq.autp.json");
        for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 200))
            CHECK(brute_membership(A, t) == autp_membership(A, t));
    }
    SUBCASE("confluent class") {
        Aut A = load_schema_file(kFixtures + "/a_eq.autc.json");
        for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 200))
            CHECK(brute_membership(A, t) == autc_membership(A, t));
    }
    SUBCASE("ordered class") {
        Aut A = load_schema_file(kFixtures + "/a_le2.auto.json");
        for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 200))
            CHECK(brute_membership(A, t) == auto_membership(A, t));
    }
}

TEST_CASE("vertical determinism probe") {
    Aut A = load_schema_file(kFixtures + "/a_eq.autc.json");
    auto corpus = enum_trees_over({"a", "b"}, 3, 100);
    CHECK(vertically_deterministic(A, corpus));

    // duplicate the single rule under a second state: every accepted arity
    // now evaluates to two states
    Aut B = A;
    B.states.insert("q2");
    Rule r2 = B.rules[0];
    r2.target = "q2";
    B.rules.push_back(r2);
    CHECK_FALSE(vertically_deterministic(B, corpus));
}
