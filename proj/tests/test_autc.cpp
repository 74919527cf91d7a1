#include <doctest.h>

#include "uta/autc.hpp"
#include "uta/oracle.hpp"
#include "uta/schema.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::flat;
using uta::test::pat;

namespace {

const std::string kFixtures = UTA_FIXTURE_DIR;

Aut a_eq() { return load_schema_file(kFixtures + "/a_eq.autc.json"); }

Aut universal_autc() {
    Aut A;
    A.cls = AutClass::Autc;
    A.states = {"q"};
    A.finals = {"q"};
    auto H = std::make_shared<HorizontalAutomaton>();
    H->hstates = {"p0"};
    H->transitions = {{"p0", pat("*"), "p0"}};
    A.horizontal = H;
    A.initial_h = "p0";
    Rule r;
    r.h_from = "p0";
    r.h_to = "p0";
    r.target = "q";
    A.rules = {r};
    return A;
}

// two copies of the a/b balance automaton glued at the initial state, the
// second balancing a against c -- the union construction that breaks
// confluence
Aut shared_union() {
    Aut A;
    A.cls = AutClass::Autc;
    A.states = {"q"};
    A.finals = {"q"};
    auto H = std::make_shared<HorizontalAutomaton>();
    H->hstates = {"p0", "pa1", "pb", "pa2", "pc"};
    H->transitions = {{"p0", pat("\"a\""), "pa1"}, {"pa1", pat("\"b\""), "p0"},
                      {"p0", pat("\"b\""), "pb"},  {"pb", pat("\"a\""), "p0"},
                      {"p0", pat("\"a\""), "pa2"}, {"pa2", pat("\"c\""), "p0"},
                      {"p0", pat("\"c\""), "pc"},  {"pc", pat("\"a\""), "p0"}};
    A.horizontal = H;
    A.initial_h = "p0";
    Rule r;
    r.h_from = "p0";
    r.h_to = "p0";
    r.target = "q";
    A.rules = {r};
    return A;
}

} // namespace

TEST_CASE("confluence check") {
    CHECK(autc_check(a_eq()).ok());
    CHECK(autc_check(universal_autc()).ok());

    ConfluenceReport bad = autc_check(shared_union());
    CHECK_FALSE(bad.ok());
    CHECK(bad.state == "p0");

    // refused at load unless trusted
    std::string doc = save_schema(shared_union());
    CHECK_THROWS_AS(load_schema(doc), InvalidAutomaton);
    CHECK(load_schema(doc, LoadOptions{true}).cls == AutClass::Autc);
}

TEST_CASE("greedy membership") {
    Aut A = a_eq();
    CHECK(autc_membership(A, flat({"a", "a", "b", "b"})));
    CHECK_FALSE(autc_membership(A, flat({"a", "a", "b"})));
    CHECK(autc_membership(A, DataTree::leaf()));

    // greedy equals the exhaustive reference everywhere
    for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 300))
        CHECK(autc_membership(A, t) == brute_membership(A, t));
}

TEST_CASE("greedy step count is linear in the arity") {
    Aut A = a_eq();
    std::vector<std::pair<DataValue, DataTree>> edges;
    for (int i = 0; i < 40; ++i)
        edges.emplace_back(i % 2 ? "a" : "b", DataTree::leaf());
    DataTree t = DataTree::make(std::move(edges));
    Stats stats;
    CHECK(autc_membership(A, t, &stats));
    CHECK(stats.h_steps <= 40);
}

TEST_CASE("universality") {
    CHECK(autc_universal(universal_autc()));
    CHECK_FALSE(autc_universal(a_eq())); // e.g. the arity <<a>> tree is rejected

    // every tree needs at least one edge: the leaf is rejected
    Aut no_leaf = universal_autc();
    auto H = std::make_shared<HorizontalAutomaton>();
    H->hstates = {"p0", "p1"};
    H->transitions = {{"p0", pat("*"), "p1"}, {"p1", pat("*"), "p1"}};
    no_leaf.horizontal = H;
    no_leaf.rules[0].h_to = "p1";
    CHECK_FALSE(autc_universal(no_leaf));
}

TEST_CASE("disjointness") {
    SUBCASE("label-disjoint root filters") {
        Aut A = a_eq();
        // automaton accepting exactly the arity <<c>>
        Aut B = a_eq();
        auto H = std::make_shared<HorizontalAutomaton>();
        H->hstates = {"r0", "r1"};
        H->transitions = {{"r0", pat("\"c\""), "r1"}};
        B.horizontal = H;
        B.initial_h = "r0";
        B.rules[0].h_from = "r0";
        B.rules[0].h_to = "r1";
        Decision d = autc_disjoint(A, B);
        CHECK(d.answer == Decision::Answer::Yes);
    }
    SUBCASE("overlap with witness") {
        Decision d = autc_disjoint(a_eq(), universal_autc());
        REQUIRE(d.answer == Decision::Answer::No);
        CHECK(autc_membership(a_eq(), *d.witness));
        CHECK(autc_membership(universal_autc(), *d.witness));

        Decision self = autc_disjoint(a_eq(), a_eq());
        REQUIRE(self.answer == Decision::Answer::No);
        CHECK(*self.witness == DataTree::leaf());
    }
}

TEST_CASE("inclusion") {
    CHECK(autc_inclusion(a_eq(), universal_autc()).answer == Decision::Answer::Yes);
    CHECK(autc_inclusion(a_eq(), a_eq()).answer == Decision::Answer::Yes);

    Decision d = autc_inclusion(universal_autc(), a_eq());
    REQUIRE(d.answer == Decision::Answer::No);
    CHECK(autc_membership(universal_autc(), *d.witness));
    CHECK_FALSE(autc_membership(a_eq(), *d.witness));
    CHECK(d.witness->node_count() == 2); // smallest counter-example: one edge

    // inclusion agrees with the enumeration oracle
    for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 200)) {
        if (autc_membership(a_eq(), t))
            CHECK(autc_membership(universal_autc(), t));
    }
}
