#include <doctest.h>

#include "uta/auta.hpp"
#include "uta/oracle.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::flat;
using uta::test::pat;

namespace {

// language: arities consisting of one "a" then one "b" (in rewriting order)
Aut chain_aut() {
    Aut A;
    A.cls = AutClass::Auta;
    A.states = {"q_leaf", "q_f"};
    A.finals = {"q_f"};
    auto H = std::make_shared<HorizontalAutomaton>();
    H->hstates = {"p0", "p1", "p2"};
    H->transitions = {{"p0", pat("\"a\""), "p1"}, {"p1", pat("\"b\""), "p2"}};
    A.horizontal = H;
    Rule leaf;
    leaf.h_from = "p0";
    leaf.h_to = "p0";
    leaf.target = "q_leaf";
    Rule full;
    full.h_from = "p0";
    full.h_to = "p2";
    full.target = "q_f";
    A.rules = {leaf, full};
    return A;
}

// accepts multisets {b, a^n}: the single b must be consumed first, but the
// canonical search tries the a's first and has to back out of a dead end
Aut tail_aut() {
    Aut A;
    A.cls = AutClass::Auta;
    A.states = {"q"};
    A.finals = {"q"};
    auto H = std::make_shared<HorizontalAutomaton>();
    H->hstates = {"p0", "dead", "p1"};
    H->transitions = {{"p0", pat("\"a\""), "dead"},
                      {"p0", pat("\"b\""), "p1"},
                      {"p1", pat("\"a\""), "p1"}};
    A.horizontal = H;
    Rule r;
    r.h_from = "p0";
    r.h_to = "p1";
    r.target = "q";
    A.rules = {r};
    return A;
}

} // namespace

TEST_CASE("membership") {
    Aut A = chain_aut();
    CHECK(auta_membership(A, flat({"b", "a"})));
    CHECK_FALSE(auta_membership(A, flat({"a", "a"})));
    CHECK_FALSE(auta_membership(A, flat({"a"})));
    // leaf accepted iff a (p,p) rule targets a final state -- here it does not
    CHECK_FALSE(auta_membership(A, DataTree::leaf()));

    Aut T = tail_aut();
    CHECK(auta_membership(T, flat({"a", "a", "b"})));
    CHECK(auta_membership(T, flat({"b"})));
    CHECK_FALSE(auta_membership(T, flat({"a", "a"})));
}

TEST_CASE("backtracking is observable") {
    Aut T = tail_aut();
    DataTree t = flat({"a", "a", "a", "a", "b"});
    Stats stats;
    CHECK(auta_membership(T, t, &stats));
    // the failed all-a prefix forces more configurations than elements
    CHECK(stats.search_nodes > t.edges.size());
}

TEST_CASE("membership agrees with the exhaustive oracle") {
    for (const Aut& A : {chain_aut(), tail_aut()})
        for (const DataTree& t : enum_trees_over({"a", "b"}, 4, 300))
            CHECK(auta_membership(A, t) == brute_membership(A, t));
}

TEST_CASE("emptiness") {
    SUBCASE("unsatisfiable guard means empty") {
        Aut A = tail_aut();
        auto H = std::make_shared<HorizontalAutomaton>();
        H->hstates = {"p0", "p1"};
        H->transitions = {
            {"p0", Filter::f_and(pat("\"a\""), Filter::f_not(pat("\"a\""))), "p1"}};
        A.horizontal = H;
        A.rules[0].h_from = "p0";
        A.rules[0].h_to = "p1";
        CHECK(auta_empty(A));
    }
    SUBCASE("universal self-loop is nonempty") {
        Aut A;
        A.cls = AutClass::Auta;
        A.states = {"q"};
        A.finals = {"q"};
        auto H = std::make_shared<HorizontalAutomaton>();
        H->hstates = {"p0"};
        H->transitions = {{"p0", pat("*"), "p0"}};
        A.horizontal = H;
        Rule r;
        r.h_from = "p0";
        r.h_to = "p0";
        r.target = "q";
        A.rules = {r};
        CHECK_FALSE(auta_empty(A));
        CHECK(vertically_deterministic(A, enum_trees_over({"a"}, 3, 50)));
    }
    SUBCASE("each transition/state pair tested at most once") {
        Aut A = chain_aut();
        Stats stats;
        auta_empty(A, &stats);
        std::uint64_t pairs = A.horizontal->transitions.size() *
                              (A.states.size() + 1);
        CHECK(stats.sat_checks <= pairs);
    }
}
