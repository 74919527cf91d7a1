#include <doctest.h>

#include "uta/horizontal.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::annotated;
using uta::test::pat;

namespace {

HorizontalAutomaton chain_ab() {
    HorizontalAutomaton H;
    H.hstates = {"p0", "p1", "p2"};
    H.transitions = {{"p0", pat("\"a\""), "p1"}, {"p1", pat("\"b\""), "p2"}};
    return H;
}

HorizontalAutomaton a_eq() {
    HorizontalAutomaton H;
    H.hstates = {"p0", "pa", "pb"};
    H.transitions = {{"p0", pat("\"a\""), "pa"},
                     {"p0", pat("\"b\""), "pb"},
                     {"pa", pat("\"b\""), "p0"},
                     {"pb", pat("\"a\""), "p0"}};
    return H;
}

} // namespace

TEST_CASE("descriptor satisfaction") {
    HorizontalAutomaton H = chain_ab();
    CHECK(h_descriptor_sat(H, "p0", "p2", annotated({{"b", {}}, {"a", {}}})));
    CHECK_FALSE(h_descriptor_sat(H, "p0", "p2", annotated({{"a", {}}, {"a", {}}})));
    CHECK(h_descriptor_sat(H, "p0", "p0", {}));
    CHECK_FALSE(h_descriptor_sat(H, "p0", "p2", annotated({{"a", {}}})));
}

TEST_CASE("order-sensitive consumption needs search") {
    // the {q1,q2} element must be spent on the q2 edge
    HorizontalAutomaton H;
    H.hstates = {"p0", "p1"};
    H.transitions = {{"p0", Filter::state("q1"), "p0"},
                     {"p0", Filter::state("q2"), "p1"},
                     {"p1", Filter::state("q1"), "p1"}};
    AnnotatedMultiset M = annotated({{"d", {"q1"}}, {"d", {"q1", "q2"}}});
    CHECK(h_descriptor_sat(H, "p0", "p1", M));
    CHECK_FALSE(h_descriptor_sat(H, "p0", "p1", annotated({{"d", {"q1"}}})));
}

TEST_CASE("exhaustive runs and greedy agree on a confluent automaton") {
    HorizontalAutomaton H = a_eq();
    const char* labels[] = {"a", "b"};
    // all multisets over {a,b} with <= 4 elements
    for (int na = 0; na <= 4; ++na)
        for (int nb = 0; na + nb <= 4; ++nb) {
            AnnotatedMultiset M;
            for (int i = 0; i < na; ++i) M.emplace_back(labels[0], StateSet{});
            for (int i = 0; i < nb; ++i) M.emplace_back(labels[1], StateSet{});
            auto ends = h_all_runs(H, "p0", M);
            REQUIRE(!ends.empty());
            RewriteEnd g = h_greedy_run(H, "p0", M);
            for (const RewriteEnd& e : ends) {
                CHECK(e.state == g.state);
                CHECK(e.consumed_all == g.consumed_all);
            }
            CHECK((g.state == "p0" && g.consumed_all) == (na == nb));
        }
}

TEST_CASE("failure sink") {
    HorizontalAutomaton H = chain_ab();
    auto ends = h_all_runs(H, "p0", annotated({{"x", {}}}));
    REQUIRE(ends.size() == 1);
    CHECK(ends[0].state == "");
    CHECK_FALSE(ends[0].consumed_all);
}

TEST_CASE("budget is a resource error") {
    HorizontalAutomaton H = a_eq();
    AnnotatedMultiset M;
    for (int i = 0; i < 6; ++i) M.emplace_back(i % 2 ? "a" : "b", StateSet{});
    CHECK_THROWS_AS(h_descriptor_sat(H, "p0", "p0", M, nullptr, 1), ResourceError);
}
