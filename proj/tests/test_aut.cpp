#include <doctest.h>

#include <functional>

#include "uta/aut.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::annotated;

namespace {

ArityConstraint arity(std::initializer_list<std::pair<const char*, const char*>> es) {
    ArityConstraint c;
    for (const auto& [d, q] : es) c.entries.emplace_back(d, q);
    return c;
}

// two-state automaton computing Boolean validity of and/not/true/false terms
RankedAutomaton bool_aut() {
    RankedAutomaton B;
    B.states = {"q0", "q1"};
    B.finals = {"q1"};
    auto rule = [&](RankedFormula f, const char* q) {
        B.rules.emplace_back(std::move(f), q);
    };
    rule(RankedFormula::app("true", {}), "q1");
    rule(RankedFormula::app("false", {}), "q0");
    for (const char* x : {"q0", "q1"})
        for (const char* y : {"q0", "q1"})
            rule(RankedFormula::app("and", {x, y}),
                 (std::string(x) == "q1" && std::string(y) == "q1") ? "q1" : "q0");
    rule(RankedFormula::app("not", {"q0"}), "q1");
    rule(RankedFormula::app("not", {"q1"}), "q0");
    return B;
}

RankedTerm term(std::string f, std::vector<RankedTerm> args = {}) {
    return RankedTerm{std::move(f), std::move(args)};
}

bool eval_term(const RankedTerm& t) {
    if (t.symbol == "true") return true;
    if (t.symbol == "false") return false;
    if (t.symbol == "and") return eval_term(t.args[0]) && eval_term(t.args[1]);
    return !eval_term(t.args[0]);
}

} // namespace

TEST_CASE("arity descriptors") {
    ArityFormula h = ArityFormula::make_atom(arity({{"a", "q"}}));
    CHECK(arity_descriptor_sat(h, annotated({{"a", {"q", "r"}}})));
    CHECK_FALSE(arity_descriptor_sat(h, annotated({{"a", {"q"}}, {"a", {"q"}}})));
    CHECK_FALSE(arity_descriptor_sat(h, annotated({{"a", {"r"}}})));
    // extra edges with other labels are fine
    CHECK(arity_descriptor_sat(h, annotated({{"a", {"q"}}, {"b", {}}})));

    ArityFormula leaf = ArityFormula::make_atom(ArityConstraint{});
    CHECK(arity_descriptor_sat(leaf, {}));
    CHECK_FALSE(arity_descriptor_sat(ArityFormula::f_not(leaf), {}));
}

TEST_CASE("ranked encoding") {
    RankedTerm t = term("and", {term("true"), term("false")});
    DataTree enc = encode_ranked_tree(t);
    CHECK(enc == DataTree::make({{"and", DataTree::leaf()},
                                 {"1", DataTree::make({{"true", DataTree::leaf()}})},
                                 {"2", DataTree::make({{"false", DataTree::leaf()}})}}));
    CHECK(encode_ranked_tree(term("c")) ==
          DataTree::make({{"c", DataTree::leaf()}}));
    CHECK_THROWS_AS(encode_ranked_tree(term("42")), Error);
}

TEST_CASE("encoded automaton matches direct evaluation") {
    Aut A = encode_ranked(bool_aut());
    CHECK(accepts(A, encode_ranked_tree(term("and", {term("true"), term("true")}))));
    CHECK_FALSE(accepts(A, encode_ranked_tree(term("and", {term("true"),
                                                           term("false")}))));

    // all terms of depth <= 3
    std::vector<RankedTerm> depth0 = {term("true"), term("false")};
    std::vector<RankedTerm> cur = depth0;
    for (int d = 0; d < 2; ++d) {
        std::vector<RankedTerm> next = cur;
        for (const RankedTerm& x : cur) {
            next.push_back(term("not", {x}));
            for (const RankedTerm& y : depth0)
                next.push_back(term("and", {x, y}));
        }
        cur = std::move(next);
    }
    for (const RankedTerm& t : cur)
        CHECK(accepts(A, encode_ranked_tree(t)) == eval_term(t));
}

TEST_CASE("evaluate visits each node once") {
    Aut A = encode_ranked(bool_aut());
    DataTree t =
        encode_ranked_tree(term("and", {term("not", {term("false")}), term("true")}));
    Stats stats;
    evaluate(A, t, &stats);
    CHECK(stats.nodes_visited == t.node_count());
}

TEST_CASE("well-formedness") {
    Aut A;
    A.cls = AutClass::Autp;
    A.states = {"q"};
    A.finals = {"q", "r"}; // final not among the states
    CHECK_THROWS_AS(check_well_formed(A), InvalidAutomaton);
}
