#include <doctest.h>

#include "uta/autp.hpp"
#include "uta/decide.hpp"
#include "uta/oracle.hpp"
#include "uta/schema.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::flat;

namespace {

const std::string kFixtures = UTA_FIXTURE_DIR;

Aut latex_aut() { return load_schema_file(kFixtures + "/latex.autp.json"); }

DataTree sample_project() {
    return tree_from_json(R"({
        "main.tex": {"\\documentclass{article}": {}},
        "chap1.tex": {"\\chapter{One}": {}},
        "notes.txt": {"remember": {}}
    })");
}

Aut single_rule(const std::string& formula) {
    Aut A;
    A.cls = AutClass::Autp;
    A.states = {"q"};
    A.finals = {"q"};
    Rule r;
    r.formula = std::make_shared<PresburgerFormula>(parse_presburger(formula));
    r.target = "q";
    A.rules.push_back(std::move(r));
    return A;
}

} // namespace

TEST_CASE("membership") {
    Aut A = latex_aut();
    CHECK(autp_membership(A, sample_project()));

    // a compiled artifact next to the sources breaks cleanness
    DataTree dirty = sample_project();
    dirty.edges.emplace_back("paper.aux", flat({"x"}));
    dirty = DataTree::make(std::move(dirty.edges));
    CHECK_FALSE(autp_membership(A, dirty));

    Aut leaf_only = single_rule("count(pattern(*)) == 0");
    CHECK(autp_membership(leaf_only, DataTree::leaf()));
    CHECK_FALSE(autp_membership(leaf_only, flat({"a"})));
}

TEST_CASE("alternation: main and file overlap") {
    Aut A = latex_aut();
    DataTree main_tex = tree_from_json(R"({"\\documentclass{article}": {}})");
    StateSet s = evaluate(A, main_tex);
    CHECK(s == StateSet{"file", "main"});
}

TEST_CASE("determinization") {
    SUBCASE("overlapping rules merge into subset states") {
        Aut A;
        A.cls = AutClass::Autp;
        A.states = {"q1", "q2"};
        A.finals = {"q1"};
        Rule r1;
        r1.formula = std::make_shared<PresburgerFormula>(
            parse_presburger("count(pattern(\"a\")) >= 1"));
        r1.target = "q1";
        Rule r2;
        r2.formula = std::make_shared<PresburgerFormula>(
            parse_presburger("count(pattern(\"b\")) >= 1"));
        r2.target = "q2";
        A.rules = {r1, r2};

        CHECK(evaluate(A, flat({"a", "b"})) == StateSet{"q1", "q2"});
        Aut D = autp_determinize(A);
        CHECK(evaluate(D, flat({"a", "b"})) == StateSet{"{q1,q2}"});
        CHECK(evaluate(D, flat({"a"})) == StateSet{"{q1}"});
        CHECK(evaluate(D, DataTree::leaf()).size() == 1);
    }
    SUBCASE("latex automaton: language preserved, evaluation deterministic") {
        Aut A = latex_aut();
        Aut D = autp_determinize(A);
        auto corpus = enum_trees_over(label_universe({&A}), 3, 120);
        for (const DataTree& t : corpus) {
            CHECK(evaluate(D, t).size() == 1);
            CHECK(accepts(D, t) == accepts(A, t));
        }
        CHECK(accepts(D, sample_project()));
    }
}

TEST_CASE("emptiness") {
    SUBCASE("leaf language") {
        EmptinessResult r = autp_empty(single_rule("count(pattern(*)) == 0"));
        REQUIRE(r.verdict == EmptinessVerdict::NonEmpty);
        CHECK(*r.witness == DataTree::leaf());
    }
    SUBCASE("contradiction") {
        EmptinessResult r = autp_empty(
            single_rule("(1 <= count(pattern(*))) & (count(pattern(*)) <= 0)"));
        CHECK(r.verdict == EmptinessVerdict::Empty);
        CHECK_FALSE(r.witness.has_value());
    }
    SUBCASE("latex automaton is nonempty with a small witness") {
        Aut A = latex_aut();
        EmptinessResult r = autp_empty(A);
        REQUIRE(r.verdict == EmptinessVerdict::NonEmpty);
        CHECK(autp_membership(A, *r.witness));
        CHECK(r.witness->node_count() <= 3);
    }
    SUBCASE("outside the fragment exhaustion stays unknown") {
        // #a == #b is satisfied (e.g. by the leaf), so never Unknown here;
        // force the issue with an unsatisfiable non-fragment formula
        EmptinessResult r = autp_empty(single_rule(
            "(count(pattern(\"a\")) + 1 <= count(pattern(\"b\"))) & "
            "(count(pattern(\"b\")) + 1 <= count(pattern(\"a\")))"));
        CHECK(r.verdict == EmptinessVerdict::Unknown);
    }
}
