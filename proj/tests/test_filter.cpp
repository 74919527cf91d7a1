#include <doctest.h>

#include "uta/filter.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::pat;

TEST_CASE("evaluation") {
    Filter f = Filter::f_and(pat("*\".tex\""), Filter::state("main"));
    CHECK(filter_eval(f, "main.tex", {"main"}));
    CHECK_FALSE(filter_eval(f, "main.tex", {"file"}));
    CHECK_FALSE(filter_eval(f, "main.txt", {"main"}));

    CHECK(filter_eval(Filter::f_not(Filter::state("q")), "x", {}));
    CHECK(filter_eval(pat("(*)\".dvi\" + (*)\".pdf\" + (*)\".aux\""), "paper.aux", {}));
}

TEST_CASE("support") {
    CHECK(filter_support(pat("\"a\"")).empty());
    Filter f = Filter::f_and(Filter::state("q1"), Filter::f_not(Filter::state("q2")));
    CHECK(filter_support(f) == StateSet{"q1", "q2"});
    CHECK(filter_support(Filter::f_and(pat("*\".tex\""),
                                       Filter::f_not(Filter::state("file")))) ==
          StateSet{"file"});
}

TEST_CASE("singleton satisfiability") {
    Filter f = Filter::f_and(pat("*\".tex\""), Filter::state("main"));
    auto w = filter_singleton_sat(f, {"main", "file"});
    REQUIRE(w.has_value());
    CHECK(w->states == StateSet{"main"});
    CHECK(filter_eval(f, w->value, w->states));

    CHECK_FALSE(filter_singleton_sat(
                    Filter::f_and(Filter::state("q"), Filter::f_not(Filter::state("q"))),
                    {"q"})
                    .has_value());
    CHECK_FALSE(filter_singleton_sat(Filter::f_and(pat("\"a\""), pat("\"b\"")), {})
                    .has_value());
}

TEST_CASE("atomization") {
    SUBCASE("one pattern, no states") {
        auto atoms = atomize({pat("\"a\"")}, {});
        REQUIRE(atoms.size() == 2);
        CHECK(atoms[0].signs == std::vector<char>{1});
        CHECK(atoms[0].witness.value == "a");
        CHECK(atoms[1].signs == std::vector<char>{0});
        CHECK(atoms[1].witness.value != "a");
    }
    SUBCASE("tex vs compiled: the ++ atom is empty") {
        auto atoms = atomize(
            {pat("*\".tex\""), pat("(*)\".dvi\" + (*)\".pdf\" + (*)\".aux\"")}, {});
        CHECK(atoms.size() == 3);
    }
    SUBCASE("state test") {
        auto atoms = atomize({Filter::state("q")}, {"q"});
        REQUIRE(atoms.size() == 2);
        CHECK(atoms[0].witness.states == StateSet{"q"});
        CHECK(atoms[1].witness.states.empty());
    }
    SUBCASE("exhaustive and disjoint over samples") {
        std::vector<Filter> fs = {pat("*\".tex\""), pat("\"a\""), Filter::state("q")};
        auto atoms = atomize(fs, {"q", "r"});
        for (const DataValue& d :
             {"a", "b", "x.tex", "a.tex", "", ".dvi", "paper.aux"})
            for (const StateSet& Q : {StateSet{}, StateSet{"q"}, StateSet{"r"}}) {
                int hits = 0;
                for (const Atom& a : atoms)
                    if (atom_matches(fs, a, d, Q)) ++hits;
                CHECK(hits == 1);
            }
        for (const Atom& a : atoms) CHECK(atom_matches(fs, a, a.witness.value,
                                                       a.witness.states));
    }
}

TEST_CASE("filter reduction under a fixed state set") {
    Filter f = Filter::f_and(pat("*\".tex\""), Filter::f_not(Filter::state("file")));
    PatternAcceptor with = filter_reduce(f, {"file"});
    PatternAcceptor without = filter_reduce(f, {});
    CHECK(pattern_empty(with));
    CHECK(without.accepts("x.tex"));
    CHECK_FALSE(without.accepts("x.dvi"));
}

TEST_CASE("surface syntax round trip") {
    const char* sources[] = {
        "pattern(\"a\")",
        "pattern(*\".tex\") & !file",
        "(q1 | q2) & pattern(\"a\"+\"b\")",
    };
    for (const char* src : sources) {
        Filter f = parse_filter(src);
        CHECK(filter_equal(f, parse_filter(filter_to_string(f))));
    }
    std::vector<std::pair<std::string, Regex>> named = {
        {"tex", parse_regex("*\".tex\"")}};
    Filter f = parse_filter("pattern(tex) & main", named);
    CHECK(filter_eval(f, "a.tex", {"main"}));
    CHECK_THROWS_AS(parse_filter("pattern(nope)", named), ParseError);
    CHECK_THROWS_AS(parse_filter("q &&& r"), ParseError);
}
