#include <doctest.h>

#include "uta/tree.hpp"

#include "helpers.hpp"

using namespace uta;
using uta::test::flat;

TEST_CASE("json ingestion") {
    CHECK(tree_from_json("{}").is_leaf());
    CHECK(tree_from_json(R"([{"a":{}},{"a":{}}])") == flat({"a", "a"}));
    // string shorthand: s stands for {s:{}}
    CHECK(tree_from_json(R"({"dir": "readme"})") ==
          DataTree::make({{"dir", flat({"readme"})}}));
    CHECK_THROWS_AS(tree_from_json("17"), ParseError);
    CHECK_THROWS_AS(tree_from_json(R"({"a": null})"), ParseError);
    CHECK_THROWS_AS(tree_from_json(R"([{"a":{},"b":{}}])"), ParseError);
    CHECK_THROWS_AS(tree_from_json("not json"), ParseError);
}

TEST_CASE("equality is multiset equality") {
    // the same tree parsed with different edge orders
    DataTree a = tree_from_json(R"({"x": {"u": {}, "v": {}}, "y": {}})");
    DataTree b = tree_from_json(R"({"y": {}, "x": {"v": {}, "u": {}}})");
    CHECK(a == b);
    CHECK(tree_compare(a, b) == 0);

    CHECK_FALSE(DataTree::leaf() == flat({"a"}));
    CHECK_FALSE(flat({"a"}) == flat({"a", "a"})); // multiplicity matters
}

TEST_CASE("canonical serialization round trip") {
    const char* docs[] = {
        "{}",
        R"([{"b":{}},{"a":{}},{"a":{}}])",
        R"({"x": {"u": {}, "v": {}}, "y": {}})",
    };
    for (const char* doc : docs) {
        DataTree t = tree_from_json(doc);
        CHECK(tree_from_json(tree_to_json(t)) == t);
    }
    // duplicates forced into the array encoding, sorted
    CHECK(tree_to_json(flat({"b", "a", "a"})) == R"([{"a":{}},{"a":{}},{"b":{}}])");
    CHECK(tree_to_json(flat({"a"})) == R"({"a":{}})");
}

TEST_CASE("arity") {
    CHECK(arity_of(DataTree::leaf()).empty());
    DataTree t = DataTree::make({{"a", DataTree::leaf()}, {"a", flat({"b"})}});
    CHECK(arity_of(t) == Arity{"a", "a"});
    CHECK(t.node_count() == 4);
}
