import json

import pytest

import uta

AB_EQ = json.dumps(
    {
        "format": 1,
        "class": "autp",
        "states": ["q"],
        "final": ["q"],
        "rules": [
            {"descriptor": 'count(pattern("a")) == count(pattern("b"))', "state": "q"}
        ],
    }
)

CONTRADICTION = json.dumps(
    {
        "format": 1,
        "class": "autp",
        "states": ["q"],
        "final": ["q"],
        "rules": [
            {
                "descriptor": "(1 <= count(pattern(*))) & (count(pattern(*)) <= 0)",
                "state": "q",
            }
        ],
    }
)


def auto_schema(limit):
    return json.dumps(
        {
            "format": 1,
            "class": "auto",
            "states": ["q"],
            "final": ["q"],
            "order": [{"name": "a", "filter": 'pattern("a")'}],
            "rules": [{"descriptor": f"count(a) <= {limit}", "state": "q"}],
        }
    )


def tree(text):
    return uta.Tree.from_json(text)


def test_membership():
    A = uta.load(AB_EQ)
    assert A.kind == "autp"
    assert uta.accepts(A, tree('{"a": {}, "b": {}}'))
    assert not uta.accepts(A, tree('[{"a": {}}, {"a": {}}, {"b": {}}]'))
    assert uta.accepts(A, tree("{}"))


def test_evaluate_matches_brute_force():
    A = uta.load(AB_EQ)
    for doc in ["{}", '{"a": {}}', '{"a": {"b": {}}, "b": {}}']:
        t = tree(doc)
        assert uta.accepts(A, t) == uta.brute_accepts(A, t)


def test_decide_empty():
    answer, witness = uta.decide("empty", uta.load(CONTRADICTION))
    assert answer == "yes"
    assert witness is None


def test_decide_included_with_witness():
    a2, a3 = uta.load(auto_schema(2)), uta.load(auto_schema(3))
    assert uta.decide("included", a2, a3)[0] == "yes"
    answer, witness = uta.decide("included", a3, a2)
    assert answer == "no"
    assert witness.node_count() == 4
    assert witness.to_json() == '[{"a":{}},{"a":{}},{"a":{}}]'


def test_hardness_gate():
    with pytest.raises(uta.HardnessError):
        uta.decide("universal", uta.load(AB_EQ))


def test_determinize_roundtrip():
    D = uta.determinize(uta.load(AB_EQ))
    D2 = uta.load(uta.save(D))
    t = tree('{"a": {}, "b": {}}')
    assert uta.accepts(D2, t)
    assert len(uta.evaluate(D2, t)) == 1


def test_tree_canonical_json():
    t = tree('[{"b": {}}, {"a": {}}, {"a": {}}]')
    assert t.to_json() == '[{"a":{}},{"a":{}},{"b":{}}]'
    assert t == tree('[{"a": {}}, {"b": {}}, {"a": {}}]')
