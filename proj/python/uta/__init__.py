from ._uta import (
    Automaton,
    HardnessError,
    InvalidAutomaton,
    ParseError,
    ResourceError,
    Tree,
    accepts,
    brute_accepts,
    check_confluent,
    decide,
    determinize,
    evaluate,
    load,
    load_file,
    reorder,
    save,
)

__all__ = [
    "Automaton",
    "HardnessError",
    "InvalidAutomaton",
    "ParseError",
    "ResourceError",
    "Tree",
    "accepts",
    "brute_accepts",
    "check_confluent",
    "decide",
    "determinize",
    "evaluate",
    "load",
    "load_file",
    "reorder",
    "save",
]
