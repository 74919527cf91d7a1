// Python bindings for the core operations: schema loading, tree parsing,
// evaluation, the decision suite, determinization and reordering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uta/autc.hpp"
#include "uta/auto_ordered.hpp"
#include "uta/autp.hpp"
#include "uta/decide.hpp"
#include "uta/oracle.hpp"
#include "uta/schema.hpp"

namespace py = pybind11;
using namespace uta;

namespace {

std::string answer_str(Decision::Answer a) {
    switch (a) {
        case Decision::Answer::Yes: return "yes";
        case Decision::Answer::No: return "no";
        case Decision::Answer::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace

PYBIND11_MODULE(_uta, m) {
    m.doc() = "automata over unordered, edge-labelled data trees";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidAutomaton>(m, "InvalidAutomaton", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<HardnessError>(m, "HardnessError", PyExc_RuntimeError);

    py::class_<DataTree>(m, "Tree")
        .def_static("from_json", [](const std::string& s) { return tree_from_json(s); },
                    py::arg("text"))
        .def("to_json", [](const DataTree& t) { return tree_to_json(t); })
        .def("node_count", &DataTree::node_count)
        .def("is_leaf", &DataTree::is_leaf)
        .def("__eq__", [](const DataTree& a, const DataTree& b) { return a == b; })
        .def("__lt__", [](const DataTree& a, const DataTree& b) { return a < b; })
        .def("__hash__", [](const DataTree& t) {
            return py::hash(py::str(tree_to_json(t)));
        })
        .def("__repr__", [](const DataTree& t) { return "Tree(" + tree_to_json(t) + ")"; });

    py::class_<Aut>(m, "Automaton")
        .def_property_readonly("states",
                               [](const Aut& a) {
                                   return std::vector<StateId>(a.states.begin(),
                                                               a.states.end());
                               })
        .def_property_readonly("finals",
                               [](const Aut& a) {
                                   return std::vector<StateId>(a.finals.begin(),
                                                               a.finals.end());
                               })
        .def_property_readonly("kind",
                               [](const Aut& a) -> std::string {
                                   switch (a.cls) {
                                       case AutClass::Autp: return "autp";
                                       case AutClass::Auta: return "auta";
                                       case AutClass::Autc: return "autc";
                                       case AutClass::AutoOrdered: return "auto";
                                       case AutClass::Arity: return "arity";
                                   }
                                   return "?";
                               })
        .def("__repr__", [](const Aut& a) {
            return "Automaton(" + std::to_string(a.states.size()) + " states, " +
                   std::to_string(a.rules.size()) + " rules)";
        });

    m.def("load",
          [](const std::string& text, bool trust_confluent) {
              return load_schema(text, LoadOptions{trust_confluent});
          },
          py::arg("text"), py::arg("trust_confluent") = false,
          "Parse a schema document (JSON string).");
    m.def("load_file",
          [](const std::string& path, bool trust_confluent) {
              return load_schema_file(path, LoadOptions{trust_confluent});
          },
          py::arg("path"), py::arg("trust_confluent") = false);
    m.def("save", &save_schema, py::arg("automaton"),
          "Serialize an automaton back to the schema format.");

    m.def("evaluate",
          [](const Aut& A, const DataTree& t) {
              StateSet s = evaluate(A, t);
              return std::vector<StateId>(s.begin(), s.end());
          },
          py::arg("automaton"), py::arg("tree"),
          "States the tree evaluates to (alternating semantics).");
    m.def("accepts", [](const Aut& A, const DataTree& t) { return accepts(A, t); },
          py::arg("automaton"), py::arg("tree"));

    m.def("decide",
          [](const std::string& problem, const Aut& A, const Aut* B,
             std::uint64_t budget, bool assume_vdet) {
              Decision d = decide_problem(problem, A, B,
                                          DecideOptions{budget, assume_vdet});
              py::object witness = py::none();
              if (d.witness) witness = py::cast(*d.witness);
              return py::make_tuple(answer_str(d.answer), witness);
          },
          py::arg("problem"), py::arg("automaton"), py::arg("second") = nullptr,
          py::arg("budget") = 0, py::arg("assume_vdet") = false,
          "Decide empty/universal/disjoint/included/equivalent; returns\n"
          "(answer, witness) with answer in {'yes','no','unknown'}. Raises\n"
          "HardnessError where only brute-force search is available.");

    m.def("determinize",
          [](const Aut& A) {
              if (A.cls != AutClass::Autp)
                  throw Error("determinize applies to the Presburger class only");
              return autp_determinize(A);
          },
          py::arg("automaton"));
    m.def("reorder",
          [](const Aut& A, const std::vector<std::string>& order) {
              if (A.cls != AutClass::AutoOrdered)
                  throw Error("reorder applies to the ordered class only");
              return reorder(A, order);
          },
          py::arg("automaton"), py::arg("order"));
    m.def("check_confluent",
          [](const Aut& A) {
              ConfluenceReport r = autc_check(A);
              return py::make_tuple(r.ok(), r.reason);
          },
          py::arg("automaton"),
          "(provable, reason) for the confluent-class diamond check.");

    m.def("brute_accepts",
          [](const Aut& A, const DataTree& t) { return brute_membership(A, t); },
          py::arg("automaton"), py::arg("tree"),
          "Reference semantics by exhaustive search (slow; for cross-checks).");
}
