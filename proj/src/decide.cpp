#include "uta/decide.hpp"

#include <algorithm>

#include "uta/auta.hpp"
#include "uta/autc.hpp"
#include "uta/auto_ordered.hpp"
#include "uta/autp.hpp"
#include "uta/oracle.hpp"

namespace uta {

std::vector<Filter> all_filters(const Aut& A) {
    std::vector<Filter> fs;
    auto add = [&](const Filter& f) {
        for (const Filter& g : fs)
            if (filter_equal(f, g)) return;
        fs.push_back(f);
    };
    switch (A.cls) {
        case AutClass::Autp:
            for (const Rule& r : A.rules)
                for (const Filter& f : presburger_filters(*r.formula)) add(f);
            break;
        case AutClass::Auta:
        case AutClass::Autc:
            for (const Filter& f : guard_filters(*A.horizontal)) add(f);
            break;
        case AutClass::AutoOrdered:
            for (const auto& [name, f] : A.order) add(f);
            break;
        case AutClass::Arity:
            break;
    }
    return fs;
}

std::vector<DataValue> label_universe(const std::vector<const Aut*>& as) {
    std::vector<Filter> fs;
    StateSet states;
    for (const Aut* A : as) {
        states.insert(A->states.begin(), A->states.end());
        for (const Filter& f : all_filters(*A)) {
            bool seen = false;
            for (const Filter& g : fs)
                if (filter_equal(f, g)) {
                    seen = true;
                    break;
                }
            if (!seen) fs.push_back(f);
        }
    }
    std::vector<DataValue> labels;
    for (const Atom& a : atomize(fs, states))
        if (std::find(labels.begin(), labels.end(), a.witness.value) == labels.end())
            labels.push_back(a.witness.value);
    if (labels.empty()) labels.push_back("a");
    return labels;
}

namespace {

void require_vdet(const Aut& A, const DecideOptions& opts) {
    if (opts.assume_vdet) return;
    std::vector<DataTree> corpus = enum_trees_over(label_universe({&A}), 4, 200);
    if (!vertically_deterministic(A, corpus))
        throw Error("automaton is not vertically deterministic on the probe corpus; "
                    "this procedure requires vertical determinism");
}

Decision yes_no(bool yes) {
    Decision d;
    d.answer = yes ? Decision::Answer::Yes : Decision::Answer::No;
    return d;
}

Decision decide_autp(std::string_view problem, const Aut& A, const DecideOptions& opts) {
    if (problem == "empty") {
        EmptinessResult r = autp_empty(A, opts.budget);
        Decision d;
        d.answer = r.verdict == EmptinessVerdict::Empty      ? Decision::Answer::Yes
                   : r.verdict == EmptinessVerdict::NonEmpty ? Decision::Answer::No
                                                             : Decision::Answer::Unknown;
        d.witness = r.witness;
        return d;
    }
    throw HardnessError("exact " + std::string(problem) +
                        " for the Presburger class is PSPACE-hard");
}

Decision decide_auta(std::string_view problem, const Aut& A, const DecideOptions& opts) {
    if (problem == "empty") {
        require_vdet(A, opts);
        return yes_no(auta_empty(A));
    }
    throw HardnessError("exact " + std::string(problem) +
                        " for the general rewriting class is " +
                        (problem == "universal" ? "PSPACE-hard" : "coNP-hard"));
}

Decision decide_autc(std::string_view problem, const Aut& A, const Aut* B,
                     const DecideOptions& opts) {
    require_vdet(A, opts);
    if (problem == "empty") return yes_no(auta_empty(A));
    if (problem == "universal") return yes_no(autc_universal(A));
    require_vdet(*B, opts);
    if (problem == "disjoint") return autc_disjoint(A, *B, opts.budget);
    if (problem == "included") return autc_inclusion(A, *B, opts.budget);
    Decision fwd = autc_inclusion(A, *B, opts.budget);
    if (fwd.answer == Decision::Answer::No) return fwd;
    Decision bwd = autc_inclusion(*B, A, opts.budget);
    if (bwd.answer == Decision::Answer::No) return bwd;
    Decision d;
    d.answer = (fwd.answer == Decision::Answer::Yes && bwd.answer == Decision::Answer::Yes)
                   ? Decision::Answer::Yes
                   : Decision::Answer::Unknown;
    return d;
}

Decision decide_auto(std::string_view problem, const Aut& A, const Aut* B,
                     const DecideOptions& opts) {
    require_vdet(A, opts);
    if (B) require_vdet(*B, opts);
    AutoProblem p;
    if (problem == "empty") p = AutoProblem::Empty;
    else if (problem == "universal") p = AutoProblem::Universal;
    else if (problem == "disjoint") p = AutoProblem::Disjoint;
    else if (problem == "included") p = AutoProblem::Included;
    else p = AutoProblem::Equivalent;
    return auto_decide(p, A, B);
}

} // namespace

Decision decide_problem(std::string_view problem, const Aut& A, const Aut* B,
                        const DecideOptions& opts) {
    bool binary =
        problem == "disjoint" || problem == "included" || problem == "equivalent";
    bool unary = problem == "empty" || problem == "universal";
    if (!binary && !unary) throw Error("unknown problem: " + std::string(problem));
    if (binary && !B) throw Error(std::string(problem) + " needs two automata");
    if (!binary && B) throw Error(std::string(problem) + " takes a single automaton");
    if (B && A.cls != B->cls)
        throw Error("exact decisions require automata of the same class");
    switch (A.cls) {
        case AutClass::Autp: return decide_autp(problem, A, opts);
        case AutClass::Auta: return decide_auta(problem, A, opts);
        case AutClass::Autc: return decide_autc(problem, A, B, opts);
        case AutClass::AutoOrdered: return decide_auto(problem, A, B, opts);
        case AutClass::Arity: break;
    }
    throw Error("unsupported class");
}

} // namespace uta
