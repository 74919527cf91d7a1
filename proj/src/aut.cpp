#include "uta/aut.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace uta {

ArityFormula ArityFormula::make_atom(ArityConstraint c) {
    ArityFormula f;
    f.kind = Kind::Atom;
    f.atom = std::move(c);
    return f;
}

ArityFormula ArityFormula::f_and(ArityFormula a, ArityFormula b) {
    ArityFormula f;
    f.kind = Kind::And;
    f.left = std::make_shared<ArityFormula>(std::move(a));
    f.right = std::make_shared<ArityFormula>(std::move(b));
    return f;
}

ArityFormula ArityFormula::f_or(ArityFormula a, ArityFormula b) {
    ArityFormula f;
    f.kind = Kind::Or;
    f.left = std::make_shared<ArityFormula>(std::move(a));
    f.right = std::make_shared<ArityFormula>(std::move(b));
    return f;
}

ArityFormula ArityFormula::f_not(ArityFormula a) {
    ArityFormula f;
    f.kind = Kind::Not;
    f.left = std::make_shared<ArityFormula>(std::move(a));
    return f;
}

namespace {

bool match_entries(const std::vector<std::pair<DataValue, StateId>>& entries,
                   const AnnotatedMultiset& M, std::vector<char>& used,
                   std::size_t idx) {
    if (idx == entries.size()) {
        // remainder must avoid every listed label
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (used[j]) continue;
            for (const auto& [d, q] : entries)
                if (M[j].first == d) return false;
        }
        return true;
    }
    const auto& [d, q] = entries[idx];
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (used[j]) continue;
        if (M[j].first != d || !M[j].second.count(q)) continue;
        used[j] = 1;
        if (match_entries(entries, M, used, idx + 1)) return true;
        used[j] = 0;
    }
    return false;
}

bool arity_atom_sat(const ArityConstraint& c, const AnnotatedMultiset& M) {
    if (c.entries.empty()) return M.empty(); // leaf rule
    if (c.entries.size() > M.size()) return false;
    std::vector<char> used(M.size(), 0);
    return match_entries(c.entries, M, used, 0);
}

} // namespace

bool arity_descriptor_sat(const ArityFormula& h, const AnnotatedMultiset& M) {
    switch (h.kind) {
        case ArityFormula::Kind::Atom: return arity_atom_sat(h.atom, M);
        case ArityFormula::Kind::And:
            return arity_descriptor_sat(*h.left, M) && arity_descriptor_sat(*h.right, M);
        case ArityFormula::Kind::Or:
            return arity_descriptor_sat(*h.left, M) || arity_descriptor_sat(*h.right, M);
        case ArityFormula::Kind::Not: return !arity_descriptor_sat(*h.left, M);
    }
    throw Error("unreachable");
}

// ----------------------------------------------------------- well-formed

namespace {

void check_support(const StateSet& support, const StateSet& states,
                   const char* what) {
    for (const StateId& q : support)
        if (!states.count(q))
            throw InvalidAutomaton(std::string(what) + " references unknown state: " + q);
}

void collect_arity_states(const ArityFormula& h, StateSet& out) {
    switch (h.kind) {
        case ArityFormula::Kind::Atom:
            for (const auto& [d, q] : h.atom.entries) out.insert(q);
            return;
        case ArityFormula::Kind::And:
        case ArityFormula::Kind::Or:
            collect_arity_states(*h.left, out);
            collect_arity_states(*h.right, out);
            return;
        case ArityFormula::Kind::Not: collect_arity_states(*h.left, out); return;
    }
}

} // namespace

void check_well_formed(const Aut& A) {
    for (const StateId& q : A.finals)
        if (!A.states.count(q))
            throw InvalidAutomaton("final state not declared: " + q);
    bool needs_h = A.cls == AutClass::Auta || A.cls == AutClass::Autc;
    if (needs_h && !A.horizontal)
        throw InvalidAutomaton("rewriting class requires a horizontal automaton");
    if (A.horizontal) {
        for (const HTransition& t : A.horizontal->transitions) {
            if (!A.horizontal->has_hstate(t.from) || !A.horizontal->has_hstate(t.to))
                throw InvalidAutomaton("horizontal transition uses unknown hstate");
            check_support(filter_support(t.guard), A.states, "horizontal guard");
        }
    }
    if (A.cls == AutClass::Autc && !A.horizontal->has_hstate(A.initial_h))
        throw InvalidAutomaton("designated initial hstate not declared: " + A.initial_h);
    if (A.cls == AutClass::AutoOrdered)
        for (const auto& [name, f] : A.order)
            check_support(filter_support(f), A.states, "order filter");
    for (const Rule& r : A.rules) {
        if (!A.states.count(r.target))
            throw InvalidAutomaton("rule target not declared: " + r.target);
        switch (A.cls) {
            case AutClass::Autp:
                if (!r.formula) throw InvalidAutomaton("autp rule missing formula");
                check_support(presburger_support(*r.formula), A.states, "rule formula");
                break;
            case AutClass::Auta:
            case AutClass::Autc:
                if (!A.horizontal->has_hstate(r.h_from) ||
                    !A.horizontal->has_hstate(r.h_to))
                    throw InvalidAutomaton("rule descriptor uses unknown hstate");
                if (A.cls == AutClass::Autc && r.h_from != A.initial_h)
                    throw InvalidAutomaton(
                        "confluent-class rule must start at the designated hstate");
                break;
            case AutClass::AutoOrdered:
                if (!r.dfa) throw InvalidAutomaton("ordered rule missing dfa");
                if (r.dfa->alphabet != static_cast<int>(A.order.size()))
                    throw InvalidAutomaton("rule dfa alphabet does not match the order");
                break;
            case AutClass::Arity:
                if (!r.arity) throw InvalidAutomaton("arity rule missing constraint");
                StateSet s;
                collect_arity_states(*r.arity, s);
                check_support(s, A.states, "arity constraint");
                break;
        }
    }
}

// ------------------------------------------------------------- evaluation

int classify_ordered(const Aut& A, const DataValue& d, const StateSet& Q) {
    for (std::size_t i = 0; i < A.order.size(); ++i)
        if (filter_eval(A.order[i].second, d, Q)) return static_cast<int>(i);
    return -1;
}

namespace {

StateSet eval_node(const Aut& A, const AnnotatedMultiset& M, Stats* stats) {
    StateSet out;
    switch (A.cls) {
        case AutClass::Autp:
            for (const Rule& r : A.rules)
                if (presburger_holds(*r.formula, M)) out.insert(r.target);
            break;
        case AutClass::Auta:
            for (const Rule& r : A.rules)
                if (h_descriptor_sat(*A.horizontal, r.h_from, r.h_to, M, stats,
                                     A.h_budget))
                    out.insert(r.target);
            break;
        case AutClass::Autc: {
            // greedy run per distinct start state; confluence makes the
            // element choice irrelevant
            std::map<HStateId, RewriteEnd> ends;
            for (const Rule& r : A.rules) {
                auto it = ends.find(r.h_from);
                if (it == ends.end())
                    it = ends.emplace(r.h_from,
                                      h_greedy_run(*A.horizontal, r.h_from, M, stats))
                             .first;
                if (it->second.consumed_all && it->second.state == r.h_to)
                    out.insert(r.target);
            }
            break;
        }
        case AutClass::AutoOrdered: {
            std::vector<int> word;
            for (const auto& [d, Q] : M) {
                int a = classify_ordered(A, d, Q);
                if (a < 0) return {}; // unclassified edge: no rule fires
                word.push_back(a);
            }
            std::sort(word.begin(), word.end());
            for (const Rule& r : A.rules) {
                int s = r.dfa->initial;
                for (int a : word) {
                    s = r.dfa->next[static_cast<std::size_t>(s)]
                                   [static_cast<std::size_t>(a)];
                    if (stats) ++stats->h_steps;
                }
                if (r.dfa->accepting[static_cast<std::size_t>(s)]) out.insert(r.target);
            }
            break;
        }
        case AutClass::Arity:
            for (const Rule& r : A.rules)
                if (arity_descriptor_sat(*r.arity, M)) out.insert(r.target);
            break;
    }
    return out;
}

} // namespace

StateSet evaluate(const Aut& A, const DataTree& t, Stats* stats) {
    if (stats) ++stats->nodes_visited;
    AnnotatedMultiset M;
    M.reserve(t.edges.size());
    for (const auto& [d, child] : t.edges)
        M.emplace_back(d, evaluate(A, child, stats));
    return eval_node(A, M, stats);
}

bool accepts(const Aut& A, const DataTree& t, Stats* stats) {
    StateSet result = evaluate(A, t, stats);
    for (const StateId& q : result)
        if (A.finals.count(q)) return true;
    return false;
}

// ------------------------------------------------- ranked-automaton coding

namespace {

const std::string& check_symbol(const std::string& f) {
    bool all_digits = !f.empty();
    for (char c : f)
        if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
    if (all_digits)
        throw Error("all-digit function symbols are reserved for positions: " + f);
    return f;
}

ArityFormula translate(const RankedFormula& psi, const StateId& leaf) {
    switch (psi.kind) {
        case RankedFormula::Kind::App: {
            ArityConstraint c;
            c.entries.emplace_back(check_symbol(psi.symbol), leaf);
            for (std::size_t i = 0; i < psi.args.size(); ++i)
                c.entries.emplace_back(std::to_string(i + 1), psi.args[i]);
            return ArityFormula::make_atom(std::move(c));
        }
        case RankedFormula::Kind::And:
            return ArityFormula::f_and(translate(*psi.left, leaf),
                                       translate(*psi.right, leaf));
        case RankedFormula::Kind::Not:
            return ArityFormula::f_not(translate(*psi.left, leaf));
    }
    throw Error("unreachable");
}

} // namespace

RankedFormula RankedFormula::app(std::string symbol, std::vector<StateId> args) {
    RankedFormula f;
    f.kind = Kind::App;
    f.symbol = std::move(symbol);
    f.args = std::move(args);
    return f;
}

RankedFormula RankedFormula::f_and(RankedFormula a, RankedFormula b) {
    RankedFormula f;
    f.kind = Kind::And;
    f.left = std::make_shared<RankedFormula>(std::move(a));
    f.right = std::make_shared<RankedFormula>(std::move(b));
    return f;
}

RankedFormula RankedFormula::f_not(RankedFormula a) {
    RankedFormula f;
    f.kind = Kind::Not;
    f.left = std::make_shared<RankedFormula>(std::move(a));
    return f;
}

DataTree encode_ranked_tree(const RankedTerm& t) {
    std::vector<std::pair<DataValue, DataTree>> edges;
    edges.emplace_back(check_symbol(t.symbol), DataTree::leaf());
    for (std::size_t i = 0; i < t.args.size(); ++i)
        edges.emplace_back(std::to_string(i + 1), encode_ranked_tree(t.args[i]));
    return DataTree::make(std::move(edges));
}

Aut encode_ranked(const RankedAutomaton& B) {
    StateId leaf = "q_leaf";
    while (B.states.count(leaf)) leaf += "_";
    Aut A;
    A.cls = AutClass::Arity;
    A.states = B.states;
    A.states.insert(leaf);
    A.finals = B.finals;
    Rule leaf_rule;
    leaf_rule.arity = std::make_shared<ArityFormula>(
        ArityFormula::make_atom(ArityConstraint{}));
    leaf_rule.target = leaf;
    A.rules.push_back(std::move(leaf_rule));
    for (const auto& [psi, q] : B.rules) {
        Rule r;
        r.arity = std::make_shared<ArityFormula>(translate(psi, leaf));
        r.target = q;
        A.rules.push_back(std::move(r));
    }
    return A;
}

} // namespace uta
