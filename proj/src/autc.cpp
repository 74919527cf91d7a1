#include "uta/autc.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace uta {

std::vector<Filter> guard_filters(const HorizontalAutomaton& H,
                                  std::vector<std::size_t>* transition_guard) {
    std::vector<Filter> filters;
    if (transition_guard) transition_guard->clear();
    for (const HTransition& t : H.transitions) {
        std::size_t idx = filters.size();
        for (std::size_t i = 0; i < filters.size(); ++i)
            if (filter_equal(filters[i], t.guard)) {
                idx = i;
                break;
            }
        if (idx == filters.size()) filters.push_back(t.guard);
        if (transition_guard) transition_guard->push_back(idx);
    }
    return filters;
}

// ------------------------------------------------------------- confluence

namespace {

// Transition function on atoms; nullopt = no applicable transition.
// Fails (second = false) when two transitions with different targets are
// enabled on the same atom.
struct AtomDelta {
    std::map<HStateId, std::vector<std::optional<HStateId>>> delta;
    bool deterministic = true;
    HStateId bad_state;
    std::size_t bad_atom = 0;
    HStateId bad_a, bad_b;
};

AtomDelta build_delta(const HorizontalAutomaton& H,
                      const std::vector<std::size_t>& transition_guard,
                      const std::vector<Atom>& atoms) {
    AtomDelta d;
    for (const HStateId& p : H.hstates) {
        std::vector<std::optional<HStateId>> row(atoms.size());
        for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
            for (std::size_t ti = 0; ti < H.transitions.size(); ++ti) {
                if (H.transitions[ti].from != p) continue;
                if (!atoms[ai].signs[transition_guard[ti]]) continue;
                if (row[ai] && *row[ai] != H.transitions[ti].to) {
                    d.deterministic = false;
                    d.bad_state = p;
                    d.bad_atom = ai;
                    d.bad_a = *row[ai];
                    d.bad_b = H.transitions[ti].to;
                    return d;
                }
                row[ai] = H.transitions[ti].to;
            }
        }
        d.delta.emplace(p, std::move(row));
    }
    return d;
}

} // namespace

ConfluenceReport check_confluent(const HorizontalAutomaton& H,
                                 const std::vector<Filter>& filters,
                                 const std::vector<Atom>& atoms) {
    std::vector<std::size_t> transition_guard;
    std::vector<Filter> fs = guard_filters(H, &transition_guard);
    if (fs.size() != filters.size())
        throw Error("filter list does not match the automaton's guards");

    ConfluenceReport rep;
    AtomDelta d = build_delta(H, transition_guard, atoms);
    if (!d.deterministic) {
        rep.verdict = ConfluenceReport::Verdict::NotProvablyConfluent;
        rep.state = d.bad_state;
        rep.atom_a = rep.atom_b = d.bad_atom;
        rep.succ_a = d.bad_a;
        rep.succ_b = d.bad_b;
        rep.reason = "two transitions with different targets enabled on one atom at " +
                     d.bad_state;
        return rep;
    }

    // diamond: both one-step successors must rejoin in one more step
    for (const HStateId& p : H.hstates) {
        const auto& row = d.delta.at(p);
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (!row[a]) continue;
            for (std::size_t b = a + 1; b < atoms.size(); ++b) {
                if (!row[b]) continue;
                const auto& ra = d.delta.at(*row[a]);
                const auto& rb = d.delta.at(*row[b]);
                if (!ra[b] || !rb[a] || *ra[b] != *rb[a]) {
                    rep.verdict = ConfluenceReport::Verdict::NotProvablyConfluent;
                    rep.state = p;
                    rep.atom_a = a;
                    rep.atom_b = b;
                    rep.succ_a = *row[a];
                    rep.succ_b = *row[b];
                    rep.reason = "diamond fails at " + p + ": successors " + *row[a] +
                                 " and " + *row[b] + " do not rejoin";
                    return rep;
                }
            }
        }
    }
    return rep;
}

ConfluenceReport autc_check(const Aut& A) {
    if (!A.horizontal) throw InvalidAutomaton("no horizontal automaton to check");
    std::vector<Filter> filters = guard_filters(*A.horizontal);
    std::vector<Atom> atoms = atomize(filters, A.states);
    return check_confluent(*A.horizontal, filters, atoms);
}

// ------------------------------------------------------------- membership

bool autc_membership(const Aut& A, const DataTree& t, Stats* stats) {
    if (A.cls != AutClass::Autc)
        throw InvalidAutomaton("autc_membership requires the confluent class");
    return accepts(A, t, stats);
}

// ------------------------------------------------------------ universality

bool autc_universal(const Aut& A, Stats* stats) {
    if (A.cls != AutClass::Autc)
        throw InvalidAutomaton("autc_universal requires the confluent class");
    const HorizontalAutomaton& H = *A.horizontal;

    // accessible vertical states S and horizontal states P
    StateSet S;
    std::vector<HStateId> P;
    bool changed = true;
    while (changed) {
        changed = false;
        P.assign(1, A.initial_h);
        for (std::size_t i = 0; i < P.size(); ++i) {
            for (const HTransition& t : H.transitions) {
                if (t.from != P[i]) continue;
                if (std::find(P.begin(), P.end(), t.to) != P.end()) continue;
                bool can = false;
                if (stats) ++stats->sat_checks;
                if (!pattern_empty(filter_reduce(t.guard, {}))) can = true;
                for (const StateId& q : S) {
                    if (can) break;
                    if (stats) ++stats->sat_checks;
                    if (!pattern_empty(filter_reduce(t.guard, {q}))) can = true;
                }
                if (can) P.push_back(t.to);
            }
        }
        for (const Rule& r : A.rules)
            if (!S.count(r.target) &&
                std::find(P.begin(), P.end(), r.h_to) != P.end()) {
                S.insert(r.target);
                changed = true;
            }
    }

    // every accessible vertical state accepting
    for (const StateId& q : S)
        if (!A.finals.count(q)) return false;

    for (const HStateId& p : P) {
        // p must close some descriptor
        bool closes = false;
        for (const Rule& r : A.rules)
            if (r.h_to == p) {
                closes = true;
                break;
            }
        if (!closes) return false;
        // outgoing guards must jointly accept every (value, accessible state)
        for (const StateId& q : S) {
            PatternAcceptor acc = pattern_none();
            for (const HTransition& t : H.transitions)
                if (t.from == p) acc = pattern_or(acc, filter_reduce(t.guard, {q}));
            if (!pattern_universal(acc)) return false;
        }
    }
    return true;
}

// ------------------------------------------------- joint pair reachability

namespace {

using VState = std::optional<StateId>; // nullopt = no state (failure)
using PairKey = std::pair<VState, VState>;

struct JointLetter {
    std::vector<char> signs; // over FA ++ FB
    DataValue value;
    PairKey child;
};

constexpr std::uint64_t kJointDefaultBudget = 1000000;

// Vertical step of one side: greedy-consume M from the initial hstate and
// map the end state through the rules.
VState vertical_step(const Aut& X, const AnnotatedMultiset& M, Stats* stats) {
    RewriteEnd end = h_greedy_run(*X.horizontal, X.initial_h, M, stats);
    if (!end.consumed_all) return std::nullopt;
    for (const Rule& r : X.rules)
        if (r.h_to == end.state) return r.target;
    return std::nullopt;
}

// Computes reachable evaluation pairs with witness trees, stopping early
// when `stop` returns true for a pair. Arities are exhausted up to the
// product pumping bound, so absence of a pair is conclusive when the
// returned flag is true.
struct JointSearch {
    std::map<PairKey, DataTree> pairs;
    std::optional<DataTree> stopped; // witness of the stopping pair
    bool exhausted = true;
};

template <typename StopFn>
JointSearch joint_pairs(const Aut& A, const Aut& B, std::uint64_t budget, Stats* stats,
                        StopFn&& stop) {
    std::vector<Filter> FA = guard_filters(*A.horizontal);
    std::vector<Filter> FB = guard_filters(*B.horizontal);
    std::size_t na = FA.size(), nb = FB.size();
    if (na + nb > 20) throw ResourceError("too many guards for joint atomization");
    std::uint64_t K = (A.horizontal->hstates.size() + 1) *
                      (B.horizontal->hstates.size() + 1);
    if (budget == 0) budget = kJointDefaultBudget;

    JointSearch out;
    bool changed = true;
    while (changed && !out.stopped) {
        changed = false;

        // letters: one per nonempty sign class realizable at some known pair
        std::vector<JointLetter> letters;
        for (const auto& [child, tree] : out.pairs) {
            StateSet QA = child.first ? StateSet{*child.first} : StateSet{};
            StateSet QB = child.second ? StateSet{*child.second} : StateSet{};
            for (std::size_t mask = 0; mask < (std::size_t{1} << (na + nb)); ++mask) {
                std::vector<char> signs(na + nb);
                for (std::size_t i = 0; i < na + nb; ++i)
                    signs[i] = !((mask >> (na + nb - 1 - i)) & 1);
                bool dup = false;
                for (const JointLetter& l : letters)
                    if (l.signs == signs) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                PatternAcceptor acc = pattern_all();
                bool empty = false;
                for (std::size_t i = 0; i < na + nb && !empty; ++i) {
                    PatternAcceptor r = i < na ? filter_reduce(FA[i], QA)
                                               : filter_reduce(FB[i - na], QB);
                    if (!signs[i]) r = pattern_not(r);
                    acc = pattern_and(acc, r);
                    if (pattern_empty(acc)) empty = true;
                }
                if (empty) continue;
                letters.push_back(JointLetter{std::move(signs),
                                              *pattern_shortest(acc), child});
            }
        }

        // enumerate arity multisets, small totals first
        std::size_t L = letters.size();
        std::vector<std::uint64_t> counts(L, 0);
        auto visit = [&]() -> int { // 0 continue, 1 stop, 2 budget out
            if (budget == 0) return 2;
            --budget;
            if (stats) ++stats->search_nodes;
            AnnotatedMultiset MA, MB;
            for (std::size_t i = 0; i < L; ++i)
                for (std::uint64_t k = 0; k < counts[i]; ++k) {
                    StateSet QA = letters[i].child.first
                                      ? StateSet{*letters[i].child.first}
                                      : StateSet{};
                    StateSet QB = letters[i].child.second
                                      ? StateSet{*letters[i].child.second}
                                      : StateSet{};
                    MA.emplace_back(letters[i].value, std::move(QA));
                    MB.emplace_back(letters[i].value, std::move(QB));
                }
            PairKey key{vertical_step(A, MA, stats), vertical_step(B, MB, stats)};
            if (out.pairs.count(key)) return 0;
            std::vector<std::pair<DataValue, DataTree>> edges;
            for (std::size_t i = 0; i < L; ++i)
                for (std::uint64_t k = 0; k < counts[i]; ++k)
                    edges.emplace_back(letters[i].value,
                                       out.pairs.at(letters[i].child));
            DataTree witness = DataTree::make(std::move(edges));
            out.pairs.emplace(key, witness);
            changed = true;
            if (stop(key)) {
                out.stopped = std::move(witness);
                return 1;
            }
            return 0;
        };
        auto rec = [&](auto&& self, std::size_t i, std::uint64_t s) -> int {
            if (i == L) return s == 0 ? visit() : 0;
            std::uint64_t rest = K * (L - 1 - i);
            std::uint64_t hi = std::min<std::uint64_t>(K, s);
            std::uint64_t lo = s > rest ? s - rest : 0;
            for (std::uint64_t n = hi + 1; n-- > lo;) {
                counts[i] = n;
                int r = self(self, i + 1, s - n);
                counts[i] = 0;
                if (r) return r;
            }
            return 0;
        };
        for (std::uint64_t s = 0; s <= K * std::max<std::size_t>(L, 1); ++s) {
            int r = (L == 0 && s > 0) ? 0 : rec(rec, 0, s);
            if (r == 1) return out;
            if (r == 2) {
                out.exhausted = false;
                return out;
            }
            if (L == 0) break;
        }
    }
    return out;
}

bool pair_final(const Aut& X, const VState& v) {
    return v && X.finals.count(*v) > 0;
}

} // namespace

Decision autc_disjoint(const Aut& A, const Aut& B, std::uint64_t budget, Stats* stats) {
    if (A.cls != AutClass::Autc || B.cls != AutClass::Autc)
        throw InvalidAutomaton("autc_disjoint requires the confluent class");
    JointSearch s = joint_pairs(A, B, budget, stats, [&](const PairKey& k) {
        return pair_final(A, k.first) && pair_final(B, k.second);
    });
    if (s.stopped) return {Decision::Answer::No, std::move(s.stopped)};
    if (s.exhausted) return {Decision::Answer::Yes, std::nullopt};
    return {Decision::Answer::Unknown, std::nullopt};
}

Decision autc_inclusion(const Aut& A, const Aut& B, std::uint64_t budget, Stats* stats) {
    if (A.cls != AutClass::Autc || B.cls != AutClass::Autc)
        throw InvalidAutomaton("autc_inclusion requires the confluent class");
    JointSearch s = joint_pairs(A, B, budget, stats, [&](const PairKey& k) {
        return pair_final(A, k.first) && !pair_final(B, k.second);
    });
    if (s.stopped) return {Decision::Answer::No, std::move(s.stopped)};
    if (s.exhausted) return {Decision::Answer::Yes, std::nullopt};
    return {Decision::Answer::Unknown, std::nullopt};
}

} // namespace uta
