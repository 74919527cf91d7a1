#include "uta/auto_ordered.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace uta {

bool auto_membership(const Aut& A, const DataTree& t, Stats* stats) {
    if (A.cls != AutClass::AutoOrdered)
        throw InvalidAutomaton("auto_membership requires the ordered class");
    return accepts(A, t, stats);
}

Dfa sorted_word_acceptor(int n) {
    Dfa d;
    d.alphabet = n;
    if (n == 0) {
        d.next.push_back({});
        d.accepting = {1};
        return d;
    }
    // state i = smallest letter still allowed; state n = sink
    d.next.assign(static_cast<std::size_t>(n) + 1,
                  std::vector<int>(static_cast<std::size_t>(n)));
    d.accepting.assign(static_cast<std::size_t>(n) + 1, 1);
    d.accepting[static_cast<std::size_t>(n)] = 0;
    for (int i = 0; i <= n; ++i)
        for (int a = 0; a < n; ++a)
            d.next[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                (i < n && a >= i) ? a : n;
    return d;
}

Dfa ordered_language_dfa(const Dfa& d) {
    return dfa_minimize(dfa_intersect(d, sorted_word_acceptor(d.alphabet)));
}

// ------------------------------------------------------------- decisions

namespace {

using VState = std::optional<StateId>;
using PairKey = std::pair<VState, VState>;

struct Combo {
    int ia = -1; // A letter index, -1 = unclassified for A
    int jb = -1; // B letter index
};

// reduce the letter classifier of one side under a fixed annotation:
// letter i >= 0 -> that filter; -1 -> complement of the union
PatternAcceptor side_class(const std::vector<std::pair<std::string, Filter>>& order,
                           int letter, const StateSet& Q) {
    if (letter >= 0)
        return filter_reduce(order[static_cast<std::size_t>(letter)].second, Q);
    PatternAcceptor u = pattern_none();
    for (const auto& [name, f] : order) u = pattern_or(u, filter_reduce(f, Q));
    return pattern_not(u);
}

struct ComboRep {
    DataValue value;
    PairKey child;
};

struct ProductState {
    int min_pos = 0; // sortedness: next combo position must be >= this
    std::vector<int> vec_a, vec_b;
    bool failed_a = false, failed_b = false;

    std::string key() const {
        std::string k = std::to_string(min_pos);
        k += failed_a ? "F" : "-";
        k += failed_b ? "F" : "-";
        for (int s : vec_a) k += "." + std::to_string(s);
        k += "|";
        for (int s : vec_b) k += "." + std::to_string(s);
        return k;
    }
};

constexpr std::size_t kProductGuard = 200000;

struct JointOrderedSearch {
    const Aut& A;
    const Aut* B;
    Stats* stats;

    std::vector<Combo> combos;   // in joint order
    bool consistent = true;
    std::map<PairKey, DataTree> pairs;
    std::optional<DataTree> stopped;

    VState side_result(const Aut& X, const std::vector<int>& vec, bool failed) const {
        if (failed) return std::nullopt;
        for (std::size_t r = 0; r < X.rules.size(); ++r)
            if (X.rules[r].dfa->accepting[static_cast<std::size_t>(vec[r])])
                return X.rules[r].target;
        return std::nullopt;
    }

    void build_combos() {
        int na = static_cast<int>(A.order.size());
        int nb = B ? static_cast<int>(B->order.size()) : 0;
        std::vector<StateSet> qa_opts{{}}, qb_opts{{}};
        for (const StateId& q : A.states) qa_opts.push_back({q});
        if (B)
            for (const StateId& q : B->states) qb_opts.push_back({q});

        std::vector<Combo> raw;
        for (int ia = -1; ia < na; ++ia)
            for (int jb = -1; jb < nb; ++jb) {
                if (!B && jb >= 0) continue;
                bool realizable = false;
                for (const StateSet& QA : qa_opts) {
                    for (const StateSet& QB : qb_opts) {
                        PatternAcceptor acc = side_class(A.order, ia, QA);
                        if (B) acc = pattern_and(acc, side_class(B->order, jb, QB));
                        if (!pattern_empty(acc)) {
                            realizable = true;
                            break;
                        }
                    }
                    if (realizable) break;
                }
                if (realizable) raw.push_back(Combo{ia, jb});
            }

        // topological order consistent with both sides' letter orders
        std::size_t m = raw.size();
        std::vector<std::set<std::size_t>> preds(m);
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
                if (s == t) continue;
                bool before = (raw[s].ia >= 0 && raw[t].ia >= 0 && raw[s].ia < raw[t].ia) ||
                              (raw[s].jb >= 0 && raw[t].jb >= 0 && raw[s].jb < raw[t].jb);
                if (before) preds[t].insert(s);
            }
        std::vector<char> placed(m, 0);
        for (std::size_t done = 0; done < m; ++done) {
            std::size_t pick = m;
            for (std::size_t s = 0; s < m; ++s) {
                if (placed[s]) continue;
                bool ready = true;
                for (std::size_t p : preds[s])
                    if (!placed[p]) {
                        ready = false;
                        break;
                    }
                if (ready) {
                    pick = s;
                    break;
                }
            }
            if (pick == m) {
                consistent = false; // the two orders cross
                return;
            }
            placed[pick] = 1;
            combos.push_back(raw[pick]);
        }
    }

    void run(const std::function<bool(const PairKey&)>& stop) {
        build_combos();
        if (!consistent) return;
        bool changed = true;
        while (changed && !stopped) {
            changed = false;

            // which combos are realizable against known child pairs
            std::vector<std::optional<ComboRep>> avail(combos.size());
            for (std::size_t c = 0; c < combos.size(); ++c) {
                for (const auto& [child, tree] : pairs) {
                    StateSet QA = child.first ? StateSet{*child.first} : StateSet{};
                    StateSet QB = child.second ? StateSet{*child.second} : StateSet{};
                    PatternAcceptor acc = side_class(A.order, combos[c].ia, QA);
                    if (B) acc = pattern_and(acc, side_class(B->order, combos[c].jb, QB));
                    if (!pattern_empty(acc)) {
                        avail[c] = ComboRep{*pattern_shortest(acc), child};
                        break;
                    }
                }
            }

            // BFS over the product of all rule DFAs, words sorted by combo
            // position
            std::map<std::string, int> seen;
            std::vector<ProductState> states;
            std::vector<std::pair<int, std::size_t>> parent; // (state, combo)
            ProductState init;
            for (const Rule& r : A.rules) init.vec_a.push_back(r.dfa->initial);
            if (B)
                for (const Rule& r : B->rules) init.vec_b.push_back(r.dfa->initial);
            seen.emplace(init.key(), 0);
            states.push_back(init);
            parent.emplace_back(-1, 0);
            for (std::size_t head = 0; head < states.size(); ++head) {
                ProductState st = states[head];
                if (stats) ++stats->search_nodes;

                PairKey key{side_result(A, st.vec_a, st.failed_a),
                            B ? side_result(*B, st.vec_b, st.failed_b) : VState{}};
                if (!pairs.count(key)) {
                    // witness: replay the combo word through representatives
                    std::vector<std::pair<DataValue, DataTree>> edges;
                    for (int at = static_cast<int>(head); parent[static_cast<std::size_t>(at)].first >= 0;
                         at = parent[static_cast<std::size_t>(at)].first) {
                        const ComboRep& rep = *avail[parent[static_cast<std::size_t>(at)].second];
                        edges.emplace_back(rep.value, pairs.at(rep.child));
                    }
                    DataTree witness = DataTree::make(std::move(edges));
                    pairs.emplace(key, witness);
                    changed = true;
                    if (stop(key)) {
                        stopped = std::move(witness);
                        return;
                    }
                }

                for (std::size_t c = 0; c < combos.size(); ++c) {
                    if (!avail[c] || static_cast<int>(c) < st.min_pos) continue;
                    ProductState nx = st;
                    nx.min_pos = static_cast<int>(c);
                    if (combos[c].ia < 0) {
                        nx.failed_a = true;
                    } else {
                        for (std::size_t r = 0; r < A.rules.size(); ++r)
                            nx.vec_a[r] =
                                A.rules[r].dfa->next[static_cast<std::size_t>(nx.vec_a[r])]
                                                    [static_cast<std::size_t>(combos[c].ia)];
                    }
                    if (B) {
                        if (combos[c].jb < 0) {
                            nx.failed_b = true;
                        } else {
                            for (std::size_t r = 0; r < B->rules.size(); ++r)
                                nx.vec_b[r] =
                                    B->rules[r].dfa->next[static_cast<std::size_t>(nx.vec_b[r])]
                                                         [static_cast<std::size_t>(combos[c].jb)];
                        }
                    }
                    std::string k = nx.key();
                    if (seen.count(k)) continue;
                    if (states.size() >= kProductGuard)
                        throw ResourceError("ordered decision product guard exceeded");
                    seen.emplace(k, static_cast<int>(states.size()));
                    states.push_back(nx);
                    parent.emplace_back(static_cast<int>(head), c);
                }
            }
        }
    }
};

bool vfinal(const Aut& X, const VState& v) { return v && X.finals.count(*v) > 0; }

} // namespace

Decision auto_decide(AutoProblem problem, const Aut& A, const Aut* B, Stats* stats) {
    if (A.cls != AutClass::AutoOrdered || (B && B->cls != AutClass::AutoOrdered))
        throw InvalidAutomaton("auto_decide requires the ordered class");
    bool needs_b = problem == AutoProblem::Disjoint || problem == AutoProblem::Included ||
                   problem == AutoProblem::Equivalent;
    if (needs_b && !B) throw Error("this problem needs two automata");
    if (!needs_b) B = nullptr;

    JointOrderedSearch search{A, B, stats, {}, true, {}, {}};
    std::function<bool(const PairKey&)> stop;
    switch (problem) {
        case AutoProblem::Empty:
            stop = [&](const PairKey& k) { return vfinal(A, k.first); };
            break;
        case AutoProblem::Universal:
            stop = [&](const PairKey& k) { return !vfinal(A, k.first); };
            break;
        case AutoProblem::Disjoint:
            stop = [&](const PairKey& k) {
                return vfinal(A, k.first) && vfinal(*B, k.second);
            };
            break;
        case AutoProblem::Included:
            stop = [&](const PairKey& k) {
                return vfinal(A, k.first) && !vfinal(*B, k.second);
            };
            break;
        case AutoProblem::Equivalent:
            stop = [&](const PairKey& k) {
                return vfinal(A, k.first) != vfinal(*B, k.second);
            };
            break;
    }
    search.run(stop);
    if (!search.consistent) return {Decision::Answer::Unknown, std::nullopt};
    if (search.stopped) return {Decision::Answer::No, std::move(search.stopped)};
    return {Decision::Answer::Yes, std::nullopt};
}

// --------------------------------------------------------------- reorder

namespace {

// States reachable from p by reading letter j zero or more times; the walk
// is a tail plus a cycle since the automaton is deterministic.
std::vector<int> letter_walk(const Dfa& d, int p, int j) {
    std::vector<int> walk;
    std::set<int> seen;
    int s = p;
    while (seen.insert(s).second) {
        walk.push_back(s);
        s = d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
    }
    return walk;
}

constexpr std::size_t kBoundarySeqGuard = 20000;

Dfa reorder_dfa(const Dfa& d, const std::vector<int>& old_of_new, std::size_t guard) {
    int n = d.alphabet;
    if (n <= 1) return dfa_minimize(d);
    Dfa od = ordered_language_dfa(d);
    int Q = od.state_count();

    std::vector<std::vector<std::vector<int>>> reach(
        static_cast<std::size_t>(n),
        std::vector<std::vector<int>>(static_cast<std::size_t>(Q)));
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < Q; ++p)
            reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] =
                letter_walk(od, p, j);

    // boundary sequences s[0..n]: s[0] initial, s[i] -> s[i+1] by letter i,
    // s[n] accepting (old-order decomposition of the Parikh language)
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur(static_cast<std::size_t>(n) + 1);
    cur[0] = od.initial;
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (od.accepting[static_cast<std::size_t>(cur[static_cast<std::size_t>(n)])]) {
                if (seqs.size() >= kBoundarySeqGuard)
                    throw ResourceError("reorder boundary-sequence guard exceeded");
                seqs.push_back(cur);
            }
            return;
        }
        for (int q : reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])]) {
            cur[static_cast<std::size_t>(i) + 1] = q;
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);

    // NFA: per sequence, chain the per-letter components in the new order
    Nfa nfa;
    nfa.alphabet = n;
    std::map<std::tuple<std::size_t, int, int>, int> id; // (seq, new pos, od state)
    auto state_of = [&](std::size_t seq, int t, int u) {
        auto it = id.find({seq, t, u});
        if (it != id.end()) return it->second;
        int s = static_cast<int>(nfa.next.size());
        id.emplace(std::make_tuple(seq, t, u), s);
        nfa.next.emplace_back(static_cast<std::size_t>(n));
        nfa.epsilon.emplace_back();
        nfa.accepting.push_back(0);
        return s;
    };
    for (std::size_t si = 0; si < seqs.size(); ++si) {
        const std::vector<int>& s = seqs[si];
        for (int t = 0; t < n; ++t) {
            int j = old_of_new[static_cast<std::size_t>(t)];
            for (int u : reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(s[static_cast<std::size_t>(j)])]) {
                int here = state_of(si, t, u);
                int next_u = od.next[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)];
                // staying inside the block may leave the recorded walk; that
                // means the boundary s[j+1] is no longer reachable, prune
                const auto& w = reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(s[static_cast<std::size_t>(j)])];
                if (std::find(w.begin(), w.end(), next_u) != w.end()) {
                    // state_of may grow the tables: resolve it first
                    int succ = state_of(si, t, next_u);
                    nfa.next[static_cast<std::size_t>(here)][static_cast<std::size_t>(t)]
                        .push_back(succ);
                }
                if (u == s[static_cast<std::size_t>(j) + 1]) {
                    if (t + 1 < n) {
                        int jn = old_of_new[static_cast<std::size_t>(t) + 1];
                        int succ = state_of(si, t + 1, s[static_cast<std::size_t>(jn)]);
                        nfa.epsilon[static_cast<std::size_t>(here)].push_back(succ);
                    } else {
                        nfa.accepting[static_cast<std::size_t>(here)] = 1;
                    }
                }
            }
        }
        nfa.initials.push_back(
            state_of(si, 0, s[static_cast<std::size_t>(old_of_new[0])]));
    }
    if (seqs.empty()) return Dfa::constant(n, false);
    return dfa_minimize(nfa_determinize(nfa, guard));
}

} // namespace

Aut reorder(const Aut& A, const std::vector<std::string>& order2) {
    if (A.cls != AutClass::AutoOrdered)
        throw InvalidAutomaton("reorder requires the ordered class");
    if (order2.size() != A.order.size())
        throw Error("new order must be a permutation of the declared filters");
    std::vector<int> old_of_new;
    for (const std::string& name : order2) {
        auto it = std::find_if(A.order.begin(), A.order.end(),
                               [&](const auto& p) { return p.first == name; });
        if (it == A.order.end()) throw Error("unknown filter in new order: " + name);
        int idx = static_cast<int>(it - A.order.begin());
        if (std::find(old_of_new.begin(), old_of_new.end(), idx) != old_of_new.end())
            throw Error("filter repeated in new order: " + name);
        old_of_new.push_back(idx);
    }

    Aut R = A;
    R.order.clear();
    for (int idx : old_of_new) R.order.push_back(A.order[static_cast<std::size_t>(idx)]);
    for (Rule& r : R.rules)
        r.dfa = std::make_shared<Dfa>(reorder_dfa(*r.dfa, old_of_new, kProductGuard));
    return R;
}

// ------------------------------------------------------ counting compiler

CountConstraint CountConstraint::le(std::string atom, std::uint64_t k) {
    CountConstraint c;
    c.kind = Kind::Le;
    c.atom = std::move(atom);
    c.k = k;
    return c;
}

CountConstraint CountConstraint::ge(std::string atom, std::uint64_t k) {
    CountConstraint c;
    c.kind = Kind::Ge;
    c.atom = std::move(atom);
    c.k = k;
    return c;
}

CountConstraint CountConstraint::mod_eq(std::string atom, std::uint64_t mod,
                                        std::uint64_t r) {
    if (mod == 0) throw Error("modulus must be positive");
    CountConstraint c;
    c.kind = Kind::ModEq;
    c.atom = std::move(atom);
    c.mod = mod;
    c.k = r % mod;
    return c;
}

CountConstraint CountConstraint::c_and(CountConstraint a, CountConstraint b) {
    CountConstraint c;
    c.kind = Kind::And;
    c.left = std::make_shared<CountConstraint>(std::move(a));
    c.right = std::make_shared<CountConstraint>(std::move(b));
    return c;
}

CountConstraint CountConstraint::c_or(CountConstraint a, CountConstraint b) {
    CountConstraint c;
    c.kind = Kind::Or;
    c.left = std::make_shared<CountConstraint>(std::move(a));
    c.right = std::make_shared<CountConstraint>(std::move(b));
    return c;
}

CountConstraint CountConstraint::c_not(CountConstraint a) {
    CountConstraint c;
    c.kind = Kind::Not;
    c.left = std::make_shared<CountConstraint>(std::move(a));
    return c;
}

namespace {

int letter_index(const std::vector<std::string>& names, const std::string& atom) {
    auto it = std::find(names.begin(), names.end(), atom);
    if (it == names.end()) throw Error("unknown letter in counting constraint: " + atom);
    return static_cast<int>(it - names.begin());
}

// DFA tracking the count of one letter, clamped at `clamp`; other letters
// self-loop.
Dfa letter_counter(int n, int idx, std::uint64_t clamp, std::uint64_t mod,
                   const std::function<bool(std::uint64_t)>& accept) {
    std::size_t states = mod ? mod : clamp + 1;
    Dfa d;
    d.alphabet = n;
    d.next.assign(states, std::vector<int>(static_cast<std::size_t>(n)));
    d.accepting.assign(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
        d.accepting[s] = accept(s);
        for (int a = 0; a < n; ++a) {
            if (a != idx) {
                d.next[s][static_cast<std::size_t>(a)] = static_cast<int>(s);
            } else if (mod) {
                d.next[s][static_cast<std::size_t>(a)] =
                    static_cast<int>((s + 1) % mod);
            } else {
                d.next[s][static_cast<std::size_t>(a)] =
                    static_cast<int>(std::min(s + 1, states - 1));
            }
        }
    }
    return d;
}

} // namespace

Dfa compile_counting(const CountConstraint& c, const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    switch (c.kind) {
        case CountConstraint::Kind::Le: {
            int idx = letter_index(names, c.atom);
            std::uint64_t k = c.k;
            return dfa_minimize(letter_counter(
                n, idx, k + 1, 0, [k](std::uint64_t s) { return s <= k; }));
        }
        case CountConstraint::Kind::Ge: {
            int idx = letter_index(names, c.atom);
            std::uint64_t k = c.k;
            return dfa_minimize(letter_counter(
                n, idx, k, 0, [k](std::uint64_t s) { return s >= k; }));
        }
        case CountConstraint::Kind::ModEq: {
            int idx = letter_index(names, c.atom);
            std::uint64_t r = c.k;
            return dfa_minimize(letter_counter(
                n, idx, 0, c.mod, [r](std::uint64_t s) { return s == r; }));
        }
        case CountConstraint::Kind::And:
            return dfa_minimize(dfa_intersect(compile_counting(*c.left, names),
                                              compile_counting(*c.right, names)));
        case CountConstraint::Kind::Or:
            return dfa_minimize(dfa_union(compile_counting(*c.left, names),
                                          compile_counting(*c.right, names)));
        case CountConstraint::Kind::Not:
            return dfa_minimize(dfa_complement(compile_counting(*c.left, names)));
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------- syntax

namespace {

struct CountingParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        std::size_t end = pos + w.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            return false;
        pos = end;
        return true;
    }
    std::uint64_t number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected number");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
        return v;
    }

    CountConstraint parse() {
        CountConstraint c = disjunction();
        if (peek() != '\0') throw ParseError("trailing characters in counting constraint");
        return c;
    }
    CountConstraint disjunction() {
        CountConstraint c = conjunction();
        while (eat('|')) c = CountConstraint::c_or(std::move(c), conjunction());
        return c;
    }
    CountConstraint conjunction() {
        CountConstraint c = unary();
        while (eat('&')) c = CountConstraint::c_and(std::move(c), unary());
        return c;
    }
    CountConstraint unary() {
        if (eat('!')) return CountConstraint::c_not(unary());
        if (eat('(')) {
            CountConstraint c = disjunction();
            if (!eat(')')) throw ParseError("expected ')' in counting constraint");
            return c;
        }
        return atom();
    }
    CountConstraint atom() {
        if (!eat_word("count")) throw ParseError("expected count(...)");
        if (!eat('(')) throw ParseError("expected '(' after count");
        skip_ws();
        std::string name;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            name.push_back(text[pos++]);
        if (name.empty()) throw ParseError("expected letter name in count(...)");
        if (!eat(')')) throw ParseError("expected ')' after letter name");
        skip_ws();
        if (text.substr(pos, 2) == "<=") {
            pos += 2;
            return CountConstraint::le(name, number());
        }
        if (text.substr(pos, 2) == ">=") {
            pos += 2;
            return CountConstraint::ge(name, number());
        }
        if (text.substr(pos, 2) == "==") {
            pos += 2;
            std::uint64_t k = number();
            if (eat_word("mod")) {
                std::uint64_t m = number();
                return CountConstraint::mod_eq(name, m, k);
            }
            return CountConstraint::c_and(CountConstraint::le(name, k),
                                          CountConstraint::ge(name, k));
        }
        throw ParseError("expected comparison in counting constraint");
    }
};

void print_counting(const CountConstraint& c, std::string& out, int parent_prec) {
    switch (c.kind) {
        case CountConstraint::Kind::Le:
            out += "count(" + c.atom + ") <= " + std::to_string(c.k);
            break;
        case CountConstraint::Kind::Ge:
            out += "count(" + c.atom + ") >= " + std::to_string(c.k);
            break;
        case CountConstraint::Kind::ModEq:
            out += "count(" + c.atom + ") == " + std::to_string(c.k) + " mod " +
                   std::to_string(c.mod);
            break;
        case CountConstraint::Kind::Not:
            out += "!(";
            print_counting(*c.left, out, 0);
            out += ")";
            break;
        case CountConstraint::Kind::And: {
            bool paren = parent_prec > 1;
            if (paren) out += "(";
            print_counting(*c.left, out, 1);
            out += " & ";
            print_counting(*c.right, out, 1);
            if (paren) out += ")";
            break;
        }
        case CountConstraint::Kind::Or: {
            bool paren = parent_prec > 0;
            if (paren) out += "(";
            print_counting(*c.left, out, 0);
            out += " | ";
            print_counting(*c.right, out, 0);
            if (paren) out += ")";
            break;
        }
    }
}

} // namespace

CountConstraint parse_counting(std::string_view text) {
    CountingParser p{text, 0};
    return p.parse();
}

std::string counting_to_string(const CountConstraint& c) {
    std::string out;
    print_counting(c, out, 0);
    return out;
}

} // namespace uta
