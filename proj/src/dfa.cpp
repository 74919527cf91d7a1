#include "uta/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace uta {

Dfa Dfa::constant(int alphabet, bool value) {
    Dfa d;
    d.alphabet = alphabet;
    d.next = {std::vector<int>(alphabet, 0)};
    d.initial = 0;
    d.accepting = {static_cast<char>(value ? 1 : 0)};
    return d;
}

Dfa dfa_complement(Dfa d) {
    for (auto& a : d.accepting) a = !a;
    return d;
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
    if (a.alphabet != b.alphabet)
        throw Error("dfa product: alphabet mismatch");
    Dfa out;
    out.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> todo;
    auto intern = [&](int sa, int sb) {
        auto [it, inserted] = index.try_emplace({sa, sb}, static_cast<int>(index.size()));
        if (inserted) {
            todo.emplace_back(sa, sb);
            out.next.emplace_back(out.alphabet, 0);
            out.accepting.push_back(
                combine(a.accepting[sa] != 0, b.accepting[sb] != 0) ? 1 : 0);
        }
        return it->second;
    };
    out.initial = intern(a.initial, b.initial);
    while (!todo.empty()) {
        auto [sa, sb] = todo.front();
        todo.pop_front();
        int s = index.at({sa, sb});
        for (int x = 0; x < out.alphabet; ++x)
            out.next[s][x] = intern(a.next[sa][x], b.next[sb][x]);
    }
    return out;
}

} // namespace

Dfa dfa_intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa dfa_union(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa dfa_difference(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa dfa_minimize(const Dfa& d) {
    int n = d.state_count();
    // restrict to states reachable from the initial state
    std::vector<int> reach(n, -1);
    std::vector<int> order;
    reach[d.initial] = 0;
    order.push_back(d.initial);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int x = 0; x < d.alphabet; ++x) {
            int t = d.next[order[i]][x];
            if (reach[t] < 0) {
                reach[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    int m = static_cast<int>(order.size());

    // Moore partition refinement on the reachable part
    std::vector<int> cls(m);
    for (int i = 0; i < m; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;
    int num_classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next_cls(m);
        for (int i = 0; i < m; ++i) {
            std::vector<int> sig;
            sig.reserve(d.alphabet + 1);
            sig.push_back(cls[i]);
            for (int x = 0; x < d.alphabet; ++x)
                sig.push_back(cls[reach[d.next[order[i]][x]]]);
            auto [it, ins] = sig_index.try_emplace(std::move(sig),
                                                   static_cast<int>(sig_index.size()));
            next_cls[i] = it->second;
        }
        int k = static_cast<int>(sig_index.size());
        bool stable = (k == num_classes);
        cls.swap(next_cls);
        num_classes = k;
        if (stable) break;
    }

    // quotient automaton over classes
    Dfa q;
    q.alphabet = d.alphabet;
    q.next.assign(num_classes, std::vector<int>(d.alphabet, 0));
    q.accepting.assign(num_classes, 0);
    for (int i = 0; i < m; ++i) {
        int c = cls[i];
        q.accepting[c] = d.accepting[order[i]];
        for (int x = 0; x < d.alphabet; ++x)
            q.next[c][x] = cls[reach[d.next[order[i]][x]]];
    }
    q.initial = cls[reach[d.initial]];

    // canonical renumbering: BFS from the initial state, letters in order
    std::vector<int> renum(num_classes, -1);
    std::vector<int> bfs;
    renum[q.initial] = 0;
    bfs.push_back(q.initial);
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int x = 0; x < q.alphabet; ++x) {
            int t = q.next[bfs[i]][x];
            if (renum[t] < 0) {
                renum[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    Dfa out;
    out.alphabet = q.alphabet;
    out.initial = 0;
    out.next.assign(num_classes, std::vector<int>(q.alphabet, 0));
    out.accepting.assign(num_classes, 0);
    for (int c = 0; c < num_classes; ++c) {
        out.accepting[renum[c]] = q.accepting[c];
        for (int x = 0; x < q.alphabet; ++x)
            out.next[renum[c]][x] = renum[q.next[c][x]];
    }
    return out;
}

bool dfa_equal(const Dfa& a, const Dfa& b) {
    Dfa ma = dfa_minimize(a), mb = dfa_minimize(b);
    return ma.alphabet == mb.alphabet && ma.next == mb.next &&
           ma.accepting == mb.accepting && ma.initial == mb.initial;
}

bool dfa_empty(const Dfa& d) { return !dfa_shortest_word(d).has_value(); }

bool dfa_universal(const Dfa& d) { return dfa_empty(dfa_complement(d)); }

std::optional<std::vector<int>> dfa_shortest_word(const Dfa& d) {
    int n = d.state_count();
    // backward BFS: distance from each state to an accepting state
    constexpr int INF = 1 << 30;
    std::vector<int> dist(n, INF);
    std::queue<int> q;
    std::vector<std::vector<std::pair<int, int>>> pred(n); // state -> (src, letter)
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < d.alphabet; ++x)
            pred[d.next[s][x]].emplace_back(s, x);
    for (int s = 0; s < n; ++s)
        if (d.accepting[s]) {
            dist[s] = 0;
            q.push(s);
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (auto [p, x] : pred[s])
            if (dist[p] == INF) {
                dist[p] = dist[s] + 1;
                q.push(p);
            }
    }
    if (dist[d.initial] == INF) return std::nullopt;
    // greedy forward walk: smallest letter that decreases the distance
    std::vector<int> word;
    int s = d.initial;
    while (!d.accepting[s]) {
        for (int x = 0; x < d.alphabet; ++x) {
            int t = d.next[s][x];
            if (dist[t] == dist[s] - 1) {
                word.push_back(x);
                s = t;
                break;
            }
        }
    }
    return word;
}

Dfa nfa_determinize(const Nfa& n, std::size_t state_guard) {
    auto closure = [&](std::set<int> states) {
        std::deque<int> todo(states.begin(), states.end());
        while (!todo.empty()) {
            int s = todo.front();
            todo.pop_front();
            if (s < static_cast<int>(n.epsilon.size()))
                for (int t : n.epsilon[s])
                    if (states.insert(t).second) todo.push_back(t);
        }
        return states;
    };
    Dfa out;
    out.alphabet = n.alphabet;
    std::map<std::set<int>, int> index;
    std::deque<std::set<int>> todo;
    auto intern = [&](std::set<int> states) {
        states = closure(std::move(states));
        auto [it, inserted] = index.try_emplace(states, static_cast<int>(index.size()));
        if (inserted) {
            if (state_guard && index.size() > state_guard)
                throw ResourceError("state-count guard exceeded during determinization");
            out.next.emplace_back(out.alphabet, 0);
            bool acc = false;
            for (int s : states) acc = acc || n.accepting[s];
            out.accepting.push_back(acc ? 1 : 0);
            todo.push_back(std::move(states));
        }
        return it->second;
    };
    out.initial = intern(std::set<int>(n.initials.begin(), n.initials.end()));
    while (!todo.empty()) {
        std::set<int> states = todo.front();
        todo.pop_front();
        int s = index.at(closure(states));
        for (int x = 0; x < out.alphabet; ++x) {
            std::set<int> targets;
            for (int p : states)
                for (int t : n.next[p][x]) targets.insert(t);
            out.next[s][x] = intern(std::move(targets));
        }
    }
    return out;
}

} // namespace uta
