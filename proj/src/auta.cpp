#include "uta/auta.hpp"

#include <deque>
#include <map>
#include <set>

namespace uta {

bool auta_membership(const Aut& A, const DataTree& t, Stats* stats) {
    if (A.cls != AutClass::Auta)
        throw InvalidAutomaton("auta_membership requires the rewriting class");
    return accepts(A, t, stats);
}

bool auta_empty(const Aut& A, Stats* stats) {
    if (A.cls != AutClass::Auta)
        throw InvalidAutomaton("auta_empty requires the rewriting class");
    const HorizontalAutomaton& H = *A.horizontal;
    std::size_t nt = H.transitions.size();

    StateSet S;
    std::vector<char> sat(nt, 0);
    // per transition: state choices already tested ("" = the empty set)
    std::vector<std::set<StateId>> tested(nt);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < nt; ++i) {
            if (sat[i]) continue;
            const Filter& g = H.transitions[i].guard;
            auto test = [&](const StateSet& Q) {
                if (stats) ++stats->sat_checks;
                return !pattern_empty(filter_reduce(g, Q));
            };
            if (!tested[i].count("")) {
                tested[i].insert("");
                if (test({})) sat[i] = 1;
            }
            for (const StateId& q : S) {
                if (sat[i]) break;
                if (!tested[i].insert(q).second) continue;
                if (test({q})) sat[i] = 1;
            }
        }

        // horizontal reachability over satisfiable transitions
        auto reachable = [&](const HStateId& from, const HStateId& to) {
            std::set<HStateId> seen{from};
            std::deque<HStateId> work{from};
            while (!work.empty()) {
                HStateId p = work.front();
                work.pop_front();
                if (p == to) return true;
                for (std::size_t i = 0; i < nt; ++i) {
                    if (!sat[i] || H.transitions[i].from != p) continue;
                    if (seen.insert(H.transitions[i].to).second)
                        work.push_back(H.transitions[i].to);
                }
            }
            return false;
        };

        for (const Rule& r : A.rules) {
            if (S.count(r.target)) continue;
            if (reachable(r.h_from, r.h_to)) {
                S.insert(r.target);
                changed = true;
            }
        }
    }

    for (const StateId& q : A.finals)
        if (S.count(q)) return false;
    return true;
}

} // namespace uta
