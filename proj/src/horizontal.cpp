#include "uta/horizontal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace uta {

bool HorizontalAutomaton::has_hstate(const HStateId& p) const {
    return std::find(hstates.begin(), hstates.end(), p) != hstates.end();
}

namespace {

// Canonical multiset view: distinct (value, states) elements in sorted
// order with a count vector, so permutations of equal elements share
// memo entries.
struct Packed {
    std::vector<std::pair<DataValue, StateSet>> elems;
    std::vector<std::uint32_t> counts;
};

Packed pack(const AnnotatedMultiset& M) {
    AnnotatedMultiset sorted = M;
    std::sort(sorted.begin(), sorted.end());
    Packed p;
    for (const auto& e : sorted) {
        if (!p.elems.empty() && p.elems.back() == e) {
            ++p.counts.back();
        } else {
            p.elems.push_back(e);
            p.counts.push_back(1);
        }
    }
    return p;
}

std::string config_key(const HStateId& p, const std::vector<std::uint32_t>& counts) {
    std::string key = p;
    for (std::uint32_t c : counts) {
        key.push_back('#');
        key += std::to_string(c);
    }
    return key;
}

struct SatSearch {
    const HorizontalAutomaton& H;
    const HStateId& target;
    const Packed& M;
    Stats* stats;
    std::uint64_t budget;
    std::map<std::string, bool> memo;

    bool run(const HStateId& p, std::vector<std::uint32_t>& counts) {
        std::string key = config_key(p, counts);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (memo.size() >= budget)
            throw ResourceError("horizontal rewriting search budget exceeded");
        if (stats) ++stats->search_nodes;
        memo[key] = false; // cycle-free: every step shrinks the multiset
        bool all_zero = std::all_of(counts.begin(), counts.end(),
                                    [](std::uint32_t c) { return c == 0; });
        bool ok = false;
        if (all_zero) {
            ok = (p == target);
        } else {
            for (std::size_t i = 0; i < counts.size() && !ok; ++i) {
                if (counts[i] == 0) continue;
                for (const HTransition& t : H.transitions) {
                    if (t.from != p) continue;
                    if (!filter_eval(t.guard, M.elems[i].first, M.elems[i].second))
                        continue;
                    --counts[i];
                    bool r = run(t.to, counts);
                    ++counts[i];
                    if (r) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        memo[key] = ok;
        return ok;
    }
};

} // namespace

bool h_descriptor_sat(const HorizontalAutomaton& H, const HStateId& p,
                      const HStateId& target, const AnnotatedMultiset& M, Stats* stats,
                      std::uint64_t budget) {
    Packed packed = pack(M);
    SatSearch search{H, target, packed, stats, budget, {}};
    std::vector<std::uint32_t> counts = packed.counts;
    return search.run(p, counts);
}

namespace {

struct AllRuns {
    const HorizontalAutomaton& H;
    const Packed& M;
    std::uint64_t budget;
    std::set<std::string> visited;
    std::set<std::pair<HStateId, bool>> ends;

    void run(const HStateId& p, std::vector<std::uint32_t>& counts) {
        if (!visited.insert(config_key(p, counts)).second) return;
        if (visited.size() > budget)
            throw ResourceError("horizontal rewriting search budget exceeded");
        bool stepped = false;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) continue;
            for (const HTransition& t : H.transitions) {
                if (t.from != p) continue;
                if (!filter_eval(t.guard, M.elems[i].first, M.elems[i].second)) continue;
                stepped = true;
                --counts[i];
                run(t.to, counts);
                ++counts[i];
            }
        }
        if (!stepped) {
            bool all_zero = std::all_of(counts.begin(), counts.end(),
                                        [](std::uint32_t c) { return c == 0; });
            if (all_zero)
                ends.insert({p, true});
            else
                ends.insert({HStateId{}, false}); // failure sink
        }
    }
};

} // namespace

std::vector<RewriteEnd> h_all_runs(const HorizontalAutomaton& H, const HStateId& p,
                                   const AnnotatedMultiset& M, std::uint64_t budget) {
    Packed packed = pack(M);
    AllRuns search{H, packed, budget, {}, {}};
    std::vector<std::uint32_t> counts = packed.counts;
    search.run(p, counts);
    std::vector<RewriteEnd> out;
    for (const auto& [state, consumed] : search.ends)
        out.push_back(RewriteEnd{state, consumed});
    return out;
}

RewriteEnd h_greedy_run(const HorizontalAutomaton& H, const HStateId& p,
                        const AnnotatedMultiset& M, Stats* stats) {
    Packed packed = pack(M);
    std::vector<std::uint32_t> counts = packed.counts;
    HStateId cur = p;
    for (;;) {
        bool stepped = false;
        for (std::size_t i = 0; i < counts.size() && !stepped; ++i) {
            if (counts[i] == 0) continue;
            for (const HTransition& t : H.transitions) {
                if (t.from != cur) continue;
                if (!filter_eval(t.guard, packed.elems[i].first, packed.elems[i].second))
                    continue;
                --counts[i];
                cur = t.to;
                stepped = true;
                if (stats) ++stats->h_steps;
                break;
            }
        }
        if (!stepped) break;
    }
    bool all_zero = std::all_of(counts.begin(), counts.end(),
                                [](std::uint32_t c) { return c == 0; });
    if (all_zero) return RewriteEnd{cur, true};
    return RewriteEnd{HStateId{}, false};
}

} // namespace uta
