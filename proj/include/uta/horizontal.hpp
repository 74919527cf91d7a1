#ifndef UTA_HORIZONTAL_HPP
#define UTA_HORIZONTAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uta/presburger.hpp"

namespace uta {

using HStateId = std::string;

struct HTransition {
    HStateId from;
    Filter guard;
    HStateId to;
};

/// Finite-state machine consuming arity elements one at a time; each step
/// removes one (data value, state set) pair satisfying the step's guard.
struct HorizontalAutomaton {
    std::vector<HStateId> hstates;
    std::vector<HTransition> transitions;

    bool has_hstate(const HStateId& p) const;
};

inline constexpr std::uint64_t kDefaultHBudget = 1000000;

/// True iff (p, M) rewrites to (target, empty) -- every element consumed.
/// Memoized backtracking over (hstate, canonical multiset remainder);
/// elements are explored in canonical label order. Throws ResourceError
/// when the search exceeds `budget` memo nodes.
bool h_descriptor_sat(const HorizontalAutomaton& H, const HStateId& p,
                      const HStateId& target, const AnnotatedMultiset& M,
                      Stats* stats = nullptr, std::uint64_t budget = kDefaultHBudget);

/// All maximal rewriting runs from (p, M), as final (hstate or "" for the
/// failure sink, leftover-empty flag) pairs -- the exhaustive reference used
/// by confluence tests. `budget` caps explored configurations.
struct RewriteEnd {
    HStateId state; // empty string encodes the failure sink
    bool consumed_all = false;
};
std::vector<RewriteEnd> h_all_runs(const HorizontalAutomaton& H, const HStateId& p,
                                   const AnnotatedMultiset& M,
                                   std::uint64_t budget = kDefaultHBudget);

/// One greedy maximal run from (p, M): repeatedly consume the first element
/// (canonical order) enabled by the first applicable transition. Sound for
/// confluent automata, where every maximal run ends identically.
RewriteEnd h_greedy_run(const HorizontalAutomaton& H, const HStateId& p,
                        const AnnotatedMultiset& M, Stats* stats = nullptr);

} // namespace uta

#endif
