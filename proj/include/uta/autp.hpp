#ifndef UTA_AUTP_HPP
#define UTA_AUTP_HPP

#include <optional>

#include "uta/aut.hpp"

namespace uta {

/// Membership for the Presburger descriptor class: one formula evaluation
/// per rule per node, polynomial overall.
bool autp_membership(const Aut& A, const DataTree& t, Stats* stats = nullptr);

inline constexpr std::size_t kDeterminizeGuard = std::size_t{1} << 16;

/// Powerset construction: states become subsets, each new rule is a signed
/// conjunction over an original-rule subset, and state tests are rewritten
/// to range over the subsets containing the tested state. The result
/// evaluates every tree to exactly one state and accepts the same language.
Aut autp_determinize(const Aut& A, std::size_t guard = kDeterminizeGuard);

enum class EmptinessVerdict { Empty, NonEmpty, Unknown };

struct EmptinessResult {
    EmptinessVerdict verdict = EmptinessVerdict::Unknown;
    std::optional<DataTree> witness; // for NonEmpty
};

/// Emptiness via the reachable-annotation-set fixpoint: grow the family S
/// of tree-realizable state sets by enumerating bounded arity multisets
/// over letters (annotation set from S, data-value class), computing the
/// exact annotation each multiset induces. `bound` caps per-letter counts
/// (0 = automatic from the formulas' constants and moduli). Empty is
/// claimed only when the rule formulas lie in the comparison-with-constants
/// fragment and the bound covers it; otherwise exhaustion yields Unknown.
EmptinessResult autp_empty(const Aut& A, std::uint64_t bound = 0,
                           Stats* stats = nullptr);

} // namespace uta

#endif
