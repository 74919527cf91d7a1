#ifndef UTA_AUTA_HPP
#define UTA_AUTA_HPP

#include "uta/aut.hpp"

namespace uta {

/// Membership for the general rewriting class: per node, a backtracking
/// search over consumption orders (NP in general, memoized).
bool auta_membership(const Aut& A, const DataTree& t, Stats* stats = nullptr);

/// Emptiness for vertically deterministic automata: fixpoint over reachable
/// vertical states, with horizontal reachability over transitions whose
/// guard is singleton-satisfiable against the states reached so far. Each
/// (transition, state choice) pair is tested at most once per run. Returns
/// true iff no final state is reachable.
bool auta_empty(const Aut& A, Stats* stats = nullptr);

} // namespace uta

#endif
