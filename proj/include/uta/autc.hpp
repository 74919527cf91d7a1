#ifndef UTA_AUTC_HPP
#define UTA_AUTC_HPP

#include "uta/aut.hpp"

namespace uta {

/// Confluence verdict for a horizontal automaton over an atomized guard
/// alphabet. Confluent is a theorem (per-atom determinism plus the diamond
/// property, and every step shrinks the multiset, so Newman's lemma
/// applies); NotProvablyConfluent only means this sufficient check failed.
struct ConfluenceReport {
    enum class Verdict { Confluent, NotProvablyConfluent };
    Verdict verdict = Verdict::Confluent;
    HStateId state;                       // where the check failed
    std::size_t atom_a = 0, atom_b = 0;   // offending atom indices
    HStateId succ_a, succ_b;              // divergent successors (when both step)
    std::string reason;

    bool ok() const { return verdict == Verdict::Confluent; }
};

/// `filters` are the transition guards (deduplicated, in first-use order);
/// `atoms` their atomization over the owning automaton's states.
ConfluenceReport check_confluent(const HorizontalAutomaton& H,
                                 const std::vector<Filter>& filters,
                                 const std::vector<Atom>& atoms);

/// Convenience: atomizes A's guards and checks A's horizontal automaton.
ConfluenceReport autc_check(const Aut& A);

/// Deduplicated guard list of a horizontal automaton, plus the guard index
/// of each transition.
std::vector<Filter> guard_filters(const HorizontalAutomaton& H,
                                  std::vector<std::size_t>* transition_guard = nullptr);

/// Greedy linear membership; sound because confluence makes every maximal
/// rewriting run end identically.
bool autc_membership(const Aut& A, const DataTree& t, Stats* stats = nullptr);

/// Polynomial universality for confluent, vertically deterministic
/// automata: every accessible vertical state final, every accessible
/// hstate closes a descriptor, and at every accessible hstate the outgoing
/// guards jointly accept every (value, accessible state) pair.
bool autc_universal(const Aut& A, Stats* stats = nullptr);

/// Joint reachability decisions, exact up to the pumping bound on arity
/// size ((|P_A|+1)·(|P_B|+1) per node); `budget` caps the number of
/// explored arity multisets (0 = default). Yes = disjoint / included.
Decision autc_disjoint(const Aut& A, const Aut& B, std::uint64_t budget = 0,
                       Stats* stats = nullptr);
Decision autc_inclusion(const Aut& A, const Aut& B, std::uint64_t budget = 0,
                        Stats* stats = nullptr);

} // namespace uta

#endif
