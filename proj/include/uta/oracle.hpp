#ifndef UTA_ORACLE_HPP
#define UTA_ORACLE_HPP

#include "uta/aut.hpp"

namespace uta {

/// Bounds for exhaustive tree enumeration. Labels are all strings over
/// `symbols` up to `max_word_len` characters.
struct EnumConfig {
    std::string symbols = "ab";
    std::size_t max_word_len = 1;
    std::size_t max_nodes = 3;
    std::size_t max_branching = 64;
    std::size_t budget = 2000000;
};

/// Every tree within the bounds exactly once, in size-lexicographic order
/// (node count first, then canonical tree order).
std::vector<DataTree> enum_trees(const EnumConfig& cfg);

/// Like enum_trees, but over an explicit label list; stops quietly once
/// `max_trees` trees have been produced (bounded decision fallback).
std::vector<DataTree> enum_trees_over(const std::vector<DataValue>& labels,
                                      std::size_t max_nodes, std::size_t max_trees);

/// All count vectors over `atoms` components with sum <= max_size, in
/// graded-lex order.
std::vector<std::vector<std::uint64_t>> enum_multisets(std::size_t atoms,
                                                       std::uint64_t max_size);

/// Reference semantics by definitional recursion with naive descriptor
/// checks: all consumption orders for the rewriting classes, direct formula
/// evaluation for the Presburger class, classify-sort-run for the ordered
/// class. The greedy/memoized fast paths must agree with this.
StateSet brute_evaluate(const Aut& A, const DataTree& t,
                        std::uint64_t budget = kDefaultHBudget);
bool brute_membership(const Aut& A, const DataTree& t,
                      std::uint64_t budget = kDefaultHBudget);

/// True iff no corpus tree evaluates to more than one state. Partial
/// automata (some trees evaluating to no state) still count as
/// deterministic: the run is unique, it just rejects.
bool vertically_deterministic(const Aut& A, const std::vector<DataTree>& corpus);

} // namespace uta

#endif
