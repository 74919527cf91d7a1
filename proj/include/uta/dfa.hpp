#ifndef UTA_DFA_HPP
#define UTA_DFA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "uta/common.hpp"

namespace uta {

/// A complete deterministic finite automaton over the letter alphabet
/// {0, ..., alphabet-1}. Letters are indices; what they mean (codepoint
/// classes, filters) is decided by the caller.
struct Dfa {
    int alphabet = 0;
    std::vector<std::vector<int>> next; // [state][letter]
    int initial = 0;
    std::vector<char> accepting;

    int state_count() const { return static_cast<int>(next.size()); }
    int step(int state, int letter) const { return next[state][letter]; }

    bool accepts(const std::vector<int>& word) const {
        int s = initial;
        for (int a : word) s = next[s][a];
        return accepting[s] != 0;
    }

    /// Single-state automaton accepting everything (value=true) or nothing.
    static Dfa constant(int alphabet, bool value);
};

Dfa dfa_complement(Dfa d);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);
Dfa dfa_union(const Dfa& a, const Dfa& b);
Dfa dfa_difference(const Dfa& a, const Dfa& b);

/// Hopcroft-style minimization followed by canonical BFS renumbering.
/// Minimal automata of equal languages compare equal.
Dfa dfa_minimize(const Dfa& d);

bool dfa_equal(const Dfa& a, const Dfa& b);
bool dfa_empty(const Dfa& d);
bool dfa_universal(const Dfa& d);

/// Shortest accepted word, lexicographically least among the shortest.
std::optional<std::vector<int>> dfa_shortest_word(const Dfa& d);

/// Determinizes an NFA given as (epsilon closure handled by caller = none):
/// states 0..n-1, transition list per state per letter, set of initials.
struct Nfa {
    int alphabet = 0;
    std::vector<std::vector<std::vector<int>>> next; // [state][letter] -> targets
    std::vector<int> initials;
    std::vector<char> accepting;
    std::vector<std::vector<int>> epsilon; // [state] -> targets
};

Dfa nfa_determinize(const Nfa& n, std::size_t state_guard = 0);

} // namespace uta

#endif
