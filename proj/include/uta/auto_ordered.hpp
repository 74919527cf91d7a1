#ifndef UTA_AUTO_ORDERED_HPP
#define UTA_AUTO_ORDERED_HPP

#include "uta/aut.hpp"

namespace uta {

bool auto_membership(const Aut& A, const DataTree& t, Stats* stats = nullptr);

/// Acceptor of the sorted words f₁*…fₙ* over an n-letter alphabet
/// (n + 1 states including the sink).
Dfa sorted_word_acceptor(int n);

/// Restriction of a rule DFA to its ordered language L ∩ f₁*…fₙ*, minimized.
Dfa ordered_language_dfa(const Dfa& d);

enum class AutoProblem { Empty, Universal, Disjoint, Included, Equivalent };

/// Exact decision suite over the joint letter alphabet (pairs of per-side
/// letter classes refined by child evaluations). Requires a joint letter
/// order consistent with both sides' orders; vertically deterministic
/// inputs assumed. Yes = the property holds; No carries a witness tree
/// where applicable. B is ignored for Empty/Universal.
Decision auto_decide(AutoProblem problem, const Aut& A, const Aut* B = nullptr,
                     Stats* stats = nullptr);

/// Rebuilds every rule DFA for a permuted filter order with the same
/// Parikh (multiset) acceptance: the DFA is decomposed into per-letter
/// count conditions along boundary-state sequences, which are re-chained
/// in the new order. May grow exponentially; guarded.
Aut reorder(const Aut& A, const std::vector<std::string>& order2);

/// Counting constraints over the order's letters:
///   #f ≤ k | #f ≥ k | #f ≡ₘ r | ∧ | ∨ | ¬.
struct CountConstraint {
    enum class Kind { Le, Ge, ModEq, And, Or, Not };
    Kind kind = Kind::Le;
    std::string atom;          // letter name for the atomic kinds
    std::uint64_t k = 0;       // threshold / residue
    std::uint64_t mod = 1;     // ModEq
    std::shared_ptr<CountConstraint> left, right;

    static CountConstraint le(std::string atom, std::uint64_t k);
    static CountConstraint ge(std::string atom, std::uint64_t k);
    static CountConstraint mod_eq(std::string atom, std::uint64_t mod, std::uint64_t r);
    static CountConstraint c_and(CountConstraint a, CountConstraint b);
    static CountConstraint c_or(CountConstraint a, CountConstraint b);
    static CountConstraint c_not(CountConstraint a);
};

/// Surface syntax: `count(f) <= k`, `count(f) >= k`, `count(f) == r mod m`,
/// `count(f) == k` sugar, `&`, `|`, `!`, parens.
CountConstraint parse_counting(std::string_view text);
std::string counting_to_string(const CountConstraint& c);

/// Compiles a counting constraint to a DFA over the named letter order:
/// a multiset is accepted (via its sorted word) iff it satisfies the
/// constraint.
Dfa compile_counting(const CountConstraint& c,
                     const std::vector<std::string>& order_names);

} // namespace uta

#endif
