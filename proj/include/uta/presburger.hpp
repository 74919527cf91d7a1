#ifndef UTA_PRESBURGER_HPP
#define UTA_PRESBURGER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uta/filter.hpp"

namespace uta {

/// A multiset of (data value, state set) pairs -- the annotated arity a
/// horizontal descriptor is matched against.
using AnnotatedMultiset = std::vector<std::pair<DataValue, StateSet>>;

/// Counting expression: constant, filter counter, or sum.
class CountingExpr {
public:
    enum class Kind { Const, Counter, Sum };

    Kind kind() const { return kind_; }
    std::uint64_t value() const { return value_; }
    const Filter& filter() const { return *filter_; }
    const CountingExpr& left() const { return *left_; }
    const CountingExpr& right() const { return *right_; }

    static CountingExpr constant(std::uint64_t n);
    static CountingExpr counter(Filter f);
    static CountingExpr sum(CountingExpr a, CountingExpr b);

private:
    Kind kind_ = Kind::Const;
    std::uint64_t value_ = 0;
    std::shared_ptr<const Filter> filter_;
    std::shared_ptr<const CountingExpr> left_, right_;
};

/// Propositional counting formula over counters:
///   e <= e' | e == e' mod m | conjunction | disjunction | negation.
class PresburgerFormula {
public:
    enum class Kind { Le, ModEq, And, Or, Not };

    Kind kind() const { return kind_; }
    const CountingExpr& lhs() const { return *lhs_; }
    const CountingExpr& rhs() const { return *rhs_; }
    std::uint64_t modulus() const { return modulus_; }
    const PresburgerFormula& left() const { return *left_; }
    const PresburgerFormula& right() const { return *right_; }

    static PresburgerFormula le(CountingExpr a, CountingExpr b);
    static PresburgerFormula mod_eq(CountingExpr a, CountingExpr b, std::uint64_t m);
    static PresburgerFormula p_and(PresburgerFormula a, PresburgerFormula b);
    static PresburgerFormula p_or(PresburgerFormula a, PresburgerFormula b);
    static PresburgerFormula p_not(PresburgerFormula a);

    // common sugar
    static PresburgerFormula eq(CountingExpr a, CountingExpr b);
    static PresburgerFormula ge(CountingExpr a, CountingExpr b);

private:
    Kind kind_ = Kind::Le;
    std::shared_ptr<const CountingExpr> lhs_, rhs_;
    std::uint64_t modulus_ = 1;
    std::shared_ptr<const PresburgerFormula> left_, right_;
};

std::uint64_t eval_counting(const CountingExpr& e, const AnnotatedMultiset& M);
bool presburger_holds(const PresburgerFormula& f, const AnnotatedMultiset& M);

/// Surface syntax: `count(<filter>)`, naturals, `+`, comparisons
/// `<=`, `>=`, `==`, `== ... mod m`, connectives `&`, `|`, `!`, parens.
PresburgerFormula parse_presburger(
    std::string_view text,
    const std::vector<std::pair<std::string, Regex>>& named_patterns = {});
std::string presburger_to_string(const PresburgerFormula& f);

StateSet presburger_support(const PresburgerFormula& f);
std::vector<Filter> presburger_filters(const PresburgerFormula& f);

/// Evaluates a formula over per-filter counts (the counter of a filter is
/// looked up in `filters` by structural equality).
bool presburger_eval_counts(const PresburgerFormula& f,
                            const std::vector<Filter>& filters,
                            const std::vector<std::uint64_t>& counts);

/// Shape data driving bounded-search completeness: whether every atomic
/// comparison pits counters against a constant, the largest such constant,
/// and the lcm of congruence moduli.
struct FormulaProfile {
    bool comparison_fragment = true;
    std::uint64_t max_const = 0;
    std::uint64_t lcm = 1;
};
FormulaProfile profile_formula(const PresburgerFormula& f);

/// One letter of a satisfiability search space: the truth value of each
/// counter filter, plus a witness pair used to expand count vectors into
/// concrete multisets.
struct SatLetter {
    std::vector<char> truth; // indexed like the filter list passed along
    Witness witness;
};

enum class SatVerdict { Sat, Unsat, Unknown };

struct SatResult {
    SatVerdict verdict = SatVerdict::Unknown;
    std::vector<std::uint64_t> counts; // per letter, for Sat
};

/// Bounded three-valued satisfiability over multisets built from the given
/// letters. Searches count vectors with per-letter counts up to `bound`
/// (0 = automatic: letters x (max constant + lcm of moduli + 1)) in
/// lexicographic order and reports the least witness. Unsat is claimed
/// only when the formula lies in the fragment whose atomic comparisons
/// pit counter sums against constants (congruences are always fine) and
/// the bound covers sum-of-constants + lcm-of-moduli; otherwise the
/// exhausted search reports Unknown.
SatResult presburger_sat_letters(const PresburgerFormula& f,
                                 const std::vector<Filter>& filters,
                                 const std::vector<SatLetter>& letters,
                                 std::uint64_t bound = 0);

/// Same, with the letters taken from an atomization of `filters`.
SatResult presburger_sat(const PresburgerFormula& f, const std::vector<Filter>& filters,
                         const std::vector<Atom>& atoms, std::uint64_t bound = 0);

/// Expands a count vector into a concrete annotated multiset using the
/// letters' witnesses.
AnnotatedMultiset expand_counts(const std::vector<SatLetter>& letters,
                                const std::vector<std::uint64_t>& counts);

} // namespace uta

#endif
