#ifndef UTA_FILTER_HPP
#define UTA_FILTER_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uta/pattern.hpp"
#include "uta/tree.hpp"

namespace uta {

/// Vertical state identifier.
using StateId = std::string;
using StateSet = std::set<StateId>;

/// A filter: Boolean combination of data-value patterns and state tests,
/// evaluated on a (data value, state set) pair.
class Filter {
public:
    enum class Kind { Pattern, State, And, Or, Not };

    Kind kind() const { return kind_; }
    const StateId& state() const { return state_; }
    const Regex& regex() const { return *regex_; }
    const PatternAcceptor& acceptor() const { return *acceptor_; }
    const Filter& left() const { return *left_; }
    const Filter& right() const { return *right_; }

    static Filter pattern(Regex r, std::size_t guard = kPatternStateGuard);
    static Filter state(StateId q);
    static Filter f_and(Filter a, Filter b);
    static Filter f_or(Filter a, Filter b);
    static Filter f_not(Filter a);

private:
    Kind kind_ = Kind::Pattern;
    StateId state_;
    std::shared_ptr<const Regex> regex_;
    std::shared_ptr<const PatternAcceptor> acceptor_;
    std::shared_ptr<const Filter> left_, right_;
};

/// Surface syntax: `pattern(...)`, state identifiers, `&`, `|`, `!`, parens.
/// Identifiers inside pattern(...) refer to named patterns.
Filter parse_filter(std::string_view text,
                    const std::vector<std::pair<std::string, Regex>>& named_patterns = {});
std::string filter_to_string(const Filter& f);
bool filter_equal(const Filter& a, const Filter& b);

bool filter_eval(const Filter& f, const DataValue& d, const StateSet& Q);
StateSet filter_support(const Filter& f);

struct Witness {
    DataValue value;
    StateSet states; // size <= 1 for singleton problems
};

/// Reduces a filter under a fixed state set to a pure pattern acceptor.
PatternAcceptor filter_reduce(const Filter& f, const StateSet& Q,
                              std::size_t guard = kPatternStateGuard);

/// Singleton satisfiability: a witness (d, Q) with |Q| <= 1, Q within the
/// given states, or nullopt. State choices are tried in order: empty set
/// first, then each state in ascending order; the data value is the
/// shortest accepted word of the reduced acceptor.
std::optional<Witness> filter_singleton_sat(const Filter& f, const StateSet& states,
                                            std::size_t guard = kPatternStateGuard);

/// One atom of an atomization: a sign assignment over the filter list,
/// nonempty over pairs (d, Q) with |Q| <= 1, plus one witness.
struct Atom {
    std::vector<char> signs; // signs[i] != 0 iff filter i holds
    Witness witness;
};

/// Refines a filter list into mutually disjoint, jointly exhaustive atoms
/// over pairs (d, Q) with |Q| <= 1 and Q within `states`. Atoms with empty
/// language are dropped; the order is lexicographic on sign vectors with
/// positive before negative.
std::vector<Atom> atomize(const std::vector<Filter>& fs, const StateSet& states,
                          std::size_t guard = kPatternStateGuard);

/// True iff the given (d, Q) satisfies the atom's sign assignment.
bool atom_matches(const std::vector<Filter>& fs, const Atom& a, const DataValue& d,
                  const StateSet& Q);

} // namespace uta

#endif
