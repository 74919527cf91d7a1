#ifndef UTA_AUT_HPP
#define UTA_AUT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uta/horizontal.hpp"
#include "uta/tree.hpp"

namespace uta {

/// Arity constraint ⟪d₁:q₁,…,dₙ:qₙ⟫: matches multisets that contain one
/// distinct element per entry (with qᵢ among its states) and whose
/// remaining elements carry none of the listed labels. The empty
/// constraint matches only the empty multiset (leaves).
struct ArityConstraint {
    std::vector<std::pair<DataValue, StateId>> entries;
};

struct ArityFormula {
    enum class Kind { Atom, And, Or, Not };
    Kind kind = Kind::Atom;
    ArityConstraint atom;
    std::shared_ptr<ArityFormula> left, right;

    static ArityFormula make_atom(ArityConstraint c);
    static ArityFormula f_and(ArityFormula a, ArityFormula b);
    static ArityFormula f_or(ArityFormula a, ArityFormula b);
    static ArityFormula f_not(ArityFormula a);
};

bool arity_descriptor_sat(const ArityFormula& h, const AnnotatedMultiset& M);

enum class AutClass { Autp, Auta, Autc, AutoOrdered, Arity };

/// One vertical rule: a horizontal descriptor and a target state. The
/// descriptor member used depends on the automaton class.
struct Rule {
    std::shared_ptr<const PresburgerFormula> formula; // Autp
    HStateId h_from, h_to;                            // Auta / Autc
    std::shared_ptr<const Dfa> dfa;                   // AutoOrdered
    std::shared_ptr<const ArityFormula> arity;        // Arity
    StateId target;
};

/// An alternating bottom-up automaton over unordered data trees: vertical
/// states, final states, and rules whose descriptors are drawn from one of
/// the supported horizontal descriptor classes.
struct Aut {
    AutClass cls = AutClass::Autp;
    StateSet states;
    StateSet finals;
    std::vector<Rule> rules;

    std::shared_ptr<const HorizontalAutomaton> horizontal; // Auta / Autc
    HStateId initial_h;                                    // Autc designated start

    // AutoOrdered: the ordered filter alphabet f₁ ≺ … ≺ fₙ shared by all
    // rule DFAs, as (name, filter) in order
    std::vector<std::pair<std::string, Filter>> order;

    std::vector<std::pair<std::string, Regex>> patterns; // named patterns

    std::uint64_t h_budget = kDefaultHBudget;
};

void check_well_formed(const Aut& A);

/// Three-valued decision outcome with an optional witness tree (a
/// counter-example or an overlap/membership witness, depending on the
/// question asked).
struct Decision {
    enum class Answer { Yes, No, Unknown };
    Answer answer = Answer::Unknown;
    std::optional<DataTree> witness;
};

StateSet evaluate(const Aut& A, const DataTree& t, Stats* stats = nullptr);
bool accepts(const Aut& A, const DataTree& t, Stats* stats = nullptr);

/// Index of the first order filter matching (d, Q), or -1.
int classify_ordered(const Aut& A, const DataValue& d, const StateSet& Q);

// --- encoding of classical ranked tree automata -------------------------

struct RankedTerm {
    std::string symbol;
    std::vector<RankedTerm> args;
};

struct RankedFormula {
    enum class Kind { App, And, Not };
    Kind kind = Kind::App;
    std::string symbol;          // App
    std::vector<StateId> args;   // App
    std::shared_ptr<RankedFormula> left, right;

    static RankedFormula app(std::string symbol, std::vector<StateId> args);
    static RankedFormula f_and(RankedFormula a, RankedFormula b);
    static RankedFormula f_not(RankedFormula a);
};

struct RankedAutomaton {
    StateSet states;
    StateSet finals;
    std::vector<std::pair<RankedFormula, StateId>> rules;
};

/// ⟦f(t₁,…,tₙ)⟧ = ⟪⟦f⟧:⟪⟫, "1":⟦t₁⟧, …, "n":⟦tₙ⟧⟫. All-digit function
/// symbols are rejected (reserved for argument positions).
DataTree encode_ranked_tree(const RankedTerm& t);
Aut encode_ranked(const RankedAutomaton& B);

} // namespace uta

#endif
