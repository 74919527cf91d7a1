#ifndef UTA_COMMON_HPP
#define UTA_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uta {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: JSON documents, regex/filter/formula syntax, schemas.
struct ParseError : Error {
    using Error::Error;
};

/// A configurable resource guard was exceeded (state-count guards,
/// search budgets). Distinct from a negative answer.
struct ResourceError : Error {
    using Error::Error;
};

/// A schema or automaton violates a well-formedness requirement.
struct InvalidAutomaton : Error {
    using Error::Error;
};

/// Instrumentation counters, filled in by the evaluation routines when a
/// non-null pointer is passed. Used by complexity smoke tests.
struct Stats {
    std::uint64_t nodes_visited = 0;   // tree nodes evaluated
    std::uint64_t h_steps = 0;         // horizontal rewriting steps taken
    std::uint64_t search_nodes = 0;    // configurations explored (incl. backtracking)
    std::uint64_t sat_checks = 0;      // filter satisfiability tests
};

} // namespace uta

#endif
