#ifndef UTA_DECIDE_HPP
#define UTA_DECIDE_HPP

#include <string_view>

#include "uta/aut.hpp"

namespace uta {

/// A decision problem whose exact procedure is refused because of its
/// complexity; callers may fall back to a bounded brute-force search.
struct HardnessError : Error {
    using Error::Error;
};

struct DecideOptions {
    std::uint64_t budget = 0;  // 0 = library defaults
    bool assume_vdet = false;  // skip the vertical-determinism probe
};

/// Every filter the automaton can apply to an edge (rule formulas,
/// horizontal guards, or the order alphabet, depending on the class).
std::vector<Filter> all_filters(const Aut& A);

/// One representative data value per atom class of the automata's filters.
/// Labels outside the set are indistinguishable from their representative,
/// so enumeration corpora built from it lose no generality.
std::vector<DataValue> label_universe(const std::vector<const Aut*>& as);

/// Routes `problem` (empty | universal | disjoint | included | equivalent)
/// to the exact procedure of A's class. Throws HardnessError where only a
/// brute-force fallback exists (universality and the binary problems for
/// the Presburger and general rewriting classes), Error on class mismatch
/// or failed vertical-determinism probes.
Decision decide_problem(std::string_view problem, const Aut& A, const Aut* B = nullptr,
                        const DecideOptions& opts = {});

} // namespace uta

#endif
