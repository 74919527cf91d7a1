#ifndef UTA_TEST_HELPERS_HPP
#define UTA_TEST_HELPERS_HPP

#include <initializer_list>
#include <string>

#include "uta/aut.hpp"

namespace uta::test {

/// Flat tree with the given edge labels, all children leaves.
inline DataTree flat(std::initializer_list<std::string> labels) {
    std::vector<std::pair<DataValue, DataTree>> edges;
    for (const std::string& l : labels) edges.emplace_back(l, DataTree::leaf());
    return DataTree::make(std::move(edges));
}

inline AnnotatedMultiset annotated(
    std::initializer_list<std::pair<std::string, StateSet>> items) {
    AnnotatedMultiset M;
    for (const auto& [d, Q] : items) M.emplace_back(d, Q);
    return M;
}

inline Filter pat(const std::string& source) {
    return Filter::pattern(parse_regex(source));
}

} // namespace uta::test

#endif
