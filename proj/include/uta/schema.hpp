#ifndef UTA_SCHEMA_HPP
#define UTA_SCHEMA_HPP

#include <string>
#include <string_view>

#include "uta/aut.hpp"

namespace uta {

struct LoadOptions {
    /// Skip the confluence check for the confluent class.
    bool trust_confluent = false;
};

/// Parses a schema document (JSON, `"format": 1`). Verifies class
/// well-formedness; for the confluent class the horizontal automaton must
/// pass the confluence check unless trusted; for the ordered class
/// overlapping order filters are refined so that earlier filters win.
Aut load_schema(std::string_view text, const LoadOptions& opts = {});
Aut load_schema_file(const std::string& path, const LoadOptions& opts = {});

/// Serializes an automaton back to the schema format. Descriptors are
/// printed in their surface syntaxes; ordered rule DFAs as explicit edge
/// lists.
std::string save_schema(const Aut& A);

} // namespace uta

#endif
