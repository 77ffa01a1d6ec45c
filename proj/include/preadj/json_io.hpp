#pragma once

// Structure files and report serialization.
//
//   {"kind": "graph", "universe": [1, 2, 3], "edges": [[1, 2], [2, 3]]}
//   {"kind": "poset", "universe": [1, 2, 3], "leq": [[1, 3]]}
//   {"kind": "metric", "universe": [1, 2], "dist": [[1, 2, "3/2"]], "spectrum": ["0", "3/2"]}
//
// "leq" lists non-reflexive pairs a ⊑ b and must be transitive. "spectrum"
// is optional and defaults to the attained distances plus 0.

#include <string>
#include <string_view>

#include "json.hpp"
#include "preadj/structures.hpp"

namespace preadj {

using Json = nlohmann::ordered_json;

/// Throws ParseError naming `source`, the line and the offending token.
OrderedStructure parse_structure(std::string_view text, const std::string& source);
OrderedStructure load_structure(const std::string& path);

/// Canonical form: a fixed point of parse_structure ∘ structure_to_json.
Json structure_to_json(const OrderedStructure& s);

std::string read_file(const std::string& path);

} // namespace preadj
