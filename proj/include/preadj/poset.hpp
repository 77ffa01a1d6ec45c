#pragma once

// Linearly ordered posets as images of parameter words over {0}: element i
// becomes the union of the variable classes of the downsets containing it,
// inside (P({1..n}), ⊇, <_clex).

#include <optional>
#include <string>
#include <vector>

#include "preadj/graph.hpp"
#include "preadj/param_words.hpp"
#include "preadj/structures.hpp"

namespace preadj {

struct PosetEncoding
{
    LinOrderedPoset poset;
    /// Nonempty downsets D_1 <_alex ... <_alex D_m, as rank sets.
    std::vector<Subset> downsets;
    int object = 0;
};

PosetEncoding encode_poset(const LinOrderedPoset& p);

PowerSetMap poset_map(const PosetEncoding& enc, const ParameterWord& u);

/// Why the map is not an embedding into (P({1..n}), ⊇, <_clex), if it is not.
std::optional<std::string> poset_embedding_defect(const LinOrderedPoset& p, const PowerSetMap& map);

PowerSetMap phi_poset(const LinOrderedPoset& p, const ParameterWord& u);

/// The word h with phi_poset(p, u) ∘ f = phi_poset(p2, u·h), for f : p2 -> p.
/// h_i = x_j when f^{-1}(D_i) = D'_j, and 0 when the preimage is empty.
ParameterWord witness_poset(const LinOrderedPoset& p, const LinOrderedPoset& p2, const Embedding& f,
                            const ParameterWord& u);

} // namespace preadj
