#pragma once

// Linearly ordered graphs as images of parameter words over {0}: a vertex
// becomes the union of its own variable class and those of its edges.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preadj/param_words.hpp"
#include "preadj/structures.hpp"

namespace preadj {

struct GraphEncoding
{
    LinOrderedGraph graph;
    /// Edges as rank pairs in <_clex order over the graph's vertex order.
    std::vector<std::pair<int, int>> edges;
    /// Number of vertices plus number of edges.
    int object = 0;
};

GraphEncoding encode_graph(const LinOrderedGraph& g);

/// A map into P({1..universe}); image i is the set assigned to source rank i.
struct PowerSetMap
{
    int universe = 0;
    std::vector<Subset> images;

    friend bool operator==(const PowerSetMap&, const PowerSetMap&) = default;
};

/// Vertex images without any checking beyond the parameter count.
PowerSetMap graph_map(const GraphEncoding& enc, const ParameterWord& u);

/// Why the map is not an embedding into (P({1..N}), meets, <_clex), if it is not.
std::optional<std::string> graph_embedding_defect(const LinOrderedGraph& g, const PowerSetMap& map);

/// graph_map, verified to be an embedding (ConstructionError otherwise).
PowerSetMap phi_graph(const LinOrderedGraph& g, const ParameterWord& u);

struct GraphWitness
{
    ParameterWord h;
    /// X'_1..X'_{p+q}: vertex parts first, then the edge intersections.
    std::vector<Subset> parts;
};

/// The word h with phi_graph(g, u) ∘ f = phi_graph(g2, u·h), for f : g2 -> g.
GraphWitness witness_graph(const LinOrderedGraph& g, const LinOrderedGraph& g2, const Embedding& f,
                           const ParameterWord& u);

/// (outer ∘ f) as a PowerSetMap: image i is outer.images[f(i)].
PowerSetMap compose(const PowerSetMap& outer, const Embedding& f);

} // namespace preadj
