#include "preadj/graph.hpp"

#include <algorithm>

namespace preadj {

namespace {

void require_zero_alphabet(const ParameterWord& u)
{
    if (u.alphabet().size() != 1)
        throw DomainError("the encoding word must be over a one-letter alphabet");
}

} // namespace

GraphEncoding encode_graph(const LinOrderedGraph& g)
{
    validate_structure(g);
    GraphEncoding enc{g, g.edges(), 0};
    std::sort(enc.edges.begin(), enc.edges.end(), [](auto a, auto b) {
        return compare_rank_subsets(SubsetOrder::clex, {a.first, a.second}, {b.first, b.second}) < 0;
    });
    enc.object = g.size() + static_cast<int>(enc.edges.size());
    return enc;
}

PowerSetMap graph_map(const GraphEncoding& enc, const ParameterWord& u)
{
    require_zero_alphabet(u);
    if (u.parameters() != enc.object)
        throw DomainError("word has " + std::to_string(u.parameters()) + " parameters, the graph needs " +
                          std::to_string(enc.object));
    const auto classes = u.variable_classes();
    const int n = enc.graph.size();
    PowerSetMap out{u.length(), {}};
    for (int v = 0; v < n; ++v) {
        Subset img = classes[static_cast<std::size_t>(v)];
        for (std::size_t j = 0; j < enc.edges.size(); ++j)
            if (enc.edges[j].first == v || enc.edges[j].second == v)
                img = set_union(img, classes[static_cast<std::size_t>(n) + j]);
        out.images.push_back(std::move(img));
    }
    return out;
}

std::optional<std::string> graph_embedding_defect(const LinOrderedGraph& g, const PowerSetMap& map)
{
    const int n = g.size();
    if (static_cast<int>(map.images.size()) != n)
        return "map has " + std::to_string(map.images.size()) + " images for " + std::to_string(n) + " vertices";
    for (const auto& img : map.images)
        for (int p : img)
            if (p < 1 || p > map.universe)
                return "image element " + std::to_string(p) + " outside {1.." + std::to_string(map.universe) + "}";
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& x = map.images[static_cast<std::size_t>(a)];
            const auto& y = map.images[static_cast<std::size_t>(b)];
            if (compare_rank_subsets(SubsetOrder::clex, x, y) >= 0)
                return "images of vertices " + std::to_string(g.order.label(a)) + " < " +
                       std::to_string(g.order.label(b)) + " are not <_clex increasing";
            if (intersects(x, y) != g.adjacent(a, b))
                return "adjacency of " + std::to_string(g.order.label(a)) + "," + std::to_string(g.order.label(b)) +
                       " not matched by intersection of images";
        }
    return std::nullopt;
}

PowerSetMap phi_graph(const LinOrderedGraph& g, const ParameterWord& u)
{
    PowerSetMap map = graph_map(encode_graph(g), u);
    if (auto defect = graph_embedding_defect(g, map))
        throw ConstructionError("graph image is not an embedding: " + *defect);
    return map;
}

GraphWitness witness_graph(const LinOrderedGraph& g, const LinOrderedGraph& g2, const Embedding& f,
                           const ParameterWord& u)
{
    check_embedding(f.map, g2, g);
    const PowerSetMap image = graph_map(encode_graph(g), u);
    const GraphEncoding enc2 = encode_graph(g2);
    const int p = g2.size();
    const int q = static_cast<int>(enc2.edges.size());

    std::vector<Subset> parts(static_cast<std::size_t>(p + q));
    Subset edge_union;
    for (int j = 0; j < q; ++j) {
        auto [a, b] = enc2.edges[static_cast<std::size_t>(j)];
        parts[static_cast<std::size_t>(p + j)] =
            set_intersection(image.images[static_cast<std::size_t>(f(a))], image.images[static_cast<std::size_t>(f(b))]);
        edge_union = set_union(edge_union, parts[static_cast<std::size_t>(p + j)]);
    }
    for (int i = 0; i < p; ++i)
        parts[static_cast<std::size_t>(i)] = set_difference(image.images[static_cast<std::size_t>(f(i))], edge_union);

    const auto classes = u.variable_classes();
    std::vector<Token> h;
    h.reserve(classes.size());
    for (const auto& xj : classes) {
        Token t = Token::letter(0);
        for (int i = 0; i < p + q; ++i)
            if (is_subset(xj, parts[static_cast<std::size_t>(i)])) {
                t = Token::var(i + 1);
                break;
            }
        h.push_back(t);
    }
    return {ParameterWord::validate(std::move(h), u.alphabet_ptr(), p + q), std::move(parts)};
}

PowerSetMap compose(const PowerSetMap& outer, const Embedding& f)
{
    PowerSetMap out{outer.universe, {}};
    for (int x : f.map)
        out.images.push_back(outer.images.at(static_cast<std::size_t>(x)));
    return out;
}

} // namespace preadj
