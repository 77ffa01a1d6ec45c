#include "preadj/poset.hpp"

#include <algorithm>

namespace preadj {

PosetEncoding encode_poset(const LinOrderedPoset& p)
{
    validate_structure(p);
    PosetEncoding enc{p, downsets(p), 0};
    enc.object = static_cast<int>(enc.downsets.size());
    return enc;
}

PowerSetMap poset_map(const PosetEncoding& enc, const ParameterWord& u)
{
    if (u.alphabet().size() != 1)
        throw DomainError("the encoding word must be over a one-letter alphabet");
    if (u.parameters() != enc.object)
        throw DomainError("word has " + std::to_string(u.parameters()) + " parameters, the poset needs " +
                          std::to_string(enc.object));
    const auto classes = u.variable_classes();
    PowerSetMap out{u.length(), std::vector<Subset>(static_cast<std::size_t>(enc.poset.size()))};
    for (std::size_t alpha = 0; alpha < enc.downsets.size(); ++alpha)
        for (int i : enc.downsets[alpha])
            out.images[static_cast<std::size_t>(i)] = set_union(out.images[static_cast<std::size_t>(i)], classes[alpha]);
    return out;
}

std::optional<std::string> poset_embedding_defect(const LinOrderedPoset& p, const PowerSetMap& map)
{
    const int n = p.size();
    if (static_cast<int>(map.images.size()) != n)
        return "map has " + std::to_string(map.images.size()) + " images for " + std::to_string(n) + " elements";
    for (const auto& img : map.images)
        for (int x : img)
            if (x < 1 || x > map.universe)
                return "image element " + std::to_string(x) + " outside {1.." + std::to_string(map.universe) + "}";
    auto name = [&](int a) { return std::to_string(p.order.label(a)); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                continue;
            const auto& x = map.images[static_cast<std::size_t>(a)];
            const auto& y = map.images[static_cast<std::size_t>(b)];
            if (a < b && compare_rank_subsets(SubsetOrder::clex, x, y) >= 0)
                return "images of " + name(a) + " < " + name(b) + " are not <_clex increasing";
            if (p.below(a, b) != is_subset(y, x))
                return p.below(a, b) ? name(a) + " ⊑ " + name(b) + " but image of " + name(a) + " does not contain image of " + name(b)
                                     : "image of " + name(a) + " contains image of " + name(b) + " but " + name(a) + " ⋢ " + name(b);
        }
    return std::nullopt;
}

PowerSetMap phi_poset(const LinOrderedPoset& p, const ParameterWord& u)
{
    PowerSetMap map = poset_map(encode_poset(p), u);
    if (auto defect = poset_embedding_defect(p, map))
        throw ConstructionError("poset image is not an embedding: " + *defect);
    return map;
}

ParameterWord witness_poset(const LinOrderedPoset& p, const LinOrderedPoset& p2, const Embedding& f,
                            const ParameterWord& u)
{
    check_embedding(f.map, p2, p);
    const PosetEncoding enc = encode_poset(p);
    const PosetEncoding enc2 = encode_poset(p2);
    if (u.parameters() != enc.object)
        throw DomainError("word has " + std::to_string(u.parameters()) + " parameters, the poset needs " +
                          std::to_string(enc.object));
    std::vector<Token> h;
    h.reserve(enc.downsets.size());
    for (const auto& d : enc.downsets) {
        Subset pre;
        for (int x = 0; x < p2.size(); ++x)
            if (std::binary_search(d.begin(), d.end(), f(x)))
                pre.push_back(x);
        if (pre.empty()) {
            h.push_back(Token::letter(0));
            continue;
        }
        auto it = std::find(enc2.downsets.begin(), enc2.downsets.end(), pre);
        if (it == enc2.downsets.end())
            throw ConstructionError("preimage of a downset is not a downset of the subposet");
        h.push_back(Token::var(static_cast<int>(it - enc2.downsets.begin()) + 1));
    }
    return ParameterWord::validate(std::move(h), u.alphabet_ptr(), enc2.object);
}

} // namespace preadj
