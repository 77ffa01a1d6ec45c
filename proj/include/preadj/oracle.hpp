#pragma once

// Exhaustive decision of the arrow relation C -> (B)^A_k: every k-coloring of
// hom(A, C) admits w in hom(B, C) with w ∘ hom(A, B) monochromatic.
//
// A category adapter supplies hom-set enumeration and composition; the
// search itself runs on an index table and never sees morphisms.

#include <chrono>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preadj/errors.hpp"
#include "preadj/param_words.hpp"
#include "preadj/structures.hpp"

namespace preadj {

struct Budget
{
    std::uint64_t max_hom = 100'000;
    std::uint64_t max_colorings = 1ull << 26;
    /// Wall-clock cap for a single search; zero means none.
    std::chrono::milliseconds wall{0};
    unsigned threads = 1;
};

template <class C>
concept CategoryAdapter = requires(const C& cat, const typename C::Object& x, const typename C::Morphism& m,
                                   std::uint64_t bound) {
    { cat.hom(x, x, bound) } -> std::same_as<std::vector<typename C::Morphism>>;
    { cat.compose(m, m) } -> std::same_as<typename C::Morphism>;
};

template <class S>
struct StructureCategory
{
    using Object = S;
    using Morphism = Embedding;

    std::vector<Embedding> hom(const S& a, const S& b, std::uint64_t bound) const
    {
        return enumerate_embeddings(a, b, bound);
    }
    Embedding compose(const Embedding& w, const Embedding& g) const { return preadj::compose(w, g); }
};

/// GR(A, X): objects are parameter counts, hom(m, n) = W^n_m(A), composition
/// is substitution.
struct GrCategory
{
    using Object = int;
    using Morphism = ParameterWord;

    AlphabetPtr alphabet;

    std::vector<ParameterWord> hom(int m, int n, std::uint64_t bound) const
    {
        return enumerate_words(alphabet, n, m, bound);
    }
    ParameterWord compose(const ParameterWord& w, const ParameterWord& g) const { return preadj::compose(w, g); }
};

/// For every w in hom(B, C), the hom(A, C)-indices of w ∘ g for g in hom(A, B).
struct ArrowTable
{
    int colors = 2;
    std::uint64_t hom_ac = 0;
    std::uint64_t hom_ab = 0;
    std::vector<std::vector<int>> images;
};

template <CategoryAdapter Cat>
struct ArrowProblem
{
    std::vector<typename Cat::Morphism> hom_ac;
    std::vector<typename Cat::Morphism> hom_bc;
    std::vector<typename Cat::Morphism> hom_ab;
    ArrowTable table;
};

template <CategoryAdapter Cat>
ArrowProblem<Cat> build_arrow(const Cat& cat, const typename Cat::Object& a, const typename Cat::Object& b,
                              const typename Cat::Object& c, int k, const Budget& budget)
{
    if (k < 2)
        throw DomainError("the number of colors must be at least 2");
    ArrowProblem<Cat> p;
    p.hom_ac = cat.hom(a, c, budget.max_hom);
    p.hom_bc = cat.hom(b, c, budget.max_hom);
    p.hom_ab = cat.hom(a, b, budget.max_hom);
    std::map<typename Cat::Morphism, int> index;
    for (std::size_t i = 0; i < p.hom_ac.size(); ++i)
        index.emplace(p.hom_ac[i], static_cast<int>(i));
    p.table.colors = k;
    p.table.hom_ac = p.hom_ac.size();
    p.table.hom_ab = p.hom_ab.size();
    for (const auto& w : p.hom_bc) {
        std::vector<int> row;
        row.reserve(p.hom_ab.size());
        for (const auto& g : p.hom_ab) {
            auto it = index.find(cat.compose(w, g));
            if (it == index.end())
                throw ConstructionError("composite is missing from hom(A, C)");
            row.push_back(it->second);
        }
        p.table.images.push_back(std::move(row));
    }
    return p;
}

/// k^H, or nullopt past 2^64.
std::optional<std::uint64_t> coloring_count(int k, std::uint64_t hom_size);

/// Outcome of a full search. Colors are 1-based throughout.
struct SearchResult
{
    bool holds = false;
    /// The least bad coloring in enumeration order, when one exists.
    std::optional<std::vector<int>> bad_coloring;
    std::uint64_t colorings_checked = 0;
};

/// Searches all k^H colorings in Gray-code order with incremental
/// monochromatic bookkeeping. The result does not depend on budget.threads.
SearchResult search_colorings(const ArrowTable& table, const Budget& budget);

struct ColoringCheck
{
    /// Index into hom(B, C) of the first monochromatic w.
    std::optional<int> w;
    int color = 0;
    /// Sorted colors met by w ∘ hom(A, B), for every w.
    std::vector<std::vector<int>> classes_met;
};

/// Colors are 1..k, one per hom(A, C) element.
ColoringCheck check_coloring(const ArrowTable& table, std::span<const int> coloring);

struct ArrowCounts
{
    std::uint64_t hom_ac = 0;
    std::uint64_t hom_bc = 0;
    std::uint64_t hom_ab = 0;
    std::uint64_t colorings_checked = 0;
};

struct ArrowVerdict
{
    bool holds = false;
    std::optional<std::vector<int>> bad_coloring;
    ArrowCounts counts;
};

template <CategoryAdapter Cat>
ArrowVerdict decide_arrow(const ArrowProblem<Cat>& p, const Budget& budget)
{
    SearchResult r = search_colorings(p.table, budget);
    return {r.holds, std::move(r.bad_coloring),
            {p.hom_ac.size(), p.hom_bc.size(), p.hom_ab.size(), r.colorings_checked}};
}

/// W^n_m-arrow in GR by a separate backtracking search over colorings of
/// W^n_ell with color-symmetry breaking. Throws DomainError when m > n.
ArrowVerdict decide_gr(const AlphabetPtr& alphabet, int n, int m, int ell, int k, const Budget& budget);

} // namespace preadj
