#pragma once

// Finite linearly ordered structures: graphs, posets, convexly ordered
// ultrametric spaces and linearly ordered metric spaces, with embeddings.
//
// All element references are ranks in the structure's BaseOrder; labels
// only matter for I/O.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "preadj/combinat.hpp"
#include "preadj/errors.hpp"
#include "preadj/rational.hpp"

namespace preadj {

enum class StructureKind { graph, poset, ultrametric, metric };

std::string_view to_string(StructureKind kind);
StructureKind parse_structure_kind(std::string_view text);

/// Axiom violation found while validating a structure or an embedding.
class StructureError : public DomainError
{
public:
    using DomainError::DomainError;
};

template <class T>
class SquareMatrix
{
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, T fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int size() const noexcept { return n_; }
    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<T> data_;
};

struct LinOrderedGraph
{
    BaseOrder order;
    SquareMatrix<char> adjacency;

    int size() const noexcept { return order.size(); }
    bool adjacent(int a, int b) const { return adjacency(a, b) != 0; }
    /// Edges as rank pairs (a < b), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const LinOrderedGraph&, const LinOrderedGraph&) = default;
};

struct LinOrderedPoset
{
    BaseOrder order;
    SquareMatrix<char> leq; // reflexive

    int size() const noexcept { return order.size(); }
    bool below(int a, int b) const { return leq(a, b) != 0; }
    bool comparable(int a, int b) const { return below(a, b) || below(b, a); }

    friend bool operator==(const LinOrderedPoset&, const LinOrderedPoset&) = default;
};

/// Shared representation of the two distance-space kinds. The spectrum is the
/// declared value set {0 = s_0 < ... < s_k}; attained distances must lie in it.
struct DistanceData
{
    BaseOrder order;
    SquareMatrix<Rational> dist;
    std::vector<Rational> spectrum;

    int size() const noexcept { return order.size(); }
    const Rational& d(int a, int b) const { return dist(a, b); }
    /// Index of a value in the declared spectrum. Throws DomainError if absent.
    int spectrum_index(const Rational& value) const;
    /// Attained distances, sorted, always including 0.
    std::vector<Rational> attained() const;

    friend bool operator==(const DistanceData&, const DistanceData&) = default;
};

struct ConvUltrametricSpace : DistanceData
{
    friend bool operator==(const ConvUltrametricSpace&, const ConvUltrametricSpace&) = default;
};

struct LinOrderedMetricSpace : DistanceData
{
    friend bool operator==(const LinOrderedMetricSpace&, const LinOrderedMetricSpace&) = default;
};

using OrderedStructure = std::variant<LinOrderedGraph, LinOrderedPoset, ConvUltrametricSpace, LinOrderedMetricSpace>;

StructureKind kind_of(const OrderedStructure& s);
constexpr StructureKind kind_of(const LinOrderedGraph&) { return StructureKind::graph; }
constexpr StructureKind kind_of(const LinOrderedPoset&) { return StructureKind::poset; }
constexpr StructureKind kind_of(const ConvUltrametricSpace&) { return StructureKind::ultrametric; }
constexpr StructureKind kind_of(const LinOrderedMetricSpace&) { return StructureKind::metric; }
int structure_size(const OrderedStructure& s);

// Builders take element labels and validate the result.

/// Edges are unordered label pairs; loops and duplicates are rejected.
LinOrderedGraph make_graph(BaseOrder order, std::span<const std::pair<int, int>> edges);
/// Non-reflexive pairs (a, b) meaning a ⊑ b; reflexivity is added. The
/// relation must already be transitive.
LinOrderedPoset make_poset(BaseOrder order, std::span<const std::pair<int, int>> leq_pairs);

struct DistanceEntry
{
    int a;
    int b;
    Rational value;
};

/// Every unordered pair of distinct points must be given exactly once.
/// Without a spectrum the attained distances plus 0 are used.
ConvUltrametricSpace make_ultrametric(BaseOrder order, std::span<const DistanceEntry> entries,
                                      std::optional<std::vector<Rational>> spectrum = std::nullopt);
LinOrderedMetricSpace make_metric(BaseOrder order, std::span<const DistanceEntry> entries,
                                  std::optional<std::vector<Rational>> spectrum = std::nullopt);

/// Builds from a full distance matrix over ranks of `order` (no label translation).
ConvUltrametricSpace ultrametric_from_matrix(BaseOrder order, SquareMatrix<Rational> dist,
                                             std::vector<Rational> spectrum);
LinOrderedMetricSpace metric_from_matrix(BaseOrder order, SquareMatrix<Rational> dist,
                                         std::vector<Rational> spectrum);

struct ValidationReport
{
    StructureKind kind;
    int size;
    /// Attained distances plus 0 for the distance kinds, empty otherwise.
    std::vector<Rational> attained_spectrum;
};

/// Checks every axiom of the structure's kind; throws StructureError naming
/// the axiom and witnessing elements (by label).
ValidationReport validate_structure(const LinOrderedGraph& g);
ValidationReport validate_structure(const LinOrderedPoset& p);
ValidationReport validate_structure(const ConvUltrametricSpace& u);
ValidationReport validate_structure(const LinOrderedMetricSpace& m);
ValidationReport validate_structure(const OrderedStructure& s);

/// Requires a valid spectrum: sorted, distinct, s_0 = 0.
void validate_spectrum(std::span<const Rational> spectrum);

/// Injective map between universes (source rank -> target rank).
struct Embedding
{
    std::vector<int> map;

    int operator()(int x) const { return map.at(static_cast<std::size_t>(x)); }
    int size() const noexcept { return static_cast<int>(map.size()); }

    friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

Embedding identity_embedding(int n);
/// (outer ∘ inner)(x) = outer(inner(x)).
Embedding compose(const Embedding& outer, const Embedding& inner);

/// Accepts iff the map is injective and preserves and reflects the strict
/// order and the kind's relations. Throws StructureError naming the failed
/// clause and a witness pair otherwise.
Embedding check_embedding(std::span<const int> map, const LinOrderedGraph& src, const LinOrderedGraph& tgt);
Embedding check_embedding(std::span<const int> map, const LinOrderedPoset& src, const LinOrderedPoset& tgt);
Embedding check_embedding(std::span<const int> map, const ConvUltrametricSpace& src, const ConvUltrametricSpace& tgt);
Embedding check_embedding(std::span<const int> map, const LinOrderedMetricSpace& src, const LinOrderedMetricSpace& tgt);
Embedding check_embedding(std::span<const int> map, const OrderedStructure& src, const OrderedStructure& tgt);

/// Non-throwing variant of check_embedding.
template <class S>
bool is_embedding(std::span<const int> map, const S& src, const S& tgt)
{
    try {
        check_embedding(map, src, tgt);
        return true;
    } catch (const StructureError&) {
        return false;
    }
}

/// Relation compatibility of one pair in source vs. its image in target.
bool pair_compatible(const LinOrderedGraph& src, int a, int b, const LinOrderedGraph& tgt, int fa, int fb);
bool pair_compatible(const LinOrderedPoset& src, int a, int b, const LinOrderedPoset& tgt, int fa, int fb);
bool pair_compatible(const DistanceData& src, int a, int b, const DistanceData& tgt, int fa, int fb);

/// Backtracking stream of all embeddings src -> tgt in lexicographic order of
/// the image vector. Single consumer. Holds references to both structures.
template <class S>
class EmbeddingEnumerator
{
public:
    EmbeddingEnumerator(const S& src, const S& tgt) : src_(src), tgt_(tgt)
    {
        n_ = src.size();
        t_ = tgt.size();
        if (n_ > t_)
            done_ = true;
    }

    std::optional<Embedding> next()
    {
        if (done_)
            return std::nullopt;
        if (!started_) {
            started_ = true;
            map_.assign(static_cast<std::size_t>(n_), -1);
            if (n_ == 0) {
                done_ = true;
                return Embedding{{}};
            }
            depth_ = 0;
        } else {
            depth_ = n_ - 1;
        }
        if (!search()) {
            done_ = true;
            return std::nullopt;
        }
        return Embedding{map_};
    }

private:
    // Continue the backtracking search from depth_, advancing map_[depth_].
    bool search()
    {
        while (depth_ >= 0) {
            const auto d = static_cast<std::size_t>(depth_);
            const int lo = depth_ == 0 ? 0 : map_[d - 1] + 1;
            int cand = map_[d] < lo ? lo : map_[d] + 1;
            // strictly increasing: leave room for the remaining elements
            const int hi = t_ - (n_ - depth_);
            bool placed = false;
            for (; cand <= hi; ++cand) {
                if (consistent(depth_, cand)) {
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                map_[d] = -1;
                --depth_;
                continue;
            }
            map_[d] = cand;
            if (depth_ == n_ - 1)
                return true;
            ++depth_;
            map_[static_cast<std::size_t>(depth_)] = -1;
        }
        return false;
    }

    bool consistent(int x, int fx) const
    {
        for (int y = 0; y < x; ++y) {
            const int fy = map_[static_cast<std::size_t>(y)];
            if (!pair_compatible(src_, y, x, tgt_, fy, fx))
                return false;
        }
        return true;
    }

    const S& src_;
    const S& tgt_;
    int n_ = 0;
    int t_ = 0;
    int depth_ = 0;
    std::vector<int> map_;
    bool started_ = false;
    bool done_ = false;
};

/// All embeddings, or BudgetExceeded if there are more than `bound`.
template <class S>
std::vector<Embedding> enumerate_embeddings(const S& src, const S& tgt,
                                            std::uint64_t bound = UINT64_MAX)
{
    EmbeddingEnumerator<S> e(src, tgt);
    std::vector<Embedding> out;
    while (auto f = e.next()) {
        if (out.size() >= bound)
            throw BudgetExceeded("|hom(src, tgt)|", bound + 1, bound);
        out.push_back(std::move(*f));
    }
    return out;
}

/// All nonempty downsets as rank sets, strictly increasing in the
/// anti-lexicographic order induced by the poset's linear order.
std::vector<Subset> downsets(const LinOrderedPoset& p);
/// ↓a as a rank set.
Subset principal_downset(const LinOrderedPoset& p, int a);
bool is_downset(const LinOrderedPoset& p, const Subset& s);

/// A ball together with its nominal radius index into the declared spectrum.
/// The pair, not the point set, is the ball's identity.
struct Ball
{
    Subset points;
    int radius = 0;

    friend bool operator==(const Ball&, const Ball&) = default;
};

/// ≺ on balls: smaller radius index first, then smaller minimum point.
std::strong_ordering ball_order(const Ball& a, const Ball& b);
/// Componentwise partial order: point-set inclusion and radius index.
bool ball_below(const Ball& a, const Ball& b);
/// B(x, s_i) = {y : d(x, y) <= s_i} with nominal radius i.
Ball ball_around(const DistanceData& space, int x, int radius_index);

/// All distinct (point set, radius index) pairs, sorted by ≺.
std::vector<Ball> balls(const ConvUltrametricSpace& u);

/// Induced substructure on the given ranks (sorted ascending).
LinOrderedGraph induced(const LinOrderedGraph& g, const Subset& ranks);
LinOrderedPoset induced(const LinOrderedPoset& p, const Subset& ranks);
ConvUltrametricSpace induced(const ConvUltrametricSpace& u, const Subset& ranks);
LinOrderedMetricSpace induced(const LinOrderedMetricSpace& m, const Subset& ranks);

} // namespace preadj
