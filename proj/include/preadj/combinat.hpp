#pragma once

// Orders on finite subsets and tuples of a finite linearly ordered set.

#include <compare>
#include <span>
#include <string_view>
#include <vector>

namespace preadj {

/// A finite sorted set of ranks (0-based positions in some BaseOrder), strictly increasing.
using Subset = std::vector<int>;

enum class SubsetOrder { lex, alex, clex };
enum class TupleOrder { lex, alex };

std::string_view to_string(SubsetOrder kind);
std::string_view to_string(TupleOrder kind);
SubsetOrder parse_subset_order(std::string_view text);
TupleOrder parse_tuple_order(std::string_view text);

/// A finite linearly ordered set. Elements carry integer labels; the declared
/// sequence order is the linear order, and every other module refers to an
/// element by its rank in that sequence.
class BaseOrder
{
public:
    BaseOrder() = default;
    /// Throws DomainError on duplicate labels.
    explicit BaseOrder(std::vector<int> labels);

    /// The order first < first+1 < ... < first+n-1.
    static BaseOrder iota(int n, int first = 1);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    bool empty() const noexcept { return labels_.empty(); }
    int label(int rank) const { return labels_.at(static_cast<std::size_t>(rank)); }
    const std::vector<int>& labels() const noexcept { return labels_; }

    bool contains(int label) const noexcept;
    /// Throws DomainError when the label is not declared.
    int rank(int label) const;
    /// Ranks of the given labels, sorted and deduplicated.
    Subset ranks_of(std::span<const int> labels) const;
    std::vector<int> labels_of(std::span<const int> ranks) const;

    friend bool operator==(const BaseOrder& a, const BaseOrder& b) { return a.labels_ == b.labels_; }

private:
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> by_label_; // (label, rank), sorted by label
};

/// Strict three-way comparison of two subsets of the base order (given by labels).
/// Throws DomainError for labels outside the order.
std::strong_ordering compare_subsets(const BaseOrder& order, SubsetOrder kind,
                                     std::span<const int> a, std::span<const int> b);

/// Same comparison on canonical rank sets. Dispatch is equality, then containment,
/// then the incomparable branch, so both set differences are nonempty there.
std::strong_ordering compare_rank_subsets(SubsetOrder kind, const Subset& a, const Subset& b);

/// Strict comparison of equal-length tuples: lex decides at the least differing
/// index, alex at the greatest. Throws DomainError on length mismatch.
std::strong_ordering compare_tuples(const BaseOrder& order, TupleOrder kind,
                                    std::span<const int> a, std::span<const int> b);
std::strong_ordering compare_rank_tuples(TupleOrder kind, std::span<const int> a,
                                         std::span<const int> b);

/// min of a rank set, with min(empty) = the top element.
int min_or_top(const BaseOrder& order, const Subset& ranks);
/// max of a rank set, with max(empty) = the bottom element.
int max_or_bottom(const BaseOrder& order, const Subset& ranks);

// Set algebra over canonical rank sets.
bool is_subset(const Subset& a, const Subset& b);
bool intersects(const Subset& a, const Subset& b);
Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
/// Throws DomainError unless strictly increasing.
void require_canonical(const Subset& s);

} // namespace preadj
