#include "preadj/combinat.hpp"

#include <algorithm>
#include <string>

#include "preadj/errors.hpp"

namespace preadj {

std::string_view to_string(SubsetOrder kind)
{
    switch (kind) {
    case SubsetOrder::lex: return "lex";
    case SubsetOrder::alex: return "alex";
    case SubsetOrder::clex: return "clex";
    }
    return "?";
}

std::string_view to_string(TupleOrder kind)
{
    return kind == TupleOrder::lex ? "lex" : "alex";
}

SubsetOrder parse_subset_order(std::string_view text)
{
    if (text == "lex") return SubsetOrder::lex;
    if (text == "alex") return SubsetOrder::alex;
    if (text == "clex") return SubsetOrder::clex;
    throw DomainError("unknown subset order '" + std::string(text) + "'");
}

TupleOrder parse_tuple_order(std::string_view text)
{
    if (text == "lex") return TupleOrder::lex;
    if (text == "alex") return TupleOrder::alex;
    throw DomainError("unknown tuple order '" + std::string(text) + "'");
}

BaseOrder::BaseOrder(std::vector<int> labels) : labels_(std::move(labels))
{
    by_label_.reserve(labels_.size());
    for (int r = 0; r < size(); ++r)
        by_label_.emplace_back(labels_[static_cast<std::size_t>(r)], r);
    std::sort(by_label_.begin(), by_label_.end());
    for (std::size_t i = 1; i < by_label_.size(); ++i)
        if (by_label_[i].first == by_label_[i - 1].first)
            throw DomainError("duplicate element " + std::to_string(by_label_[i].first) +
                              " in base order");
}

BaseOrder BaseOrder::iota(int n, int first)
{
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = first + i;
    return BaseOrder(std::move(labels));
}

bool BaseOrder::contains(int label) const noexcept
{
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), std::pair{label, -1});
    return it != by_label_.end() && it->first == label;
}

int BaseOrder::rank(int label) const
{
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), std::pair{label, -1});
    if (it == by_label_.end() || it->first != label)
        throw DomainError("element " + std::to_string(label) + " is not in the base order");
    return it->second;
}

Subset BaseOrder::ranks_of(std::span<const int> labels) const
{
    Subset out;
    out.reserve(labels.size());
    for (int l : labels)
        out.push_back(rank(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> BaseOrder::labels_of(std::span<const int> ranks) const
{
    std::vector<int> out;
    out.reserve(ranks.size());
    for (int r : ranks)
        out.push_back(label(r));
    return out;
}

std::strong_ordering compare_rank_subsets(SubsetOrder kind, const Subset& a, const Subset& b)
{
    using std::strong_ordering;
    if (a == b)
        return strong_ordering::equal;
    // a proper subset of b
    if (is_subset(a, b))
        return kind == SubsetOrder::clex ? strong_ordering::greater : strong_ordering::less;
    if (is_subset(b, a))
        return kind == SubsetOrder::clex ? strong_ordering::less : strong_ordering::greater;

    // Incomparable: a\b and b\a are both nonempty and disjoint, so the extreme
    // element of the symmetric difference lies in exactly one of them.
    Subset sym;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
    switch (kind) {
    case SubsetOrder::lex: {
        // min(b\a) < min(a\b)
        bool min_in_b = std::binary_search(b.begin(), b.end(), sym.front());
        return min_in_b ? strong_ordering::less : strong_ordering::greater;
    }
    case SubsetOrder::alex: {
        // max(a\b) < max(b\a)
        bool max_in_b = std::binary_search(b.begin(), b.end(), sym.back());
        return max_in_b ? strong_ordering::less : strong_ordering::greater;
    }
    case SubsetOrder::clex: {
        // min(a\b) < min(b\a)
        bool min_in_a = std::binary_search(a.begin(), a.end(), sym.front());
        return min_in_a ? strong_ordering::less : strong_ordering::greater;
    }
    }
    return strong_ordering::equal;
}

std::strong_ordering compare_subsets(const BaseOrder& order, SubsetOrder kind,
                                     std::span<const int> a, std::span<const int> b)
{
    return compare_rank_subsets(kind, order.ranks_of(a), order.ranks_of(b));
}

std::strong_ordering compare_rank_tuples(TupleOrder kind, std::span<const int> a,
                                         std::span<const int> b)
{
    if (a.size() != b.size())
        throw DomainError("tuple length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
    const std::size_t n = a.size();
    if (kind == TupleOrder::lex) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i])
                return a[i] <=> b[i];
    } else {
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i])
                return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_tuples(const BaseOrder& order, TupleOrder kind,
                                    std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size())
        throw DomainError("tuple length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
    std::vector<int> ra, rb;
    for (int x : a)
        ra.push_back(order.rank(x));
    for (int x : b)
        rb.push_back(order.rank(x));
    return compare_rank_tuples(kind, ra, rb);
}

int min_or_top(const BaseOrder& order, const Subset& ranks)
{
    if (order.empty())
        throw DomainError("min of a subset of the empty order");
    return ranks.empty() ? order.size() - 1 : ranks.front();
}

int max_or_bottom(const BaseOrder& order, const Subset& ranks)
{
    if (order.empty())
        throw DomainError("max of a subset of the empty order");
    return ranks.empty() ? 0 : ranks.back();
}

bool is_subset(const Subset& a, const Subset& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const Subset& a, const Subset& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

Subset set_union(const Subset& a, const Subset& b)
{
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subset set_intersection(const Subset& a, const Subset& b)
{
    Subset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subset set_difference(const Subset& a, const Subset& b)
{
    Subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void require_canonical(const Subset& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i])
            throw DomainError("subset is not strictly increasing");
}

} // namespace preadj
