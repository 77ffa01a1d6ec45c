#include "preadj/structures.hpp"

#include <algorithm>
#include <map>

namespace preadj {

namespace {

std::string lbl(const BaseOrder& o, int rank)
{
    return std::to_string(o.label(rank));
}

void require_nonempty(const BaseOrder& o, std::string_view what)
{
    if (o.empty())
        throw StructureError(std::string(what) + " must have at least one element");
}

template <class Space>
Space distance_space(BaseOrder order, std::span<const DistanceEntry> entries,
                     std::optional<std::vector<Rational>> spectrum)
{
    const int n = order.size();
    SquareMatrix<Rational> dist(n, Rational(0));
    SquareMatrix<char> given(n, 0);
    for (const auto& e : entries) {
        const int a = order.rank(e.a);
        const int b = order.rank(e.b);
        if (a == b) {
            if (e.value != 0)
                throw StructureError("d(" + std::to_string(e.a) + "," + std::to_string(e.a) + ") must be 0");
            continue;
        }
        if (given(a, b))
            throw StructureError("distance between " + std::to_string(e.a) + " and " + std::to_string(e.b) +
                                 " given twice");
        given(a, b) = given(b, a) = 1;
        dist(a, b) = dist(b, a) = e.value;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!given(a, b))
                throw StructureError("distance between " + lbl(order, a) + " and " + lbl(order, b) + " missing");
    Space s;
    s.order = std::move(order);
    s.dist = std::move(dist);
    if (spectrum) {
        s.spectrum = std::move(*spectrum);
    } else {
        s.spectrum = s.attained();
    }
    validate_structure(s);
    return s;
}

void validate_distances(const DistanceData& s, bool ultra, std::string_view what)
{
    require_nonempty(s.order, what);
    validate_spectrum(s.spectrum);
    const int n = s.size();
    if (s.dist.size() != n)
        throw StructureError("distance matrix size does not match the universe");
    for (int a = 0; a < n; ++a) {
        if (s.d(a, a) != 0)
            throw StructureError("d(" + lbl(s.order, a) + "," + lbl(s.order, a) + ") != 0");
        for (int b = 0; b < n; ++b) {
            if (s.d(a, b) != s.d(b, a))
                throw StructureError("d is not symmetric at (" + lbl(s.order, a) + "," + lbl(s.order, b) + ")");
            if (a != b && s.d(a, b) <= 0)
                throw StructureError("distinct points " + lbl(s.order, a) + "," + lbl(s.order, b) +
                                     " at non-positive distance");
            if (!std::binary_search(s.spectrum.begin(), s.spectrum.end(), s.d(a, b)))
                throw StructureError("distance d(" + lbl(s.order, a) + "," + lbl(s.order, b) + ") = " +
                                     format_rational(s.d(a, b)) + " is not in the declared spectrum");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const bool ok = ultra ? s.d(a, c) <= std::max(s.d(a, b), s.d(b, c))
                                      : s.d(a, c) <= s.d(a, b) + s.d(b, c);
                if (!ok)
                    throw StructureError(std::string(ultra ? "strong triangle inequality" : "triangle inequality") +
                                         " fails for " + lbl(s.order, a) + "," + lbl(s.order, b) + "," +
                                         lbl(s.order, c));
            }
}

} // namespace

std::string_view to_string(StructureKind kind)
{
    switch (kind) {
    case StructureKind::graph: return "graph";
    case StructureKind::poset: return "poset";
    case StructureKind::ultrametric: return "ultrametric";
    case StructureKind::metric: return "metric";
    }
    return "?";
}

StructureKind parse_structure_kind(std::string_view text)
{
    if (text == "graph") return StructureKind::graph;
    if (text == "poset") return StructureKind::poset;
    if (text == "ultrametric") return StructureKind::ultrametric;
    if (text == "metric") return StructureKind::metric;
    throw DomainError("unknown structure kind '" + std::string(text) + "'");
}

StructureKind kind_of(const OrderedStructure& s)
{
    return std::visit([](const auto& x) { return kind_of(x); }, s);
}

int structure_size(const OrderedStructure& s)
{
    return std::visit([](const auto& x) { return x.size(); }, s);
}

std::vector<std::pair<int, int>> LinOrderedGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (adjacent(a, b))
                out.emplace_back(a, b);
    return out;
}

int DistanceData::spectrum_index(const Rational& value) const
{
    auto it = std::lower_bound(spectrum.begin(), spectrum.end(), value);
    if (it == spectrum.end() || *it != value)
        throw DomainError("value " + format_rational(value) + " is not in the spectrum");
    return static_cast<int>(it - spectrum.begin());
}

std::vector<Rational> DistanceData::attained() const
{
    std::vector<Rational> out{Rational(0)};
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            out.push_back(d(a, b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinOrderedGraph make_graph(BaseOrder order, std::span<const std::pair<int, int>> edges)
{
    const int n = order.size();
    LinOrderedGraph g{std::move(order), SquareMatrix<char>(n, 0)};
    for (auto [x, y] : edges) {
        const int a = g.order.rank(x);
        const int b = g.order.rank(y);
        if (a == b)
            throw StructureError("loop at vertex " + std::to_string(x));
        if (g.adjacency(a, b))
            throw StructureError("duplicate edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
        g.adjacency(a, b) = g.adjacency(b, a) = 1;
    }
    validate_structure(g);
    return g;
}

LinOrderedPoset make_poset(BaseOrder order, std::span<const std::pair<int, int>> leq_pairs)
{
    const int n = order.size();
    LinOrderedPoset p{std::move(order), SquareMatrix<char>(n, 0)};
    for (int i = 0; i < n; ++i)
        p.leq(i, i) = 1;
    for (auto [x, y] : leq_pairs)
        p.leq(p.order.rank(x), p.order.rank(y)) = 1;
    validate_structure(p);
    return p;
}

ConvUltrametricSpace make_ultrametric(BaseOrder order, std::span<const DistanceEntry> entries,
                                      std::optional<std::vector<Rational>> spectrum)
{
    return distance_space<ConvUltrametricSpace>(std::move(order), entries, std::move(spectrum));
}

LinOrderedMetricSpace make_metric(BaseOrder order, std::span<const DistanceEntry> entries,
                                  std::optional<std::vector<Rational>> spectrum)
{
    return distance_space<LinOrderedMetricSpace>(std::move(order), entries, std::move(spectrum));
}

ConvUltrametricSpace ultrametric_from_matrix(BaseOrder order, SquareMatrix<Rational> dist,
                                             std::vector<Rational> spectrum)
{
    ConvUltrametricSpace u;
    u.order = std::move(order);
    u.dist = std::move(dist);
    u.spectrum = std::move(spectrum);
    validate_structure(u);
    return u;
}

LinOrderedMetricSpace metric_from_matrix(BaseOrder order, SquareMatrix<Rational> dist,
                                         std::vector<Rational> spectrum)
{
    LinOrderedMetricSpace m;
    m.order = std::move(order);
    m.dist = std::move(dist);
    m.spectrum = std::move(spectrum);
    validate_structure(m);
    return m;
}

void validate_spectrum(std::span<const Rational> spectrum)
{
    if (spectrum.empty() || spectrum.front() != 0)
        throw DomainError("spectrum must start with 0");
    for (std::size_t i = 1; i < spectrum.size(); ++i)
        if (spectrum[i - 1] >= spectrum[i])
            throw DomainError("spectrum must be strictly increasing");
}

ValidationReport validate_structure(const LinOrderedGraph& g)
{
    require_nonempty(g.order, "a graph");
    const int n = g.size();
    if (g.adjacency.size() != n)
        throw StructureError("adjacency matrix size does not match the universe");
    for (int a = 0; a < n; ++a) {
        if (g.adjacent(a, a))
            throw StructureError("loop at vertex " + lbl(g.order, a));
        for (int b = 0; b < n; ++b)
            if (g.adjacent(a, b) != g.adjacent(b, a))
                throw StructureError("adjacency is not symmetric at " + lbl(g.order, a) + "," + lbl(g.order, b));
    }
    return {StructureKind::graph, n, {}};
}

ValidationReport validate_structure(const LinOrderedPoset& p)
{
    require_nonempty(p.order, "a poset");
    const int n = p.size();
    if (p.leq.size() != n)
        throw StructureError("order matrix size does not match the universe");
    for (int a = 0; a < n; ++a) {
        if (!p.below(a, a))
            throw StructureError("⊑ is not reflexive at " + lbl(p.order, a));
        for (int b = 0; b < n; ++b) {
            if (a != b && p.below(a, b) && p.below(b, a))
                throw StructureError("⊑ is not antisymmetric at " + lbl(p.order, a) + "," + lbl(p.order, b));
            if (a != b && p.below(a, b) && !(a < b))
                throw StructureError("linear order does not extend ⊑: " + lbl(p.order, a) + " ⊑ " +
                                     lbl(p.order, b) + " but " + lbl(p.order, b) + " < " + lbl(p.order, a));
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.below(a, b))
                for (int c = 0; c < n; ++c)
                    if (p.below(b, c) && !p.below(a, c))
                        throw StructureError("⊑ is not transitive: " + lbl(p.order, a) + " ⊑ " + lbl(p.order, b) +
                                             " ⊑ " + lbl(p.order, c));
    return {StructureKind::poset, n, {}};
}

ValidationReport validate_structure(const ConvUltrametricSpace& u)
{
    validate_distances(u, true, "an ultrametric space");
    const int n = u.size();
    // Balls B(x, r) for r between consecutive spectrum values coincide with
    // B(x, s_i); checking the spectrum radii covers every ball.
    for (int x = 0; x < n; ++x)
        for (int r = 0; r < static_cast<int>(u.spectrum.size()); ++r) {
            Ball b = ball_around(u, x, r);
            if (b.points.back() - b.points.front() + 1 != static_cast<int>(b.points.size())) {
                int hole = b.points.front();
                while (std::binary_search(b.points.begin(), b.points.end(), hole))
                    ++hole;
                throw StructureError("ball B(" + lbl(u.order, x) + ", " + format_rational(u.spectrum[r]) +
                                     ") is not convex: misses " + lbl(u.order, hole));
            }
        }
    return {StructureKind::ultrametric, n, u.attained()};
}

ValidationReport validate_structure(const LinOrderedMetricSpace& m)
{
    validate_distances(m, false, "a metric space");
    return {StructureKind::metric, m.size(), m.attained()};
}

ValidationReport validate_structure(const OrderedStructure& s)
{
    return std::visit([](const auto& x) { return validate_structure(x); }, s);
}

Embedding identity_embedding(int n)
{
    Embedding e;
    e.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        e.map[static_cast<std::size_t>(i)] = i;
    return e;
}

Embedding compose(const Embedding& outer, const Embedding& inner)
{
    Embedding e;
    e.map.reserve(inner.map.size());
    for (int x : inner.map)
        e.map.push_back(outer(x));
    return e;
}

bool pair_compatible(const LinOrderedGraph& src, int a, int b, const LinOrderedGraph& tgt, int fa, int fb)
{
    return src.adjacent(a, b) == tgt.adjacent(fa, fb);
}

bool pair_compatible(const LinOrderedPoset& src, int a, int b, const LinOrderedPoset& tgt, int fa, int fb)
{
    return src.below(a, b) == tgt.below(fa, fb) && src.below(b, a) == tgt.below(fb, fa);
}

bool pair_compatible(const DistanceData& src, int a, int b, const DistanceData& tgt, int fa, int fb)
{
    return src.d(a, b) == tgt.d(fa, fb);
}

namespace {

template <class S>
Embedding check_map(std::span<const int> map, const S& src, const S& tgt, std::string_view relation)
{
    const int n = src.size();
    if (static_cast<int>(map.size()) != n)
        throw StructureError("map has " + std::to_string(map.size()) + " entries for a source of size " +
                             std::to_string(n));
    for (int a = 0; a < n; ++a) {
        const int fa = map[static_cast<std::size_t>(a)];
        if (fa < 0 || fa >= tgt.size())
            throw StructureError("image of " + lbl(src.order, a) + " is outside the target");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int fa = map[static_cast<std::size_t>(a)];
            const int fb = map[static_cast<std::size_t>(b)];
            if (fa == fb)
                throw StructureError("not injective: " + lbl(src.order, a) + " and " + lbl(src.order, b) +
                                     " both map to " + lbl(tgt.order, fa));
            if (!(fa < fb))
                throw StructureError("linear order not preserved: " + lbl(src.order, a) + " < " +
                                     lbl(src.order, b) + " but images are reversed");
            if (!pair_compatible(src, a, b, tgt, fa, fb))
                throw StructureError(std::string(relation) + " not preserved/reflected at " + lbl(src.order, a) +
                                     "," + lbl(src.order, b));
        }
    return Embedding{std::vector<int>(map.begin(), map.end())};
}

} // namespace

Embedding check_embedding(std::span<const int> map, const LinOrderedGraph& src, const LinOrderedGraph& tgt)
{
    return check_map(map, src, tgt, "adjacency");
}

Embedding check_embedding(std::span<const int> map, const LinOrderedPoset& src, const LinOrderedPoset& tgt)
{
    return check_map(map, src, tgt, "⊑");
}

Embedding check_embedding(std::span<const int> map, const ConvUltrametricSpace& src, const ConvUltrametricSpace& tgt)
{
    return check_map(map, src, tgt, "distance");
}

Embedding check_embedding(std::span<const int> map, const LinOrderedMetricSpace& src, const LinOrderedMetricSpace& tgt)
{
    return check_map(map, src, tgt, "distance");
}

Embedding check_embedding(std::span<const int> map, const OrderedStructure& src, const OrderedStructure& tgt)
{
    if (src.index() != tgt.index())
        throw StructureError("embedding between structures of different kinds");
    return std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            return check_embedding(map, s, std::get<S>(tgt));
        },
        src);
}

Subset principal_downset(const LinOrderedPoset& p, int a)
{
    Subset out;
    for (int b = 0; b < p.size(); ++b)
        if (p.below(b, a))
            out.push_back(b);
    return out;
}

bool is_downset(const LinOrderedPoset& p, const Subset& s)
{
    for (int x : s)
        for (int y = 0; y < p.size(); ++y)
            if (p.below(y, x) && !std::binary_search(s.begin(), s.end(), y))
                return false;
    return true;
}

std::vector<Subset> downsets(const LinOrderedPoset& p)
{
    // The linear order extends ⊑, so every ⊑-predecessor of x has a smaller
    // rank and is decided before x.
    const int n = p.size();
    std::vector<Subset> out;
    Subset current;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            if (!current.empty())
                out.push_back(current);
            return;
        }
        self(self, x + 1);
        for (int y : principal_downset(p, x))
            if (y != x && !std::binary_search(current.begin(), current.end(), y))
                return;
        current.push_back(x);
        self(self, x + 1);
        current.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        return compare_rank_subsets(SubsetOrder::alex, a, b) < 0;
    });
    return out;
}

std::strong_ordering ball_order(const Ball& a, const Ball& b)
{
    if (a.radius != b.radius)
        return a.radius <=> b.radius;
    return a.points.front() <=> b.points.front();
}

bool ball_below(const Ball& a, const Ball& b)
{
    return a.radius <= b.radius && is_subset(a.points, b.points);
}

Ball ball_around(const DistanceData& space, int x, int radius_index)
{
    Ball b;
    b.radius = radius_index;
    const Rational& r = space.spectrum.at(static_cast<std::size_t>(radius_index));
    for (int y = 0; y < space.size(); ++y)
        if (space.d(x, y) <= r)
            b.points.push_back(y);
    return b;
}

std::vector<Ball> balls(const ConvUltrametricSpace& u)
{
    std::vector<Ball> out;
    for (int r = 0; r < static_cast<int>(u.spectrum.size()); ++r)
        for (int x = 0; x < u.size(); ++x) {
            Ball b = ball_around(u, x, r);
            if (std::find(out.begin(), out.end(), b) == out.end())
                out.push_back(std::move(b));
        }
    std::sort(out.begin(), out.end(), [](const Ball& a, const Ball& b) { return ball_order(a, b) < 0; });
    return out;
}

namespace {

BaseOrder induced_order(const BaseOrder& o, const Subset& ranks)
{
    return BaseOrder(o.labels_of(ranks));
}

template <class Space>
Space induced_space(const Space& s, const Subset& ranks)
{
    const int n = static_cast<int>(ranks.size());
    SquareMatrix<Rational> dist(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist(i, j) = s.d(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
    Space out;
    out.order = induced_order(s.order, ranks);
    out.dist = std::move(dist);
    out.spectrum = s.spectrum;
    return out;
}

} // namespace

LinOrderedGraph induced(const LinOrderedGraph& g, const Subset& ranks)
{
    const int n = static_cast<int>(ranks.size());
    LinOrderedGraph out{induced_order(g.order, ranks), SquareMatrix<char>(n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.adjacency(i, j) = g.adjacency(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
    return out;
}

LinOrderedPoset induced(const LinOrderedPoset& p, const Subset& ranks)
{
    const int n = static_cast<int>(ranks.size());
    LinOrderedPoset out{induced_order(p.order, ranks), SquareMatrix<char>(n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.leq(i, j) = p.leq(ranks[static_cast<std::size_t>(i)], ranks[static_cast<std::size_t>(j)]);
    return out;
}

ConvUltrametricSpace induced(const ConvUltrametricSpace& u, const Subset& ranks)
{
    return induced_space(u, ranks);
}

LinOrderedMetricSpace induced(const LinOrderedMetricSpace& m, const Subset& ranks)
{
    return induced_space(m, ranks);
}

} // namespace preadj
