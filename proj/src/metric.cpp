#include "preadj/metric.hpp"

#include <algorithm>

namespace preadj {

bool is_tight(std::span<const Rational> s)
{
    validate_spectrum(s);
    const int k = static_cast<int>(s.size()) - 1;
    for (int i = 0; i <= k; ++i)
        for (int j = i; i + j <= k; ++j)
            if (s[static_cast<std::size_t>(i + j)] > s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(j)])
                return false;
    return true;
}

TightSpectrum tight_complete(std::span<const Rational> s, std::uint64_t max_steps)
{
    validate_spectrum(s);
    if (s.size() < 2)
        throw DomainError("tight completion needs a nonzero value");
    const std::size_t k = s.size() - 1;
    std::vector<Rational> t{s[0], s[1]};
    std::size_t reached = 1; // {t_0..t_i} ∩ S = {s_0..s_reached}
    std::uint64_t steps = 0;
    while (reached < k) {
        if (++steps > max_steps)
            throw ConstructionError("tight completion did not terminate within " + std::to_string(max_steps) +
                                    " steps");
        const std::size_t next = t.size(); // i + 1
        Rational m = t[1] + t[next - 1];
        for (std::size_t a = 2; a <= next / 2; ++a)
            m = std::min(m, t[a] + t[next - a]);
        if (s[reached + 1] <= m) {
            t.push_back(s[reached + 1]);
            ++reached;
        } else {
            t.push_back(m);
        }
    }
    TightSpectrum out{std::move(t), false};
    out.tight = is_tight(out.values);
    return out;
}

MetricEncoding encode_metric(const LinOrderedMetricSpace& m)
{
    validate_structure(m);
    MetricEncoding enc{m, {}, is_tight(m.spectrum)};
    const int n = m.size();
    const int levels = enc.levels();
    const int total = n * levels;
    LinOrderedPoset p{BaseOrder::iota(total), SquareMatrix<char>(total, 0)};
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b) {
            const LevelPoint x = enc.level_point(a);
            const LevelPoint y = enc.level_point(b);
            p.leq(a, b) = x.level <= y.level &&
                          m.d(x.point, y.point) <= m.spectrum[static_cast<std::size_t>(y.level)] -
                                                       m.spectrum[static_cast<std::size_t>(x.level)];
        }
    validate_structure(p);
    enc.poset = std::move(p);
    return enc;
}

namespace detail {

Rational dist_metric_tuples_unchecked(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                      const TuplePoint& x, const TuplePoint& y)
{
    const int k = static_cast<int>(spectrum.size()) - 1;
    if (static_cast<int>(x.size()) != k || static_cast<int>(y.size()) != k)
        throw DomainError("tuples must have length " + std::to_string(k));
    for (int p = 0; p < k; ++p) {
        bool ok = true;
        for (int i = 0; ok && i <= k - 1 - p; ++i) {
            const auto u = static_cast<std::size_t>(i);
            const auto w = static_cast<std::size_t>(i + p);
            ok = a.below(x[u], y[w]) && a.below(y[u], x[w]);
        }
        if (ok)
            return spectrum[static_cast<std::size_t>(p)];
    }
    return spectrum[static_cast<std::size_t>(k)];
}

} // namespace detail

namespace {

void require_tight(std::span<const Rational> spectrum)
{
    if (!is_tight(spectrum))
        throw DomainError("spectrum " + format_rational_list(spectrum) + " is not tight");
}

} // namespace

Rational dist_metric_tuples(const LinOrderedPoset& a, std::span<const Rational> spectrum, const TuplePoint& x,
                            const TuplePoint& y)
{
    require_tight(spectrum);
    return detail::dist_metric_tuples_unchecked(a, spectrum, x, y);
}

TupleSpace<LinOrderedMetricSpace> decode_poset_metric(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                                      std::optional<std::vector<TuplePoint>> points,
                                                      std::uint64_t bound)
{
    require_tight(spectrum);
    const int k = static_cast<int>(spectrum.size()) - 1;
    std::vector<TuplePoint> pts = points ? std::move(*points) : all_tuples(a.size(), k, bound);
    for (const auto& t : pts) {
        if (static_cast<int>(t.size()) != k)
            throw DomainError("tuples must have length " + std::to_string(k));
        for (int e : t)
            if (e < 0 || e >= a.size())
                throw DomainError("tuple entry outside the poset");
    }
    std::sort(pts.begin(), pts.end(), [](const TuplePoint& x, const TuplePoint& y) {
        return compare_rank_tuples(TupleOrder::lex, x, y) < 0;
    });
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw DomainError("duplicate tuple");
    const int n = static_cast<int>(pts.size());
    SquareMatrix<Rational> dist(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist(i, j) = detail::dist_metric_tuples_unchecked(a, spectrum, pts[static_cast<std::size_t>(i)],
                                                              pts[static_cast<std::size_t>(j)]);
    auto space = metric_from_matrix(BaseOrder::iota(n), std::move(dist),
                                    std::vector<Rational>(spectrum.begin(), spectrum.end()));
    return {std::move(pts), std::move(space)};
}

TupleMap metric_map(const MetricEncoding& enc, const Embedding& u)
{
    if (u.size() != enc.poset.size())
        throw DomainError("u must be defined on all " + std::to_string(enc.poset.size()) + " level points");
    const int k = enc.levels() - 1;
    TupleMap out;
    for (int x = 0; x < enc.space.size(); ++x) {
        TuplePoint t;
        for (int i = 0; i < k; ++i)
            t.push_back(u(enc.rank_of({x, i})));
        out.images.push_back(std::move(t));
    }
    return out;
}

std::optional<std::string> metric_embedding_defect(const LinOrderedMetricSpace& space, const LinOrderedPoset& a,
                                                   const TupleMap& map)
{
    const int n = space.size();
    const int k = static_cast<int>(space.spectrum.size()) - 1;
    if (static_cast<int>(map.images.size()) != n)
        return "map has " + std::to_string(map.images.size()) + " images for " + std::to_string(n) + " points";
    for (const auto& t : map.images) {
        if (static_cast<int>(t.size()) != k)
            return "image tuple of length " + std::to_string(t.size()) + ", expected " + std::to_string(k);
        for (int e : t)
            if (e < 0 || e >= a.size())
                return "image tuple entry outside the poset";
    }
    if (!is_tight(space.spectrum))
        return "spectrum " + format_rational_list(space.spectrum) + " is not tight";
    auto name = [&](int x) { return std::to_string(space.order.label(x)); };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const auto& tx = map.images[static_cast<std::size_t>(x)];
            const auto& ty = map.images[static_cast<std::size_t>(y)];
            if (compare_rank_tuples(TupleOrder::lex, tx, ty) >= 0)
                return "images of " + name(x) + " < " + name(y) + " are not ≺_lex increasing";
            const Rational d = detail::dist_metric_tuples_unchecked(a, space.spectrum, tx, ty);
            if (d != space.d(x, y))
                return "d(" + name(x) + "," + name(y) + ") = " + format_rational(space.d(x, y)) +
                       " but the images are at distance " + format_rational(d);
        }
    return std::nullopt;
}

TupleMap phi_metric(const LinOrderedMetricSpace& space, const LinOrderedPoset& a, const Embedding& u)
{
    const MetricEncoding enc = encode_metric(space);
    if (!enc.tight)
        throw DomainError("spectrum " + format_rational_list(space.spectrum) + " is not tight");
    check_embedding(u.map, enc.poset, a);
    TupleMap map = metric_map(enc, u);
    if (auto defect = metric_embedding_defect(space, a, map))
        throw ConstructionError("metric image is not an embedding: " + *defect);
    return map;
}

Embedding witness_metric(const LinOrderedMetricSpace& m1, const LinOrderedMetricSpace& m2, const Embedding& f)
{
    if (m1.spectrum != m2.spectrum)
        throw DomainError("spaces must share the spectrum");
    check_embedding(f.map, m2, m1);
    const int levels = static_cast<int>(m1.spectrum.size());
    Embedding v;
    for (int i = 0; i < levels; ++i)
        for (int x = 0; x < m2.size(); ++x)
            v.map.push_back(i * m1.size() + f(x));
    return v;
}

LinOrderedMetricSpace reduce_spectrum(const LinOrderedMetricSpace& m)
{
    LinOrderedMetricSpace out = m;
    out.spectrum = m.attained();
    return out;
}

} // namespace preadj
