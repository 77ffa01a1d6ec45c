#include "preadj/ultrametric.hpp"

#include <algorithm>

namespace preadj {

TupleMap compose(const TupleMap& outer, const Embedding& f)
{
    TupleMap out;
    for (int x : f.map)
        out.images.push_back(outer.images.at(static_cast<std::size_t>(x)));
    return out;
}

TupleMap apply_entrywise(const Embedding& g, const TupleMap& map)
{
    TupleMap out = map;
    for (auto& t : out.images)
        for (int& e : t)
            e = g(e);
    return out;
}

int BallPoset::index_of(const Ball& b) const
{
    auto it = std::find(balls.begin(), balls.end(), b);
    if (it == balls.end())
        throw DomainError("not a ball of the space");
    return static_cast<int>(it - balls.begin());
}

BallPoset encode_ultrametric(const ConvUltrametricSpace& u)
{
    validate_structure(u);
    BallPoset enc{u, balls(u), {}};
    const int n = static_cast<int>(enc.balls.size());
    for (int x = 0; x < u.size(); ++x)
        for (int r = 0; r < static_cast<int>(u.spectrum.size()); ++r) {
            const Ball b = ball_around(u, x, r);
            for (int y : b.points)
                if (ball_around(u, y, r) != b)
                    throw ConstructionError("ball depends on its center");
        }
    LinOrderedPoset p{BaseOrder::iota(n), SquareMatrix<char>(n, 0)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            p.leq(a, b) = ball_below(enc.balls[static_cast<std::size_t>(a)], enc.balls[static_cast<std::size_t>(b)]);
    validate_structure(p);
    enc.poset = std::move(p);
    return enc;
}

Rational dist_ultra_tuples(std::span<const Rational> spectrum, const TuplePoint& a, const TuplePoint& b)
{
    const int k = static_cast<int>(spectrum.size()) - 1;
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw DomainError("tuples must have length " + std::to_string(k));
    int j = k;
    while (j > 0 && a[static_cast<std::size_t>(j - 1)] == b[static_cast<std::size_t>(j - 1)])
        --j;
    return spectrum[static_cast<std::size_t>(j)];
}

std::vector<TuplePoint> all_tuples(int size, int k, std::uint64_t bound)
{
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (size > 0 && count > bound / static_cast<std::uint64_t>(size))
            throw BudgetExceeded("|A|^k tuples", bound + 1, bound);
        count *= static_cast<std::uint64_t>(size);
    }
    if (count > bound)
        throw BudgetExceeded("|A|^k tuples", count, bound);
    std::vector<TuplePoint> out;
    if (size == 0 && k > 0)
        return out;
    TuplePoint t(static_cast<std::size_t>(k), 0);
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == size - 1)
            t[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++t[static_cast<std::size_t>(i)];
    }
    return out;
}

TupleSpace<ConvUltrametricSpace> decode_poset_ultra(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                                    std::optional<std::vector<TuplePoint>> points, std::uint64_t bound)
{
    validate_spectrum(spectrum);
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
        return compare_rank_tuples(TupleOrder::alex, x, y) < 0;
    });
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw DomainError("duplicate tuple");
    const int n = static_cast<int>(pts.size());
    SquareMatrix<Rational> dist(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist(i, j) = dist_ultra_tuples(spectrum, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
    auto space = ultrametric_from_matrix(BaseOrder::iota(n), std::move(dist),
                                         std::vector<Rational>(spectrum.begin(), spectrum.end()));
    return {std::move(pts), std::move(space)};
}

TupleMap ultra_map(const BallPoset& enc, const Embedding& u)
{
    if (u.size() != static_cast<int>(enc.balls.size()))
        throw DomainError("u must be defined on all " + std::to_string(enc.balls.size()) + " balls");
    const int k = static_cast<int>(enc.space.spectrum.size()) - 1;
    TupleMap out;
    for (int x = 0; x < enc.space.size(); ++x) {
        TuplePoint t;
        for (int i = 0; i < k; ++i)
            t.push_back(u(enc.index_of(ball_around(enc.space, x, i))));
        out.images.push_back(std::move(t));
    }
    return out;
}

std::optional<std::string> ultra_embedding_defect(const ConvUltrametricSpace& space, const LinOrderedPoset& a,
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
    auto name = [&](int x) { return std::to_string(space.order.label(x)); };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const auto& tx = map.images[static_cast<std::size_t>(x)];
            const auto& ty = map.images[static_cast<std::size_t>(y)];
            if (compare_rank_tuples(TupleOrder::alex, tx, ty) >= 0)
                return "images of " + name(x) + " < " + name(y) + " are not ≺_alex increasing";
            const Rational d = dist_ultra_tuples(space.spectrum, tx, ty);
            if (d != space.d(x, y))
                return "d(" + name(x) + "," + name(y) + ") = " + format_rational(space.d(x, y)) +
                       " but the images are at distance " + format_rational(d);
        }
    return std::nullopt;
}

TupleMap phi_ultra(const ConvUltrametricSpace& space, const LinOrderedPoset& a, const Embedding& u)
{
    const BallPoset enc = encode_ultrametric(space);
    check_embedding(u.map, enc.poset, a);
    TupleMap map = ultra_map(enc, u);
    if (auto defect = ultra_embedding_defect(space, a, map))
        throw ConstructionError("ultrametric image is not an embedding: " + *defect);
    return map;
}

Embedding witness_ultra(const ConvUltrametricSpace& u1, const ConvUltrametricSpace& u2, const Embedding& f)
{
    if (u1.spectrum != u2.spectrum)
        throw DomainError("spaces must share the spectrum");
    check_embedding(f.map, u2, u1);
    const BallPoset e1 = encode_ultrametric(u1);
    const BallPoset e2 = encode_ultrametric(u2);
    Embedding v;
    for (const Ball& b : e2.balls) {
        const Ball image = ball_around(u1, f(b.points.front()), b.radius);
        for (int x : b.points)
            if (ball_around(u1, f(x), b.radius) != image)
                throw ConstructionError("image ball depends on the chosen center");
        v.map.push_back(e1.index_of(image));
    }
    return v;
}

ConvUltrametricSpace reduce_spectrum(const ConvUltrametricSpace& u)
{
    ConvUltrametricSpace out = u;
    out.spectrum = u.attained();
    return out;
}

} // namespace preadj
