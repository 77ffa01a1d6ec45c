#include "doctest.h"

#include "oracles.hpp"

#include <map>
#include <utility>

#include "preadj/generators.hpp"
#include "preadj/metric.hpp"
#include "preadj/pa.hpp"
#include "preadj/ultrametric.hpp"

using namespace preadj;
using namespace brute;

namespace {

std::vector<Rational> iota_spectrum(int k)
{
    std::vector<Rational> s;
    for (int i = 0; i <= k; ++i)
        s.emplace_back(i);
    return s;
}

std::vector<Rational> rats(std::initializer_list<const char*> xs)
{
    std::vector<Rational> out;
    for (auto x : xs)
        out.push_back(parse_rational(x));
    return out;
}

// s_j = j * s_1 for every j < k.
bool arithmetic_prefix(const std::vector<Rational>& s)
{
    for (std::size_t j = 1; j + 1 < s.size(); ++j)
        if (s[j] != s[1] * static_cast<std::int64_t>(j))
            return false;
    return true;
}

LinOrderedPoset own_ball_poset(const ConvUltrametricSpace& u) { return encode_ultrametric(u).poset; }

} // namespace

TEST_SUITE("ultrametric")
{
TEST_CASE("ball poset examples")
{
    const auto u = make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 2}, {2, 3, 2}});
    CHECK(encode_ultrametric(u).poset.size() == 6);
    CHECK(encode_ultrametric(make_ultrametric(BaseOrder::iota(1), std::vector<DistanceEntry>{})).poset.size() == 1);

    const auto two = make_ultrametric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 1}});
    const auto enc = encode_ultrametric(two);
    REQUIRE(enc.balls == std::vector<Ball>{{{0}, 0}, {{1}, 0}, {{0, 1}, 1}});
    CHECK_FALSE(enc.poset.comparable(0, 1));
    CHECK(enc.poset.below(0, 2));
    CHECK(enc.poset.below(1, 2));
}

TEST_CASE("tuple distance examples")
{
    const auto s = iota_spectrum(2);
    CHECK(dist_ultra_tuples(s, {0, 1}, {0, 1}) == 0);
    CHECK(dist_ultra_tuples(s, {0, 1}, {1, 1}) == 1);
    CHECK(dist_ultra_tuples(s, {0, 0}, {0, 1}) == 2);
    CHECK_THROWS_AS(dist_ultra_tuples(s, {0}, {0, 1}), DomainError);
}

TEST_CASE("decoded poset is a convexly ordered ultrametric space")
{
    CHECK(decode_poset_ultra(make_poset(BaseOrder::iota(1), {}), iota_spectrum(2)).space.size() == 1);
    const auto chain2 = make_poset(BaseOrder::iota(2), std::vector<std::pair<int, int>>{{1, 2}});
    const auto two = decode_poset_ultra(chain2, iota_spectrum(1)).space;
    REQUIRE(two.size() == 2);
    CHECK(two.d(0, 1) == 1);

    const std::vector<std::vector<Rational>> spectra{iota_spectrum(1), iota_spectrum(2), iota_spectrum(3),
                                                      rats({"0", "1/2", "3"}), rats({"0", "2", "3", "7/2"})};
    for (int n = 1; n <= 3; ++n)
        for (const auto& A : all_posets(n))
            for (const auto& s : spectra) {
                const int k = static_cast<int>(s.size()) - 1;
                auto pts = tuples(n, k);
                std::sort(pts.begin(), pts.end(), alex_less);
                const auto decoded = decode_poset_ultra(A, s);
                REQUIRE(decoded.points == pts);
                const int N = static_cast<int>(pts.size());
                for (int x = 0; x < N; ++x)
                    for (int y = 0; y < N; ++y) {
                        const Rational dxy = ultra_distance(s, pts[x], pts[y]);
                        REQUIRE(decoded.space.d(x, y) == dxy);
                        REQUIRE((dxy == 0) == (x == y));
                        for (int z = 0; z < N; ++z)
                            REQUIRE(ultra_distance(s, pts[x], pts[z]) <=
                                    std::max(dxy, ultra_distance(s, pts[y], pts[z])));
                    }
                // every ball is an interval of the alex order
                for (int x = 0; x < N; ++x)
                    for (const auto& r : s) {
                        std::vector<int> in;
                        for (int y = 0; y < N; ++y)
                            if (ultra_distance(s, pts[x], pts[y]) <= r)
                                in.push_back(y);
                        REQUIRE(in.back() - in.front() + 1 == static_cast<int>(in.size()));
                    }
            }
}

TEST_CASE("tuple distance is an ultrametric on arbitrary tuple sets")
{
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_spectrum(rng, uniform_int(rng, 2, 4));
        const int k = static_cast<int>(s.size()) - 1;
        std::vector<Tuple> pts;
        for (int i = 0; i < 64; ++i) {
            Tuple t;
            for (int j = 0; j < k; ++j)
                t.push_back(uniform_int(rng, 0, 3));
            pts.push_back(t);
        }
        for (const auto& a : pts)
            for (const auto& b : pts)
                for (const auto& c : pts)
                    REQUIRE(dist_ultra_tuples(s, a, c) <= std::max(dist_ultra_tuples(s, a, b), dist_ultra_tuples(s, b, c)));
    }
}

TEST_CASE("phi and witness examples")
{
    const auto u = make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 2}, {2, 3, 2}});
    const auto enc = encode_ultrametric(u);
    const auto phi = phi_ultra(u, enc.poset, identity_embedding(enc.poset.size()));
    CHECK(phi.images[0] == TuplePoint{enc.index_of({{0}, 0}), enc.index_of({{0, 1}, 1})});
    CHECK(dist_ultra_tuples(u.spectrum, phi.images[0], phi.images[1]) == 1);

    const auto one = make_ultrametric(BaseOrder::iota(1), std::vector<DistanceEntry>{});
    CHECK(phi_ultra(one, own_ball_poset(one), identity_embedding(1)).images.size() == 1);

    const auto far = make_ultrametric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, iota_spectrum(2));
    const auto fe = encode_ultrametric(far);
    const auto fphi = phi_ultra(far, fe.poset, identity_embedding(fe.poset.size()));
    CHECK(fphi.images[0] == TuplePoint{fe.index_of({{0}, 0}), fe.index_of({{0}, 1})});

    CHECK(witness_ultra(u, u, identity_embedding(3)) == identity_embedding(enc.poset.size()));

    const std::vector<Rational> s01{0, 1};
    const auto a = make_ultrametric(BaseOrder::iota(1), std::vector<DistanceEntry>{}, s01);
    const auto ab = make_ultrametric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 1}}, s01);
    const auto v = witness_ultra(ab, a, Embedding{{0}});
    const auto ea = encode_ultrametric(a), eab = encode_ultrametric(ab);
    CHECK(eab.balls[v(ea.index_of({{0}, 0}))] == Ball{{0}, 0});
    CHECK(eab.balls[v(ea.index_of({{0}, 1}))] == Ball{{0, 1}, 1});

    CHECK_THROWS_AS(witness_ultra(u, ab, Embedding{{0, 1}}), DomainError);
    CHECK_THROWS_AS(phi_ultra(u, enc.poset, Embedding{{0, 1, 2, 3, 4, 4}}), DomainError);
}

TEST_CASE("reduce spectrum")
{
    const auto u = make_ultrametric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, iota_spectrum(3));
    CHECK(reduce_spectrum(u).spectrum == std::vector<Rational>{0, 2});
    const auto r = reduce_spectrum(u);
    CHECK(reduce_spectrum(r) == r);
    CHECK(reduce_spectrum(make_ultrametric(BaseOrder::iota(1), std::vector<DistanceEntry>{}, iota_spectrum(2))).spectrum ==
          std::vector<Rational>{0});
}

TEST_CASE("PA on random instances")
{
    for (int i = 0; i < 200; ++i) {
        const auto t = pa_random_trial(StructureKind::ultrametric, mix_seed(31, i));
        INFO(t.instance);
        REQUIRE(t.check.phi_ok);
        REQUIRE(t.check.witness_ok);
        REQUIRE(t.check.equation_ok);
    }
}
}

TEST_SUITE("metric")
{
TEST_CASE("tightness")
{
    CHECK(is_tight(iota_spectrum(2)));
    CHECK_FALSE(is_tight(rats({"0", "1", "5"})));
    CHECK(is_tight(rats({"0", "7/3"})));
    CHECK_THROWS_AS(is_tight(rats({"0", "2", "1"})), DomainError);
    CHECK_THROWS_AS(is_tight(rats({"1", "2"})), DomainError);
}

TEST_CASE("tight completion examples")
{
    CHECK(tight_complete(rats({"0", "1", "5"})).values == iota_spectrum(5));
    CHECK(tight_complete(iota_spectrum(2)).values == iota_spectrum(2));
    CHECK(tight_complete(iota_spectrum(1)).values == iota_spectrum(1));
    CHECK_THROWS_AS(tight_complete(rats({"0"})), DomainError);
}

TEST_CASE("tight completion properties")
{
    Rng rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rational> s{0};
        const int size = uniform_int(rng, 2, 5);
        while (static_cast<int>(s.size()) < size) {
            const Rational v(uniform_int(rng, 1, 20), uniform_int(rng, 1, 20));
            if (std::find(s.begin(), s.end(), v) == s.end())
                s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        INFO(format_rational_list(s));
        const auto t = tight_complete(s).values;
        REQUIRE(t.front() == 0);
        REQUIRE(t[1] == s[1]);
        REQUIRE(t.back() == s.back());
        for (std::size_t i = 1; i < t.size(); ++i)
            REQUIRE(t[i - 1] < t[i]);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i; i + j < t.size(); ++j)
                REQUIRE(t[i + j] <= t[i] + t[j]);
        for (const auto& x : s)
            REQUIRE(std::find(t.begin(), t.end(), x) != t.end());
        const std::vector<Rational> gens(s.begin() + 1, s.end());
        std::map<Rational, bool> memo;
        for (const auto& x : t)
            REQUIRE(in_semigroup(x, gens, memo));
    }
}

TEST_CASE("spectrum pipeline for arbitrary rational spaces")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_spectrum(rng, uniform_int(rng, 2, 5), 20);
        const auto m = reduce_spectrum(random_metric(rng, uniform_int(rng, 2, 5), s));
        if (m.spectrum.size() < 2)
            continue;
        const auto t = tight_complete(m.spectrum).values;
        for (const auto& x : t)
            REQUIRE((x == 0 || (m.spectrum[1] <= x && x <= m.spectrum.back())));
    }
}

TEST_CASE("level point poset")
{
    const auto m = make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, iota_spectrum(2));
    const auto enc = encode_metric(m);
    CHECK(enc.poset.size() == 6);
    const int a0 = enc.rank_of({0, 0}), b1 = enc.rank_of({1, 1}), b2 = enc.rank_of({1, 2}), b0 = enc.rank_of({1, 0});
    CHECK(enc.poset.below(a0, b2));
    CHECK_FALSE(enc.poset.below(a0, b1));
    for (int x = 0; x < 2; ++x)
        for (int i = 0; i <= 2; ++i)
            for (int j = i; j <= 2; ++j)
                CHECK(enc.poset.below(enc.rank_of({x, i}), enc.rank_of({x, j})));
    CHECK(a0 < b0);
}

TEST_CASE("tuple distance examples")
{
    const auto m = make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, iota_spectrum(2));
    const auto enc = encode_metric(m);
    const TuplePoint a{enc.rank_of({0, 0}), enc.rank_of({0, 1})};
    const TuplePoint b{enc.rank_of({1, 0}), enc.rank_of({1, 1})};
    CHECK(dist_metric_tuples(enc.poset, m.spectrum, a, a) == 0);
    CHECK(dist_metric_tuples(enc.poset, m.spectrum, a, b) == 2);

    // a_i ⊑ b_{i+1} and b_i ⊑ a_{i+1}, but a_0, b_0 incomparable and distinct
    const auto p = make_poset(BaseOrder::iota(3), std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(dist_metric_tuples(p, iota_spectrum(2), {0, 2}, {1, 2}) == 1);
    CHECK_THROWS_AS(dist_metric_tuples(p, rats({"0", "1", "5"}), {0, 2}, {1, 2}), DomainError);
}

TEST_CASE("decoded poset is a metric space over a tight spectrum")
{
    CHECK(decode_poset_metric(make_poset(BaseOrder::iota(1), {}), iota_spectrum(2)).space.size() == 1);
    const auto anti = make_poset(BaseOrder::iota(2), {});
    CHECK(decode_poset_metric(anti, iota_spectrum(2)).space.size() == 4);

    const std::vector<std::vector<Rational>> spectra{iota_spectrum(1), iota_spectrum(2), iota_spectrum(3),
                                                      rats({"0", "2", "3"}), rats({"0", "2", "3", "5"}),
                                                      rats({"0", "3", "4", "6"})};
    for (const auto& s : spectra)
        REQUIRE(is_tight(s));
    for (int n = 1; n <= 3; ++n)
        for (const auto& A : all_posets(n))
            for (const auto& s : spectra) {
                const int k = static_cast<int>(s.size()) - 1;
                auto pts = tuples(n, k);
                std::sort(pts.begin(), pts.end());
                const auto decoded = decode_poset_metric(A, s);
                REQUIRE(decoded.points == pts);
                const int N = static_cast<int>(pts.size());
                for (int x = 0; x < N; ++x)
                    for (int y = 0; y < N; ++y) {
                        const Rational dxy = metric_distance(A, s, pts[x], pts[y]);
                        REQUIRE(decoded.space.d(x, y) == dxy);
                        REQUIRE(dxy == metric_distance(A, s, pts[y], pts[x]));
                        REQUIRE((dxy == 0) == (x == y));
                        for (int z = 0; z < N; ++z)
                            REQUIRE(metric_distance(A, s, pts[x], pts[z]) <= dxy + metric_distance(A, s, pts[y], pts[z]));
                    }
            }
}

TEST_CASE("without tightness the triangle inequality fails somewhere")
{
    const auto s = rats({"0", "1", "5"});
    REQUIRE_FALSE(is_tight(s));
    bool violated = false;
    for (int n = 1; n <= 3 && !violated; ++n)
        for (const auto& A : all_posets(n)) {
            const auto pts = tuples(n, 2);
            for (const auto& x : pts)
                for (const auto& y : pts)
                    for (const auto& z : pts)
                        if (detail::dist_metric_tuples_unchecked(A, s, x, z) >
                            detail::dist_metric_tuples_unchecked(A, s, x, y) + detail::dist_metric_tuples_unchecked(A, s, y, z))
                            violated = true;
        }
    CHECK(violated);
    CHECK_THROWS_AS(decode_poset_metric(make_poset(BaseOrder::iota(2), {}), s), DomainError);
}

TEST_CASE("phi examples over arithmetic spectra")
{
    const auto m = make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, iota_spectrum(2));
    const auto enc = encode_metric(m);
    const auto phi = phi_metric(m, enc.poset, identity_embedding(enc.poset.size()));
    CHECK(phi.images[0] == TuplePoint{enc.rank_of({0, 0}), enc.rank_of({0, 1})});
    CHECK(phi.images[1] == TuplePoint{enc.rank_of({1, 0}), enc.rank_of({1, 1})});

    const auto one = make_metric(BaseOrder::iota(1), std::vector<DistanceEntry>{}, iota_spectrum(2));
    CHECK(phi_metric(one, encode_metric(one).poset, identity_embedding(3)).images.size() == 1);

    const auto three = make_metric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {2, 3, 1}, {1, 3, 2}},
                                   iota_spectrum(2));
    const auto e3 = encode_metric(three);
    const auto p3 = phi_metric(three, e3.poset, identity_embedding(e3.poset.size()));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(dist_metric_tuples(e3.poset, three.spectrum, p3.images[x], p3.images[y]) == three.d(x, y));

    CHECK(witness_metric(three, three, identity_embedding(3)) == identity_embedding(9));
    const auto v = witness_metric(m, one, Embedding{{0}});
    for (int i = 0; i <= 2; ++i)
        CHECK(v(encode_metric(one).rank_of({0, i})) == enc.rank_of({0, i}));
}

TEST_CASE("phi fails to preserve distances over a tight, non-arithmetic spectrum")
{
    // S = {0, 2, 3, 5} is tight; with d(x, y) = 2 the decoded distance of the
    // images is s_2 = 3, because (x, 1) ⊑ (y, 2) needs 2 <= s_2 - s_1 = 1.
    const auto s = rats({"0", "2", "3", "5"});
    REQUIRE(is_tight(s));
    const auto m = make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}}, s);
    const auto enc = encode_metric(m);
    const auto map = metric_map(enc, identity_embedding(enc.poset.size()));
    CHECK(dist_metric_tuples(enc.poset, s, map.images[0], map.images[1]) == 3);
    CHECK(metric_embedding_defect(m, enc.poset, map).has_value());
    CHECK_THROWS_AS(phi_metric(m, enc.poset, identity_embedding(enc.poset.size())), ConstructionError);
}

TEST_CASE("PA on random instances")
{
    // Arithmetic-prefix spectra: every clause holds.
    Rng rng(2718);
    int checked = 0;
    for (int i = 0; checked < 200; ++i) {
        const auto t = pa_random_trial(StructureKind::metric, mix_seed(77, i));
        // the instance line records the spectrum as "S=..."
        const auto at = t.instance.find("S=");
        const auto s = parse_rational_list(t.instance.substr(at + 2, t.instance.find(' ', at) - at - 2));
        if (!arithmetic_prefix(s))
            continue;
        ++checked;
        INFO(t.instance);
        REQUIRE(t.check.phi_ok);
        REQUIRE(t.check.witness_ok);
        REQUIRE(t.check.equation_ok);
    }
    // General tight spectra: the witness and the equation still hold; Φ may not be an embedding.
    int phi_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const auto t = pa_random_trial(StructureKind::metric, mix_seed(78, i));
        INFO(t.instance);
        REQUIRE(t.check.witness_ok);
        REQUIRE(t.check.equation_ok);
        phi_failures += t.check.phi_ok ? 0 : 1;
    }
    MESSAGE("Φ not an embedding on " << phi_failures << " of 200 trials over general tight spectra");
    CHECK(phi_failures > 0);
}
}
