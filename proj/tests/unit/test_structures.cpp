#include "doctest.h"

#include "oracles.hpp"

#include "brute.hpp"
#include "preadj/generators.hpp"
#include "preadj/structures.hpp"

using namespace preadj;
using namespace brute;

namespace {

template <class S>
void check_enumeration(const S& src, const S& tgt)
{
    std::vector<std::vector<int>> expected;
    for (const auto& f : brute::injections(src.size(), tgt.size()))
        if (brute_embedding(f, src, tgt))
            expected.push_back(f);
    std::vector<std::vector<int>> got;
    for (const auto& e : enumerate_embeddings(src, tgt))
        got.push_back(e.map);
    std::sort(expected.begin(), expected.end());
    REQUIRE(got == expected); // enumeration is lexicographic in the image vector
    for (const auto& f : brute::injections(src.size(), tgt.size()))
        REQUIRE(is_embedding<S>(f, src, tgt) == brute_embedding(f, src, tgt));
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < got.size() && src.size() == tgt.size(); ++j)
            REQUIRE(is_embedding<S>(compose(Embedding{got[i]}, Embedding{got[j]}).map, src, tgt));
}

template <class S, class Gen>
void enumeration_suite(Gen gen)
{
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const int t = uniform_int(rng, 1, 5);
        const S tgt = gen(rng, t);
        const int s = uniform_int(rng, 1, std::min(3, t));
        // half from a random subset of the target, so embeddings exist
        const S src = trial % 2 ? induced(tgt, [&] {
            Subset r = random_nonempty_subset(rng, t);
            r.resize(std::min<std::size_t>(r.size(), 3));
            return r;
        }())
                                : gen(rng, s);
        check_enumeration(src, tgt);
        // composition of embeddings src -> tgt -> tgt
        for (const auto& f : enumerate_embeddings(src, tgt))
            for (const auto& g : enumerate_embeddings(tgt, tgt))
                REQUIRE(is_embedding<S>(compose(g, f).map, src, tgt));
        REQUIRE(is_embedding<S>(identity_embedding(tgt.size()).map, tgt, tgt));
    }
}

} // namespace

TEST_SUITE("structures")
{
TEST_CASE("validation examples")
{
    const auto g = make_graph(BaseOrder::iota(4), std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(validate_structure(g).size == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});

    const auto u = make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 2}, {2, 3, 2}});
    CHECK(validate_structure(u).attained_spectrum == std::vector<Rational>{0, 1, 2});

    try {
        make_poset(BaseOrder::iota(2), std::vector<std::pair<int, int>>{{2, 1}});
        FAIL("accepted");
    } catch (const StructureError& e) {
        CHECK(std::string(e.what()).find("linear order does not extend ⊑") != std::string::npos);
    }
    CHECK_THROWS_AS(make_graph(BaseOrder::iota(2), std::vector<std::pair<int, int>>{{1, 1}}), DomainError);
    CHECK_THROWS_AS(make_graph(BaseOrder::iota(2), std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(make_poset(BaseOrder::iota(3), std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}), DomainError);
    // strong triangle inequality
    CHECK_THROWS_AS(make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 3}, {2, 3, 2}}),
                    StructureError);
    // ball {1, 3} at radius 1 is not an interval
    CHECK_THROWS_AS(make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 2}, {1, 3, 1}, {2, 3, 2}}),
                    StructureError);
    CHECK_THROWS_AS(make_metric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 3}, {2, 3, 1}}),
                    StructureError);
    CHECK_THROWS_AS(make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 1}}, std::vector<Rational>{0, 2}),
                    StructureError);
    CHECK_THROWS_AS(make_metric(BaseOrder::iota(2), std::vector<DistanceEntry>{}), DomainError);
}

TEST_CASE("embedding examples")
{
    const auto g = make_graph(BaseOrder::iota(4), std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});
    const auto g2 = make_graph(BaseOrder::iota(3), std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
    CHECK(check_embedding(std::vector{1, 2, 3}, g2, g).map == std::vector{1, 2, 3});
    CHECK(is_embedding<LinOrderedGraph>(identity_embedding(4).map, g, g));
    try {
        check_embedding(std::vector{1, 1, 3}, g2, g);
        FAIL("accepted");
    } catch (const StructureError& e) {
        CHECK(std::string(e.what()).find("not injective") != std::string::npos);
    }
    CHECK(enumerate_embeddings(chain(2), chain(3)).size() == 3);
    CHECK(enumerate_embeddings(antichain(2), chain(3)).empty());
    CHECK_THROWS_AS(enumerate_embeddings(chain(1), chain(3), 2), BudgetExceeded);
}

TEST_CASE("embedding enumeration matches brute force")
{
    enumeration_suite<LinOrderedGraph>([](Rng& r, int n) { return random_graph(r, n); });
    enumeration_suite<LinOrderedPoset>([](Rng& r, int n) { return random_poset(r, n); });
    enumeration_suite<ConvUltrametricSpace>(
        [](Rng& r, int n) { return random_ultrametric(r, n, std::vector<Rational>{0, 1, 2}); });
    enumeration_suite<LinOrderedMetricSpace>(
        [](Rng& r, int n) { return random_metric(r, n, std::vector<Rational>{0, 1, 2}); });
}

TEST_CASE("downsets")
{
    CHECK(downsets(antichain(2)) == std::vector<Subset>{{0}, {1}, {0, 1}});
    CHECK(downsets(chain(2)) == std::vector<Subset>{{0}, {0, 1}});
    CHECK(downsets(chain(1)) == std::vector<Subset>{{0}});

    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 5);
        const auto p = random_poset(rng, n);
        std::vector<unsigned> expected;
        for (unsigned m = 1; m < (1u << n); ++m) {
            bool closed = true;
            for (int x = 0; x < n && closed; ++x)
                for (int y = 0; y < n && closed; ++y)
                    if ((m >> x & 1u) && p.below(y, x) && !(m >> y & 1u))
                        closed = false;
            if (closed)
                expected.push_back(m);
        }
        std::sort(expected.begin(), expected.end(), [](unsigned a, unsigned b) { return brute::alex(a, b) < 0; });
        const auto got = downsets(p);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            REQUIRE(brute::mask_of(got[i]) == expected[i]);
        for (int a = 0; a < n; ++a)
            REQUIRE(std::find(got.begin(), got.end(), principal_downset(p, a)) != got.end());
    }
}

TEST_CASE("balls")
{
    const auto u = make_ultrametric(BaseOrder::iota(3), std::vector<DistanceEntry>{{1, 2, 1}, {1, 3, 2}, {2, 3, 2}});
    CHECK(balls(u) == std::vector<Ball>{{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 1}, {{2}, 1}, {{0, 1, 2}, 2}});

    const auto one = make_ultrametric(BaseOrder::iota(1), std::vector<DistanceEntry>{});
    CHECK(balls(one) == std::vector<Ball>{{{0}, 0}});

    const auto two = make_ultrametric(BaseOrder::iota(2), std::vector<DistanceEntry>{{1, 2, 2}},
                                      std::vector<Rational>{0, 1, 2});
    CHECK(balls(two) == std::vector<Ball>{{{0}, 0}, {{1}, 0}, {{0}, 1}, {{1}, 1}, {{0, 1}, 2}});

    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const auto spectrum = random_spectrum(rng, uniform_int(rng, n == 1 ? 1 : 2, 4));
        const auto space = random_ultrametric(rng, n, spectrum);
        const auto bs = balls(space);
        for (std::size_t i = 0; i < bs.size(); ++i) {
            const auto& p = bs[i].points;
            REQUIRE(p.back() - p.front() + 1 == static_cast<int>(p.size())); // interval
            for (std::size_t j = 0; j < bs.size(); ++j) {
                if (i == j)
                    continue;
                REQUIRE_FALSE(bs[i] == bs[j]);
                REQUIRE((ball_order(bs[i], bs[j]) < 0) == (i < j));
                if (bs[i].radius == bs[j].radius)
                    REQUIRE_FALSE(intersects(bs[i].points, bs[j].points));
            }
        }
    }
}
}
