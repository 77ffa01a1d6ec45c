#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "preadj/generators.hpp"
#include "preadj/graph.hpp"
#include "preadj/poset.hpp"

using namespace preadj;

namespace {

using Masks = std::vector<unsigned>;

unsigned positions_mask(const ParameterWord& u, int i)
{
    unsigned m = 0;
    for (int p : u.variable_positions(i))
        m |= 1u << (p - 1);
    return m;
}

Masks as_masks(const PowerSetMap& m)
{
    Masks out;
    for (const auto& s : m.images) {
        unsigned x = 0;
        for (int p : s)
            x |= 1u << (p - 1);
        out.push_back(x);
    }
    return out;
}

// Edges sorted by clex over the vertex order, as bitmasks over vertex ranks.
std::vector<unsigned> clex_edges(const LinOrderedGraph& g)
{
    std::vector<unsigned> e;
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b))
                e.push_back(1u << a | 1u << b);
    std::sort(e.begin(), e.end(), [](unsigned x, unsigned y) { return brute::clex(x, y) < 0; });
    return e;
}

// ṽ_i = X_i ∪ X_{n+j} over the edges e_j containing v_i.
Masks graph_images(const LinOrderedGraph& g, const ParameterWord& u)
{
    const int n = g.size();
    const auto e = clex_edges(g);
    Masks out;
    for (int i = 0; i < n; ++i) {
        unsigned m = positions_mask(u, i + 1);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] >> i & 1u)
                m |= positions_mask(u, n + static_cast<int>(j) + 1);
        out.push_back(m);
    }
    return out;
}

bool graph_embeds(const LinOrderedGraph& g, const Masks& img)
{
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            if (a != b && ((img[a] & img[b]) != 0) != g.adjacent(a, b))
                return false;
            if (a < b && brute::clex(img[a], img[b]) >= 0)
                return false;
        }
    return true;
}

// Nonempty downsets sorted by alex, as bitmasks over ranks.
std::vector<unsigned> alex_downsets(const LinOrderedPoset& p)
{
    const int n = p.size();
    std::vector<unsigned> out;
    for (unsigned m = 1; m < (1u << n); ++m) {
        bool closed = true;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((m >> x & 1u) && p.below(y, x) && !(m >> y & 1u))
                    closed = false;
        if (closed)
            out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) { return brute::alex(a, b) < 0; });
    return out;
}

// a_i = union of X_α over the downsets D_α containing i.
Masks poset_images(const LinOrderedPoset& p, const ParameterWord& u)
{
    const auto d = alex_downsets(p);
    Masks out;
    for (int i = 0; i < p.size(); ++i) {
        unsigned m = 0;
        for (std::size_t a = 0; a < d.size(); ++a)
            if (d[a] >> i & 1u)
                m |= positions_mask(u, static_cast<int>(a) + 1);
        out.push_back(m);
    }
    return out;
}

bool poset_embeds(const LinOrderedPoset& p, const Masks& img)
{
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.below(a, b) != ((img[a] & img[b]) == img[b]))
                return false;
            if (a < b && brute::clex(img[a], img[b]) >= 0)
                return false;
        }
    return true;
}

std::vector<LinOrderedGraph> all_graphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            pairs.emplace_back(a, b);
    std::vector<LinOrderedGraph> out;
    for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1u)
                e.push_back(pairs[i]);
        out.push_back(make_graph(BaseOrder::iota(n), e));
    }
    return out;
}

std::vector<LinOrderedPoset> all_posets(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            pairs.emplace_back(a, b);
    std::vector<LinOrderedPoset> out;
    for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
        std::vector<std::pair<int, int>> r;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1u)
                r.push_back(pairs[i]);
        auto has = [&](int a, int b) { return std::find(r.begin(), r.end(), std::pair{a, b}) != r.end(); };
        bool transitive = true;
        for (auto [a, b] : r)
            for (auto [c, d] : r)
                if (b == c && !has(a, d))
                    transitive = false;
        if (transitive)
            out.push_back(make_poset(BaseOrder::iota(n), r));
    }
    return out;
}

LinOrderedPoset chain(int n)
{
    std::vector<std::pair<int, int>> leq;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            leq.emplace_back(a, b);
    return make_poset(BaseOrder::iota(n), leq);
}

const std::string worked_u = "0 x1 0 0 x2 0 x1 x3 x3 x4 x2 x5 x6 0 x7 x1";

LinOrderedGraph worked_g()
{
    return make_graph(BaseOrder::iota(4), std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});
}
LinOrderedGraph worked_g2()
{
    return make_graph(BaseOrder::iota(3), std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
}

ParameterWord word(const std::string& s) { return ParameterWord::parse(s, zero_alphabet()); }

} // namespace

TEST_SUITE("graph")
{
TEST_CASE("encoding")
{
    const auto enc = encode_graph(worked_g());
    CHECK(enc.object == 7);
    CHECK(enc.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(encode_graph(make_graph(BaseOrder::iota(1), {})).object == 1);
    CHECK(encode_graph(worked_g2()).object == 5);
}

TEST_CASE("worked example values")
{
    const auto phi = phi_graph(worked_g(), word(worked_u));
    CHECK(phi.images == std::vector<Subset>{{2, 7, 12, 16}, {5, 11, 12, 13, 15}, {8, 9, 13}, {10, 15}});
    CHECK(phi_graph(make_graph(BaseOrder::iota(1), {}), word("x1")).images == std::vector<Subset>{{1}});

    const Embedding f{{1, 2, 3}};
    const auto w = witness_graph(worked_g(), worked_g2(), f, word(worked_u));
    CHECK(w.h.to_string() == "0 x1 x2 x3 x1 x4 x5");
    CHECK(w.parts[0] == Subset{5, 11, 12});
    CHECK(w.parts[3] == Subset{13});
    CHECK(w.parts[4] == Subset{15});
    const auto uh = compose(word(worked_u), w.h);
    CHECK(phi_graph(worked_g2(), uh).images == std::vector<Subset>{{5, 11, 12, 13, 15}, {8, 9, 13}, {10, 15}});
    CHECK(compose(phi, f) == phi_graph(worked_g2(), uh));

    const auto self = witness_graph(worked_g(), worked_g(), identity_embedding(4), word(worked_u));
    CHECK(self.h == ParameterWord::identity(7, zero_alphabet()));
    CHECK_THROWS_AS(phi_graph(worked_g(), word("x1 x2")), DomainError);
}

TEST_CASE("phi is an embedding, exhaustively")
{
    // all graphs up to 5 vertices, all u in W^N_{n+m} with N <= n+m+2
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : all_graphs(n)) {
            const int m = encode_graph(g).object;
            for (int N = m; N <= m + 2; ++N)
                for (const auto& u : enumerate_words(zero_alphabet(), N, m, 1000000)) {
                    const auto img = graph_images(g, u);
                    REQUIRE(graph_embeds(g, img));
                    REQUIRE(as_masks(phi_graph(g, u)) == img);
                }
        }
}

TEST_CASE("PA equation on random instances")
{
    Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, uniform_int(rng, 1, 5));
        const auto sub = random_nonempty_subset(rng, g.size());
        const auto g2 = induced(g, sub);
        const Embedding f{sub};
        const int m = encode_graph(g).object;
        const auto u = random_word(rng, zero_alphabet(), m + uniform_int(rng, 0, 4), m);
        const auto w = witness_graph(g, g2, f, u);
        REQUIRE(w.h.parameters() == encode_graph(g2).object);
        REQUIRE(w.h.length() == m);
        const auto lhs = graph_images(g, u);
        const auto rhs = graph_images(g2, compose(u, w.h));
        for (int i = 0; i < g2.size(); ++i)
            REQUIRE(rhs[i] == lhs[f(i)]);
    }
}
}

TEST_SUITE("poset")
{
TEST_CASE("encoding and examples")
{
    const auto anti = make_poset(BaseOrder::iota(2), {});
    CHECK(encode_poset(anti).object == 3);
    CHECK(encode_poset(anti).downsets == std::vector<Subset>{{0}, {1}, {0, 1}});
    CHECK(encode_poset(chain(2)).object == 2);
    CHECK(encode_poset(chain(1)).object == 1);

    CHECK(phi_poset(chain(2), word("x1 x2")).images == std::vector<Subset>{{1, 2}, {2}});
    CHECK(phi_poset(anti, word("x1 x2 x3")).images == std::vector<Subset>{{1, 3}, {2, 3}});
    CHECK(phi_poset(chain(1), word("x1")).images == std::vector<Subset>{{1}});

    CHECK(witness_poset(chain(2), chain(2), identity_embedding(2), word("x1 x2")) ==
          ParameterWord::identity(2, zero_alphabet()));
    CHECK(witness_poset(chain(2), chain(1), Embedding{{0}}, word("x1 0 x2")).to_string() == "x1 x1");
    const auto h = witness_poset(anti, chain(1), Embedding{{1}}, word("x1 x2 x3"));
    CHECK(h.to_string() == "0 x1 x1");
    CHECK(compose(word("x1 x2 x3"), h).variable_positions(1) == Subset{2, 3});
    CHECK(phi_poset(anti, word("x1 x2 x3")).images[1] == Subset{2, 3});
}

TEST_CASE("phi is an embedding, exhaustively")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : all_posets(n)) {
            const int m = encode_poset(p).object;
            REQUIRE(static_cast<std::size_t>(m) == alex_downsets(p).size());
            for (int N = m; N <= m + 2; ++N)
                for (const auto& u : enumerate_words(zero_alphabet(), N, m, 1000000)) {
                    const auto img = poset_images(p, u);
                    REQUIRE(poset_embeds(p, img));
                    REQUIRE(as_masks(phi_poset(p, u)) == img);
                }
        }
}

TEST_CASE("witness and PA equation, exhaustive small and random")
{
    auto check = [](const LinOrderedPoset& p, const LinOrderedPoset& p2, const Embedding& f, const ParameterWord& u) {
        const auto h = witness_poset(p, p2, f, u);
        REQUIRE(h.parameters() == encode_poset(p2).object);
        const auto lhs = poset_images(p, u);
        const auto rhs = poset_images(p2, compose(u, h));
        for (int i = 0; i < p2.size(); ++i)
            REQUIRE(rhs[i] == lhs[f(i)]);
    };
    // every downset of p2 is the preimage of a downset of p
    auto preimages_cover = [](const LinOrderedPoset& p, const LinOrderedPoset& p2, const Embedding& f) {
        std::set<unsigned> pre;
        for (unsigned d : alex_downsets(p)) {
            unsigned m = 0;
            for (int i = 0; i < p2.size(); ++i)
                if (d >> f(i) & 1u)
                    m |= 1u << i;
            if (m)
                pre.insert(m);
        }
        const auto d2 = alex_downsets(p2);
        return pre == std::set<unsigned>(d2.begin(), d2.end());
    };
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_posets(n))
            for (int n2 = 1; n2 <= n; ++n2)
                for (const auto& p2 : all_posets(n2))
                    for (const auto& f : enumerate_embeddings(p2, p)) {
                        REQUIRE(preimages_cover(p, p2, f));
                        const int m = encode_poset(p).object;
                        for (const auto& u : enumerate_words(zero_alphabet(), m + 1, m, 100000))
                            check(p, p2, f, u);
                    }
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poset(rng, uniform_int(rng, 1, 5));
        const auto sub = random_nonempty_subset(rng, p.size());
        const Embedding f{sub};
        const auto p2 = induced(p, sub);
        REQUIRE(preimages_cover(p, p2, f));
        const int m = encode_poset(p).object;
        check(p, p2, f, random_word(rng, zero_alphabet(), m + uniform_int(rng, 0, 4), m));
    }
}
}
