#include "preadj/generators.hpp"

#include <algorithm>

#include "preadj/metric.hpp"

namespace preadj {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

LinOrderedGraph random_graph(Rng& rng, int n, double edge_probability)
{
    std::bernoulli_distribution coin(edge_probability);
    LinOrderedGraph g{BaseOrder::iota(n), SquareMatrix<char>(n, 0)};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                g.adjacency(a, b) = g.adjacency(b, a) = 1;
    return g;
}

LinOrderedPoset random_poset(Rng& rng, int n, double relation_probability)
{
    std::bernoulli_distribution coin(relation_probability);
    LinOrderedPoset p{BaseOrder::iota(n), SquareMatrix<char>(n, 0)};
    for (int a = 0; a < n; ++a) {
        p.leq(a, a) = 1;
        for (int b = a + 1; b < n; ++b)
            p.leq(a, b) = coin(rng) ? 1 : 0;
    }
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.leq(a, m) && p.leq(m, b))
                    p.leq(a, b) = 1;
    return p;
}

ConvUltrametricSpace random_ultrametric(Rng& rng, int n, const std::vector<Rational>& spectrum)
{
    const int k = static_cast<int>(spectrum.size()) - 1;
    if (n > 1 && k < 1)
        throw DomainError("distinct points need a nonzero spectrum value");
    SquareMatrix<Rational> dist(n, Rational(0));
    // Points of [lo, hi) are pairwise within s_level; split into blocks at
    // distance exactly s_level and recurse one level down.
    auto rec = [&](auto&& self, int lo, int hi, int level) -> void {
        if (hi - lo <= 1)
            return;
        std::vector<int> cuts{lo};
        for (int c = lo + 1; c < hi; ++c)
            if (level == 1 || std::bernoulli_distribution(0.4)(rng))
                cuts.push_back(c);
        cuts.push_back(hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < cuts.size(); ++j)
                for (int a = cuts[i]; a < cuts[i + 1]; ++a)
                    for (int b = cuts[j]; b < cuts[j + 1]; ++b)
                        dist(a, b) = dist(b, a) = spectrum[static_cast<std::size_t>(level)];
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            self(self, cuts[i], cuts[i + 1], level - 1);
    };
    rec(rec, 0, n, k);
    return ultrametric_from_matrix(BaseOrder::iota(n), std::move(dist), spectrum);
}

LinOrderedMetricSpace random_metric(Rng& rng, int n, const std::vector<Rational>& spectrum)
{
    const int k = static_cast<int>(spectrum.size()) - 1;
    if (n > 1 && k < 1)
        throw DomainError("distinct points need a nonzero spectrum value");
    SquareMatrix<Rational> dist(n, Rational(0));
    for (int attempt = 0; attempt < 200; ++attempt) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                dist(a, b) = dist(b, a) = spectrum[static_cast<std::size_t>(uniform_int(rng, 1, k))];
        bool ok = true;
        for (int a = 0; ok && a < n; ++a)
            for (int b = 0; ok && b < n; ++b)
                for (int c = 0; ok && c < n; ++c)
                    ok = dist(a, c) <= dist(a, b) + dist(b, c);
        if (ok)
            return metric_from_matrix(BaseOrder::iota(n), std::move(dist), spectrum);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            dist(a, b) = dist(b, a) = spectrum.back();
    return metric_from_matrix(BaseOrder::iota(n), std::move(dist), spectrum);
}

std::vector<Rational> random_spectrum(Rng& rng, int size, int max_term)
{
    std::vector<Rational> s{Rational(0)};
    while (static_cast<int>(s.size()) < size) {
        Rational r(uniform_int(rng, 1, max_term), uniform_int(rng, 1, max_term));
        if (std::find(s.begin(), s.end(), r) == s.end())
            s.push_back(r);
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Rational> random_tight_spectrum(Rng& rng, int size, int max_term)
{
    while (true) {
        auto s = random_spectrum(rng, size, max_term);
        if (is_tight(s))
            return s;
    }
}

ParameterWord random_word(Rng& rng, const AlphabetPtr& alphabet, int n, int m)
{
    if (m > n || n < 1)
        throw DomainError("no " + std::to_string(m) + "-parameter word of length " + std::to_string(n));
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        positions[static_cast<std::size_t>(i)] = i;
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(static_cast<std::size_t>(m));
    std::sort(positions.begin(), positions.end());
    std::vector<Token> tokens;
    int introduced = 0;
    for (int i = 0; i < n; ++i) {
        if (introduced < m && positions[static_cast<std::size_t>(introduced)] == i) {
            tokens.push_back(Token::var(++introduced));
            continue;
        }
        const int choice = uniform_int(rng, 0, alphabet->size() + introduced - 1);
        tokens.push_back(choice < alphabet->size() ? Token::letter(choice)
                                                    : Token::var(choice - alphabet->size() + 1));
    }
    return ParameterWord::validate(std::move(tokens), alphabet, m);
}

Subset random_nonempty_subset(Rng& rng, int n)
{
    while (true) {
        Subset s;
        for (int i = 0; i < n; ++i)
            if (std::bernoulli_distribution(0.5)(rng))
                s.push_back(i);
        if (!s.empty())
            return s;
    }
}

LinOrderedPoset random_superposet(Rng& rng, const LinOrderedPoset& p, int extra, Embedding& inclusion)
{
    // Built over ranks: `rel` grows as new elements are appended at either end.
    std::vector<std::vector<char>> rel(static_cast<std::size_t>(p.size()),
                                       std::vector<char>(static_cast<std::size_t>(p.size())));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = p.leq(a, b);
    std::vector<int> original(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        original[static_cast<std::size_t>(i)] = i;

    // Closure of a random seed set: downward for a new top, upward for a new bottom.
    auto random_closed = [&](bool down) {
        const std::size_t n = rel.size();
        std::vector<char> mask(n, 0);
        for (std::size_t x = 0; x < n; ++x)
            if (std::bernoulli_distribution(0.3)(rng))
                for (std::size_t y = 0; y < n; ++y)
                    if (down ? rel[y][x] : rel[x][y])
                        mask[y] = 1;
        return mask;
    };
    for (int e = 0; e < extra; ++e) {
        const std::size_t n = rel.size();
        const bool top = std::bernoulli_distribution(0.5)(rng);
        const std::vector<char> mask = random_closed(top);
        for (auto& row : rel)
            row.resize(n + 1, 0);
        rel.emplace_back(n + 1, 0);
        if (top) {
            for (std::size_t x = 0; x < n; ++x)
                rel[x][n] = mask[x];
            rel[n][n] = 1;
        } else {
            // new element at the end for now, moved to the front below
            for (std::size_t x = 0; x < n; ++x)
                rel[n][x] = mask[x];
            rel[n][n] = 1;
            std::rotate(rel.begin(), rel.end() - 1, rel.end());
            for (auto& row : rel)
                std::rotate(row.begin(), row.end() - 1, row.end());
            for (int& r : original)
                ++r;
        }
    }
    const int n = static_cast<int>(rel.size());
    LinOrderedPoset out{BaseOrder::iota(n), SquareMatrix<char>(n, 0)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.leq(a, b) = rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    validate_structure(out);
    inclusion.map = original;
    return out;
}

} // namespace preadj
