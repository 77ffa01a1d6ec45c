#pragma once

// Seeded random instances for property tests and the PA harness.

#include <cstdint>
#include <random>
#include <vector>

#include "preadj/param_words.hpp"
#include "preadj/structures.hpp"

namespace preadj {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent per-trial seeds from one base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

LinOrderedGraph random_graph(Rng& rng, int n, double edge_probability = 0.5);
/// Random relations i ⊑ j for i < j, transitively closed.
LinOrderedPoset random_poset(Rng& rng, int n, double relation_probability = 0.4);
/// Nested interval splitting, so every ball is an interval.
ConvUltrametricSpace random_ultrametric(Rng& rng, int n, const std::vector<Rational>& spectrum);
/// Distances drawn from the spectrum, resampled until the triangle inequality holds.
LinOrderedMetricSpace random_metric(Rng& rng, int n, const std::vector<Rational>& spectrum);

/// {0 < s_1 < ... < s_{size-1}} with values p/q, 1 <= p, q <= max_term.
std::vector<Rational> random_spectrum(Rng& rng, int size, int max_term = 10);
/// Rejection-sampled tight spectrum of the given size.
std::vector<Rational> random_tight_spectrum(Rng& rng, int size, int max_term = 10);

/// m-parameter word of length n: m increasing first-occurrence positions,
/// every other position a letter or an already introduced variable.
ParameterWord random_word(Rng& rng, const AlphabetPtr& alphabet, int n, int m);

/// A nonempty subset of {0..n-1}.
Subset random_nonempty_subset(Rng& rng, int n);

/// p with up to `extra` elements added above or below, each new top having a
/// random downset below it and each new bottom a random upset above it. The
/// original elements keep their relative order; `inclusion` receives their ranks.
LinOrderedPoset random_superposet(Rng& rng, const LinOrderedPoset& p, int extra, Embedding& inclusion);

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items)
{
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
}

inline int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace preadj
