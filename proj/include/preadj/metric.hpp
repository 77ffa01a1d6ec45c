#pragma once

// Linearly ordered metric spaces over a tight spectrum as subspaces of tuple
// spaces over linearly ordered posets. A space M maps to the poset on
// M × {0..k}; a poset A maps to (A^k, d_A, ≺_lex).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preadj/structures.hpp"
#include "preadj/ultrametric.hpp"

namespace preadj {

struct TightSpectrum
{
    std::vector<Rational> values;
    bool tight = false;
};

/// s_{i+j} <= s_i + s_j for all 0 <= i <= j, i + j <= k. Throws on an invalid spectrum.
bool is_tight(std::span<const Rational> s);

/// A tight superset with the same smallest and largest nonzero values,
/// built by the step-by-step completion (c_{i+1} is s_{j+1} or the least
/// sum c_a + c_b with a + b = i + 1, whichever is smaller).
TightSpectrum tight_complete(std::span<const Rational> s, std::uint64_t max_steps = 1'000'000);

struct LevelPoint
{
    int point = 0;
    int level = 0;

    friend auto operator<=>(const LevelPoint&, const LevelPoint&) = default;
};

struct MetricEncoding
{
    LinOrderedMetricSpace space;
    /// (x, i) ⊑ (y, j) iff i <= j and d(x, y) <= s_j - s_i, ordered by level, then point.
    LinOrderedPoset poset;
    bool tight = false;

    int levels() const noexcept { return static_cast<int>(space.spectrum.size()); }
    int rank_of(LevelPoint p) const { return p.level * space.size() + p.point; }
    LevelPoint level_point(int rank) const { return {rank % space.size(), rank / space.size()}; }
};

MetricEncoding encode_metric(const LinOrderedMetricSpace& m);

/// s_j with j the least p such that a_i ⊑ b_{i+p} and b_i ⊑ a_{i+p} for all
/// i <= k - 1 - p. Refuses a spectrum that is not tight.
Rational dist_metric_tuples(const LinOrderedPoset& a, std::span<const Rational> spectrum, const TuplePoint& x,
                            const TuplePoint& y);

namespace detail {
/// The same formula with no tightness check; only for probing the precondition.
Rational dist_metric_tuples_unchecked(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                      const TuplePoint& x, const TuplePoint& y);
}

/// (A^k, d_A, ≺_lex), or its subspace on `points`. The result is validated.
TupleSpace<LinOrderedMetricSpace> decode_poset_metric(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                                      std::optional<std::vector<TuplePoint>> points = std::nullopt,
                                                      std::uint64_t bound = 4096);

/// x -> (u(x, 0), ..., u(x, k - 1)).
TupleMap metric_map(const MetricEncoding& enc, const Embedding& u);

std::optional<std::string> metric_embedding_defect(const LinOrderedMetricSpace& space, const LinOrderedPoset& a,
                                                   const TupleMap& map);

/// Requires u : F(space) -> a to be an embedding; the result is verified.
TupleMap phi_metric(const LinOrderedMetricSpace& space, const LinOrderedPoset& a, const Embedding& u);

/// v : F(m2) -> F(m1), (x, i) -> (f(x), i), for f : m2 -> m1.
Embedding witness_metric(const LinOrderedMetricSpace& m1, const LinOrderedMetricSpace& m2, const Embedding& f);

LinOrderedMetricSpace reduce_spectrum(const LinOrderedMetricSpace& m);

} // namespace preadj
