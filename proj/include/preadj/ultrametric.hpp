#pragma once

// Convexly ordered ultrametric spaces over a finite spectrum as subspaces of
// tuple spaces over linearly ordered posets. A space maps to its poset of
// balls; a poset A maps to (A^k, d_A, ≺_alex) with k = |S| - 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preadj/structures.hpp"

namespace preadj {

/// (a_0, ..., a_{k-1}) with entries given as ranks in a poset.
using TuplePoint = std::vector<int>;

/// Image of a space in a tuple space, one tuple per source rank.
struct TupleMap
{
    std::vector<TuplePoint> images;

    friend bool operator==(const TupleMap&, const TupleMap&) = default;
};

TupleMap compose(const TupleMap& outer, const Embedding& f);
/// Entrywise application of an embedding between posets.
TupleMap apply_entrywise(const Embedding& g, const TupleMap& map);

struct BallPoset
{
    ConvUltrametricSpace space;
    /// Balls sorted by ≺; poset rank r is balls[r].
    std::vector<Ball> balls;
    /// Componentwise order on the balls, linearly ordered by ≺, labels 1..|balls|.
    LinOrderedPoset poset;

    int index_of(const Ball& b) const;
};

BallPoset encode_ultrametric(const ConvUltrametricSpace& u);

/// s_j with j = min{p : a_i = b_i for all i >= p}, min ∅ = k.
Rational dist_ultra_tuples(std::span<const Rational> spectrum, const TuplePoint& a, const TuplePoint& b);

/// A finite tuple space and the tuples behind its points (points[r] is rank r).
template <class Space>
struct TupleSpace
{
    std::vector<TuplePoint> points;
    Space space;
};

/// (A^k, d_A, ≺_alex) when `points` is absent (refused above `bound` points),
/// else the subspace on the given tuples. The result is validated.
TupleSpace<ConvUltrametricSpace> decode_poset_ultra(const LinOrderedPoset& a, std::span<const Rational> spectrum,
                                                    std::optional<std::vector<TuplePoint>> points = std::nullopt,
                                                    std::uint64_t bound = 4096);

/// All tuples of length k over `size` elements (odometer order), or BudgetExceeded.
std::vector<TuplePoint> all_tuples(int size, int k, std::uint64_t bound);

/// x -> (u(B(x, s_0)), ..., u(B(x, s_{k-1}))) without checks beyond u's domain.
TupleMap ultra_map(const BallPoset& enc, const Embedding& u);

/// Why the map is not an embedding into (A^k, d_A, ≺_alex), if it is not.
std::optional<std::string> ultra_embedding_defect(const ConvUltrametricSpace& space, const LinOrderedPoset& a,
                                                  const TupleMap& map);

/// Requires u : F(space) -> a to be an embedding; the result is verified.
TupleMap phi_ultra(const ConvUltrametricSpace& space, const LinOrderedPoset& a, const Embedding& u);

/// v : F(u2) -> F(u1), (P, i) -> B(f(min P), s_i), for f : u2 -> u1.
Embedding witness_ultra(const ConvUltrametricSpace& u1, const ConvUltrametricSpace& u2, const Embedding& f);

/// Same points and distances, spectrum shrunk to the attained distances plus 0.
ConvUltrametricSpace reduce_spectrum(const ConvUltrametricSpace& u);

} // namespace preadj
