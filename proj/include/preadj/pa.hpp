#pragma once

// Checks of the pre-adjunction condition Φ(u) ∘ f = Φ(u · witness) on concrete
// and randomized instances, and an executable run of the transfer argument.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preadj/graph.hpp"
#include "preadj/metric.hpp"
#include "preadj/oracle.hpp"
#include "preadj/poset.hpp"
#include "preadj/structures.hpp"
#include "preadj/ultrametric.hpp"

namespace preadj {

struct PaCheck
{
    bool phi_ok = true;      // (i) Φ outputs are embeddings
    bool witness_ok = true;  // (ii) the witness is a valid morphism
    bool equation_ok = true; // (iii) Φ(u) ∘ f = Φ(u · witness)
    std::string detail;
    std::string witness;
    /// Rendered images of Φ(u) ∘ f and of Φ(u · witness).
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;

    bool passed() const { return phi_ok && witness_ok && equation_ok; }
};

/// f : e -> d; u a word with F(d) parameters over a one-letter alphabet.
PaCheck pa_check_graph(const LinOrderedGraph& d, const LinOrderedGraph& e, const Embedding& f, const ParameterWord& u);
PaCheck pa_check_poset(const LinOrderedPoset& d, const LinOrderedPoset& e, const Embedding& f, const ParameterWord& u);
/// f : e -> d; u : F(d) -> target.
PaCheck pa_check_ultra(const ConvUltrametricSpace& d, const ConvUltrametricSpace& e, const Embedding& f,
                       const LinOrderedPoset& target, const Embedding& u);
PaCheck pa_check_metric(const LinOrderedMetricSpace& d, const LinOrderedMetricSpace& e, const Embedding& f,
                        const LinOrderedPoset& target, const Embedding& u);

struct PaTrial
{
    int index = 0;
    std::uint64_t seed = 0;
    std::string instance;
    PaCheck check;
};

struct PaReport
{
    StructureKind kind = StructureKind::graph;
    std::uint64_t seed = 0;
    int trials = 0;
    int phi_failures = 0;
    int witness_failures = 0;
    int equation_failures = 0;
    /// Failing trials only; each reproduces from its own seed.
    std::vector<PaTrial> failures;

    bool passed() const { return phi_failures == 0 && witness_failures == 0 && equation_failures == 0; }
};

/// Random f : e -> d and random u per trial. Throws DomainError if e does not embed into d.
PaReport pa_harness(const OrderedStructure& d, const OrderedStructure& e, int trials, std::uint64_t seed);

struct RandomSuiteLimits
{
    /// Largest structure size; zero means 5, or 4 for metric spaces.
    int max_size = 0;
    /// Largest declared spectrum size for the distance kinds.
    int max_spectrum = 4;
};

/// Random d, a random induced e, random f and u per trial.
PaReport pa_random_suite(StructureKind kind, int trials, std::uint64_t seed, RandomSuiteLimits limits = {});

/// A single trial of pa_random_suite, rebuilt from its seed.
PaTrial pa_random_trial(StructureKind kind, std::uint64_t trial_seed, RandomSuiteLimits limits = {});

/// The premise arrow was refused; carries the bad coloring that refutes it.
class PremiseFailure : public DomainError
{
public:
    PremiseFailure(const std::string& what, std::vector<int> coloring)
        : DomainError(what), coloring_(std::move(coloring))
    {}
    const std::vector<int>& coloring() const noexcept { return coloring_; }

private:
    std::vector<int> coloring_;
};

enum class ColoringMode { random, constant };

struct TransferOptions
{
    int colors = 2;
    ColoringMode mode = ColoringMode::random;
    std::uint64_t seed = 0;
    /// Graph/poset: fixed word length N instead of probing upward.
    std::optional<int> length;
    /// Graph/poset: probing stops after this length.
    int max_length = 12;
    /// Ultrametric/metric: the poset C; defaults to F(d).
    std::optional<LinOrderedPoset> target;
};

struct TransferStep
{
    std::string image;
    int color = 0;
    bool embedding = false;
};

struct TransferReport
{
    StructureKind kind = StructureKind::graph;
    std::string ramsey_object;
    ArrowVerdict premise;
    std::string u;
    int color = 0;
    std::vector<std::string> phi_u;
    /// Φ(u) ∘ f for every f : e -> d, with the pulled-back color.
    std::vector<TransferStep> images;
    bool verified = false;
};

/// Colors hom(e, G(C)) (hashed or constant), pulls the coloring back along Φ,
/// finds the monochromatic u guaranteed by the premise, and re-checks that
/// Φ(u) ∘ hom(e, d) is monochromatic.
TransferReport transfer_demo(const OrderedStructure& d, const OrderedStructure& e, const TransferOptions& options,
                             const Budget& budget);

std::string format_subset(const Subset& s);
std::string format_power_set_map(const PowerSetMap& m, std::size_t i);
std::string format_tuple(const LinOrderedPoset& a, const TuplePoint& t);

} // namespace preadj
