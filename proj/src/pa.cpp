#include "preadj/pa.hpp"

#include <algorithm>

#include "preadj/generators.hpp"

namespace preadj {

std::string format_subset(const Subset& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string format_power_set_map(const PowerSetMap& m, std::size_t i)
{
    return format_subset(m.images.at(i));
}

std::string format_tuple(const LinOrderedPoset& a, const TuplePoint& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + std::to_string(a.order.label(t[i]));
    return out + ")";
}

namespace {

std::string format_map(const std::vector<int>& map)
{
    std::string out = "[";
    for (std::size_t i = 0; i < map.size(); ++i)
        out += (i ? "," : "") + std::to_string(map[i]);
    return out + "]";
}

std::vector<std::string> render(const PowerSetMap& m)
{
    std::vector<std::string> out;
    for (const auto& s : m.images)
        out.push_back(format_subset(s));
    return out;
}

std::vector<std::string> render(const LinOrderedPoset& a, const TupleMap& m)
{
    std::vector<std::string> out;
    for (const auto& t : m.images)
        out.push_back(format_tuple(a, t));
    return out;
}

void fail(PaCheck& c, bool PaCheck::*clause, const std::string& why)
{
    c.*clause = false;
    if (!c.detail.empty())
        c.detail += "; ";
    c.detail += why;
}

void check_phi(PaCheck& c, const std::optional<std::string>& defect, const char* which)
{
    if (defect)
        fail(c, &PaCheck::phi_ok, std::string(which) + ": " + *defect);
}

} // namespace

PaCheck pa_check_graph(const LinOrderedGraph& d, const LinOrderedGraph& e, const Embedding& f, const ParameterWord& u)
{
    check_embedding(f.map, e, d);
    PaCheck c;
    const GraphEncoding enc_d = encode_graph(d);
    const PowerSetMap phi_u = graph_map(enc_d, u);
    check_phi(c, graph_embedding_defect(d, phi_u), "Φ(u)");
    const PowerSetMap lhs = compose(phi_u, f);
    c.lhs = render(lhs);
    std::optional<GraphWitness> w;
    try {
        w = witness_graph(d, e, f, u);
    } catch (const DomainError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
    } catch (const ConstructionError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
    }
    if (!w) {
        c.equation_ok = false;
        return c;
    }
    c.witness = w->h.to_string();
    const ParameterWord uh = compose(u, w->h);
    const PowerSetMap rhs = graph_map(encode_graph(e), uh);
    check_phi(c, graph_embedding_defect(e, rhs), "Φ(u·h)");
    c.rhs = render(rhs);
    if (lhs != rhs)
        fail(c, &PaCheck::equation_ok, "Φ(u)∘f differs from Φ(u·h)");
    return c;
}

PaCheck pa_check_poset(const LinOrderedPoset& d, const LinOrderedPoset& e, const Embedding& f, const ParameterWord& u)
{
    check_embedding(f.map, e, d);
    PaCheck c;
    const PosetEncoding enc_d = encode_poset(d);
    const PowerSetMap phi_u = poset_map(enc_d, u);
    check_phi(c, poset_embedding_defect(d, phi_u), "Φ(u)");
    const PowerSetMap lhs = compose(phi_u, f);
    c.lhs = render(lhs);
    std::optional<ParameterWord> h;
    try {
        h = witness_poset(d, e, f, u);
    } catch (const DomainError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
    } catch (const ConstructionError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
    }
    if (!h) {
        c.equation_ok = false;
        return c;
    }
    c.witness = h->to_string();
    const PowerSetMap rhs = poset_map(encode_poset(e), compose(u, *h));
    check_phi(c, poset_embedding_defect(e, rhs), "Φ(u·h)");
    c.rhs = render(rhs);
    if (lhs != rhs)
        fail(c, &PaCheck::equation_ok, "Φ(u)∘f differs from Φ(u·h)");
    return c;
}

namespace {

template <class Space, class Enc, class MapFn, class DefectFn, class WitnessFn>
PaCheck pa_check_tuples(const Space& d, const Space& e, const Embedding& f, const LinOrderedPoset& target,
                        const Embedding& u, const Enc& enc_d, const Enc& enc_e, const LinOrderedPoset& fd,
                        const LinOrderedPoset& fe, MapFn map_fn, DefectFn defect_fn, WitnessFn witness_fn)
{
    check_embedding(f.map, e, d);
    check_embedding(u.map, fd, target);
    PaCheck c;
    const TupleMap phi_u = map_fn(enc_d, u);
    check_phi(c, defect_fn(d, target, phi_u), "Φ(u)");
    const TupleMap lhs = compose(phi_u, f);
    c.lhs = render(target, lhs);
    std::optional<Embedding> v;
    try {
        v = witness_fn(d, e, f);
        check_embedding(v->map, fe, fd);
    } catch (const DomainError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
        v.reset();
    } catch (const ConstructionError& ex) {
        fail(c, &PaCheck::witness_ok, std::string("witness: ") + ex.what());
        v.reset();
    }
    if (!v) {
        c.equation_ok = false;
        return c;
    }
    c.witness = format_map(v->map);
    const TupleMap rhs = map_fn(enc_e, compose(u, *v));
    check_phi(c, defect_fn(e, target, rhs), "Φ(u∘v)");
    c.rhs = render(target, rhs);
    if (lhs != rhs)
        fail(c, &PaCheck::equation_ok, "Φ(u)∘f differs from Φ(u∘v)");
    return c;
}

} // namespace

PaCheck pa_check_ultra(const ConvUltrametricSpace& d, const ConvUltrametricSpace& e, const Embedding& f,
                       const LinOrderedPoset& target, const Embedding& u)
{
    const BallPoset enc_d = encode_ultrametric(d);
    const BallPoset enc_e = encode_ultrametric(e);
    return pa_check_tuples(d, e, f, target, u, enc_d, enc_e, enc_d.poset, enc_e.poset, ultra_map,
                           ultra_embedding_defect, witness_ultra);
}

PaCheck pa_check_metric(const LinOrderedMetricSpace& d, const LinOrderedMetricSpace& e, const Embedding& f,
                        const LinOrderedPoset& target, const Embedding& u)
{
    const MetricEncoding enc_d = encode_metric(d);
    const MetricEncoding enc_e = encode_metric(e);
    return pa_check_tuples(d, e, f, target, u, enc_d, enc_e, enc_d.poset, enc_e.poset, metric_map,
                           metric_embedding_defect, witness_metric);
}

namespace {

constexpr std::uint64_t kTargetEmbeddingCap = 5000;

template <class S>
Embedding random_embedding(Rng& rng, const S& src, const S& tgt, std::uint64_t cap = kTargetEmbeddingCap)
{
    EmbeddingEnumerator<S> en(src, tgt);
    std::vector<Embedding> all;
    while (all.size() < cap) {
        auto f = en.next();
        if (!f)
            break;
        all.push_back(std::move(*f));
    }
    if (all.empty())
        throw DomainError("the smaller structure does not embed into the larger one");
    return pick(rng, all);
}

std::string describe(const OrderedStructure& s)
{
    std::string out = std::string(to_string(kind_of(s))) + " n=" + std::to_string(structure_size(s));
    std::visit(
        [&](const auto& x) {
            using S = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<S, LinOrderedGraph>) {
                out += " edges=";
                for (auto [a, b] : x.edges())
                    out += "{" + std::to_string(x.order.label(a)) + "," + std::to_string(x.order.label(b)) + "}";
            } else if constexpr (std::is_same_v<S, LinOrderedPoset>) {
                out += " leq=";
                for (int a = 0; a < x.size(); ++a)
                    for (int b = 0; b < x.size(); ++b)
                        if (a != b && x.below(a, b))
                            out += "(" + std::to_string(x.order.label(a)) + "," + std::to_string(x.order.label(b)) + ")";
            } else {
                out += " S=" + format_rational_list(x.spectrum) + " d=";
                for (int a = 0; a < x.size(); ++a)
                    for (int b = a + 1; b < x.size(); ++b)
                        out += "(" + std::to_string(x.order.label(a)) + "," + std::to_string(x.order.label(b)) + ":" +
                               format_rational(x.d(a, b)) + ")";
            }
        },
        s);
    return out;
}

// One randomized (f, u) for the fixed pair (d, e).
PaTrial run_trial(const OrderedStructure& d_any, const OrderedStructure& e_any, Rng& rng)
{
    PaTrial t;
    std::visit(
        [&](const auto& d) {
            using S = std::decay_t<decltype(d)>;
            const S& e = std::get<S>(e_any);
            const Embedding f = random_embedding(rng, e, d, UINT64_MAX);
            t.instance = "D: " + describe(d_any) + "; E: " + describe(e_any) + "; f=" + format_map(f.map);
            if constexpr (std::is_same_v<S, LinOrderedGraph> || std::is_same_v<S, LinOrderedPoset>) {
                int m = 0;
                if constexpr (std::is_same_v<S, LinOrderedGraph>)
                    m = encode_graph(d).object;
                else
                    m = encode_poset(d).object;
                const ParameterWord u = random_word(rng, zero_alphabet(), m + uniform_int(rng, 0, 3), m);
                t.instance += "; u=" + u.to_string();
                if constexpr (std::is_same_v<S, LinOrderedGraph>)
                    t.check = pa_check_graph(d, e, f, u);
                else
                    t.check = pa_check_poset(d, e, f, u);
            } else {
                LinOrderedPoset fd;
                if constexpr (std::is_same_v<S, ConvUltrametricSpace>)
                    fd = encode_ultrametric(d).poset;
                else
                    fd = encode_metric(d).poset;
                Embedding inclusion;
                const LinOrderedPoset target = random_superposet(rng, fd, uniform_int(rng, 0, 2), inclusion);
                const Embedding u = random_embedding(rng, fd, target);
                t.instance += "; target: " + describe(target) + "; u=" + format_map(u.map);
                if constexpr (std::is_same_v<S, ConvUltrametricSpace>)
                    t.check = pa_check_ultra(d, e, f, target, u);
                else
                    t.check = pa_check_metric(d, e, f, target, u);
            }
        },
        d_any);
    return t;
}

void tally(PaReport& r, PaTrial&& t)
{
    r.phi_failures += t.check.phi_ok ? 0 : 1;
    r.witness_failures += t.check.witness_ok ? 0 : 1;
    r.equation_failures += t.check.equation_ok ? 0 : 1;
    if (!t.check.passed())
        r.failures.push_back(std::move(t));
}

OrderedStructure random_structure(StructureKind kind, Rng& rng, const RandomSuiteLimits& limits)
{
    switch (kind) {
    case StructureKind::graph:
        return random_graph(rng, uniform_int(rng, 1, limits.max_size));
    case StructureKind::poset:
        return random_poset(rng, uniform_int(rng, 1, limits.max_size));
    case StructureKind::ultrametric: {
        const auto s = random_spectrum(rng, uniform_int(rng, 2, limits.max_spectrum));
        return random_ultrametric(rng, uniform_int(rng, 1, limits.max_size), s);
    }
    case StructureKind::metric: {
        const auto s = random_tight_spectrum(rng, uniform_int(rng, 2, limits.max_spectrum));
        return random_metric(rng, uniform_int(rng, 1, limits.max_size), s);
    }
    }
    throw DomainError("unknown structure kind");
}

} // namespace

PaReport pa_harness(const OrderedStructure& d, const OrderedStructure& e, int trials, std::uint64_t seed)
{
    if (d.index() != e.index())
        throw DomainError("both structures must have the same kind");
    validate_structure(d);
    validate_structure(e);
    std::visit(
        [&](const auto& x) {
            using S = std::decay_t<decltype(x)>;
            if constexpr (std::is_base_of_v<DistanceData, S>)
                if (x.spectrum != std::get<S>(e).spectrum)
                    throw DomainError("both spaces must declare the same spectrum");
        },
        d);
    PaReport r{kind_of(d), seed, trials, 0, 0, 0, {}};
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(s);
        PaTrial t = run_trial(d, e, rng);
        t.index = i;
        t.seed = s;
        tally(r, std::move(t));
    }
    return r;
}

PaTrial pa_random_trial(StructureKind kind, std::uint64_t trial_seed, RandomSuiteLimits limits)
{
    if (limits.max_size <= 0)
        limits.max_size = kind == StructureKind::metric ? 4 : 5;
    Rng rng(trial_seed);
    const OrderedStructure d = random_structure(kind, rng, limits);
    const OrderedStructure e = std::visit(
        [&](const auto& x) -> OrderedStructure { return induced(x, random_nonempty_subset(rng, x.size())); }, d);
    PaTrial t = run_trial(d, e, rng);
    t.seed = trial_seed;
    return t;
}

PaReport pa_random_suite(StructureKind kind, int trials, std::uint64_t seed, RandomSuiteLimits limits)
{
    PaReport r{kind, seed, trials, 0, 0, 0, {}};
    for (int i = 0; i < trials; ++i) {
        PaTrial t = pa_random_trial(kind, mix_seed(seed, static_cast<std::uint64_t>(i)), limits);
        t.index = i;
        tally(r, std::move(t));
    }
    return r;
}

namespace {

// FNV-1a over the rendered morphism, keyed by the seed: stable across platforms.
int hashed_color(const std::string& text, std::uint64_t seed, int k)
{
    std::uint64_t h = 0xcbf29ce484222325ull ^ mix_seed(seed, 0);
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return static_cast<int>(mix_seed(h, 1) % static_cast<std::uint64_t>(k)) + 1;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " " : "") + parts[i];
    return out;
}

struct Colorer
{
    const TransferOptions& options;
    int operator()(const std::vector<std::string>& image) const
    {
        return options.mode == ColoringMode::constant ? 1 : hashed_color(join(image), options.seed, options.colors);
    }
};

template <class S>
TransferReport transfer_words(const S& d, const S& e, const TransferOptions& opt, const Budget& budget)
{
    auto object = [](const S& x) {
        if constexpr (std::is_same_v<S, LinOrderedGraph>)
            return encode_graph(x).object;
        else
            return encode_poset(x).object;
    };
    auto image = [](const S& x, const ParameterWord& w) {
        if constexpr (std::is_same_v<S, LinOrderedGraph>)
            return graph_map(encode_graph(x), w);
        else
            return poset_map(encode_poset(x), w);
    };
    auto defect = [](const S& x, const PowerSetMap& m) {
        if constexpr (std::is_same_v<S, LinOrderedGraph>)
            return graph_embedding_defect(x, m);
        else
            return poset_embedding_defect(x, m);
    };
    const int m = object(d);
    const int ell = object(e);
    const auto alphabet = zero_alphabet();

    TransferReport r;
    r.kind = kind_of(d);
    int n = opt.length.value_or(m);
    while (true) {
        r.premise = decide_gr(alphabet, n, m, ell, opt.colors, budget);
        if (r.premise.holds)
            break;
        if (opt.length || n >= opt.max_length)
            throw PremiseFailure("W^" + std::to_string(n) + " does not arrow: some " + std::to_string(opt.colors) +
                                     "-coloring of the " + std::to_string(ell) + "-parameter words has no " +
                                     "monochromatic " + std::to_string(m) + "-parameter subword space",
                                 r.premise.bad_coloring.value_or(std::vector<int>{}));
        ++n;
    }
    r.ramsey_object = "N=" + std::to_string(n);

    const auto problem = build_arrow(GrCategory{alphabet}, ell, m, n, opt.colors, budget);
    const Colorer colorer{opt};
    std::vector<int> pulled;
    for (const auto& v : problem.hom_ac)
        pulled.push_back(colorer(render(image(e, v))));
    const ColoringCheck found = check_coloring(problem.table, pulled);
    if (!found.w)
        throw ConstructionError("premise holds but the pulled-back coloring has no monochromatic u");
    const ParameterWord& u = problem.hom_bc[static_cast<std::size_t>(*found.w)];
    r.u = u.to_string();
    r.color = found.color;
    const PowerSetMap phi_u = image(d, u);
    r.phi_u = render(phi_u);
    r.verified = !defect(d, phi_u).has_value();
    for (const auto& f : enumerate_embeddings(e, d, budget.max_hom)) {
        const PowerSetMap img = compose(phi_u, f);
        TransferStep step{join(render(img)), colorer(render(img)), !defect(e, img).has_value()};
        r.verified = r.verified && step.embedding && (found.color == 0 || step.color == found.color);
        r.images.push_back(std::move(step));
    }
    return r;
}

template <class S>
TransferReport transfer_tuples(const S& d, const S& e, const TransferOptions& opt, const Budget& budget)
{
    auto encode = [](const S& x) {
        if constexpr (std::is_same_v<S, ConvUltrametricSpace>)
            return encode_ultrametric(x);
        else
            return encode_metric(x);
    };
    auto image = [](const auto& enc, const Embedding& w) {
        if constexpr (std::is_same_v<S, ConvUltrametricSpace>)
            return ultra_map(enc, w);
        else
            return metric_map(enc, w);
    };
    auto defect = [](const S& x, const LinOrderedPoset& a, const TupleMap& m) {
        if constexpr (std::is_same_v<S, ConvUltrametricSpace>)
            return ultra_embedding_defect(x, a, m);
        else
            return metric_embedding_defect(x, a, m);
    };
    const auto enc_d = encode(d);
    const auto enc_e = encode(e);
    const LinOrderedPoset target = opt.target.value_or(enc_d.poset);
    validate_structure(target);

    TransferReport r;
    r.kind = kind_of(d);
    r.ramsey_object = "C with " + std::to_string(target.size()) + " elements";
    const auto problem =
        build_arrow(StructureCategory<LinOrderedPoset>{}, enc_e.poset, enc_d.poset, target, opt.colors, budget);
    r.premise = decide_arrow(problem, budget);
    if (!r.premise.holds)
        throw PremiseFailure("the target poset does not arrow F(D) for F(E)", *r.premise.bad_coloring);

    const Colorer colorer{opt};
    std::vector<int> pulled;
    for (const auto& v : problem.hom_ac)
        pulled.push_back(colorer(render(target, image(enc_e, v))));
    const ColoringCheck found = check_coloring(problem.table, pulled);
    if (!found.w)
        throw ConstructionError("premise holds but the pulled-back coloring has no monochromatic u");
    const Embedding& u = problem.hom_bc[static_cast<std::size_t>(*found.w)];
    r.u = format_map(u.map);
    r.color = found.color;
    const TupleMap phi_u = image(enc_d, u);
    r.phi_u = render(target, phi_u);
    r.verified = !defect(d, target, phi_u).has_value();
    for (const auto& f : enumerate_embeddings(e, d, budget.max_hom)) {
        const TupleMap img = compose(phi_u, f);
        TransferStep step{join(render(target, img)), colorer(render(target, img)),
                          !defect(e, target, img).has_value()};
        r.verified = r.verified && step.embedding && (found.color == 0 || step.color == found.color);
        r.images.push_back(std::move(step));
    }
    return r;
}

} // namespace

TransferReport transfer_demo(const OrderedStructure& d, const OrderedStructure& e, const TransferOptions& options,
                             const Budget& budget)
{
    if (d.index() != e.index())
        throw DomainError("both structures must have the same kind");
    if (options.colors < 2)
        throw DomainError("the number of colors must be at least 2");
    return std::visit(
        [&](const auto& x) -> TransferReport {
            using S = std::decay_t<decltype(x)>;
            const S& y = std::get<S>(e);
            if (enumerate_embeddings(y, x, budget.max_hom).empty())
                throw DomainError("E does not embed into D");
            if constexpr (std::is_same_v<S, LinOrderedGraph> || std::is_same_v<S, LinOrderedPoset>)
                return transfer_words(x, y, options, budget);
            else
                return transfer_tuples(x, y, options, budget);
        },
        d);
}

} // namespace preadj
