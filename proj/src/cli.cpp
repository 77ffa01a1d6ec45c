#include "preadj/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "preadj/fixture.hpp"
#include "preadj/generators.hpp"
#include "preadj/graph.hpp"
#include "preadj/json_io.hpp"
#include "preadj/metric.hpp"
#include "preadj/oracle.hpp"
#include "preadj/pa.hpp"
#include "preadj/poset.hpp"
#include "preadj/ultrametric.hpp"

namespace preadj {

namespace {

using Clock = std::chrono::steady_clock;

struct Globals
{
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t budget_colorings = Budget{}.max_colorings;
    std::uint64_t budget_hom = Budget{}.max_hom;
    unsigned threads = 1;
    std::int64_t budget_ms = 0;
    bool timing = false;
};

struct Ctx
{
    Globals g;
    std::ostream& out;
    Clock::time_point start = Clock::now();

    bool json() const { return g.format == "json"; }

    Budget budget() const
    {
        Budget b;
        b.max_colorings = g.budget_colorings;
        b.max_hom = g.budget_hom;
        b.threads = g.threads;
        b.wall = std::chrono::milliseconds(g.budget_ms);
        return b;
    }

    Json wall_time() const
    {
        if (!g.timing)
            return nullptr;
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    void emit(const Json& j, const std::string& text) const
    {
        if (json())
            out << j.dump(2) << "\n";
        else
            out << text;
    }
};

class UsageError : public DomainError
{
public:
    using DomainError::DomainError;
};

std::string trim(std::string s)
{
    const auto ws = " \t\r\n";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
}

/// A path to an existing file is read; anything else is taken literally.
std::string text_or_file(const std::string& arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return trim(read_file(arg));
    return trim(arg);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text_or_file(text));
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("malformed " + what + " entry '" + item + "'");
        }
    }
    return out;
}

AlphabetPtr alphabet_of(const std::string& list)
{
    return std::make_shared<const Alphabet>(Alphabet::parse_list(list));
}

ParameterWord word_arg(const std::string& arg, const AlphabetPtr& alphabet)
{
    return ParameterWord::parse(text_or_file(arg), alphabet);
}

template <class S>
const S& as_kind(const OrderedStructure& s, const std::string& what)
{
    if (!std::holds_alternative<S>(s))
        throw DomainError(what + " must be a " + std::string(to_string(kind_of(S{}))) + ", got a " +
                          std::string(to_string(kind_of(s))));
    return std::get<S>(s);
}

std::string labels_text(const BaseOrder& order, const Subset& ranks)
{
    return format_subset(order.labels_of(ranks));
}

/// Source rank i -> target label list, converted to target ranks.
Embedding map_arg(const std::string& arg, int source_size, const BaseOrder& target)
{
    const auto labels = parse_int_list(arg, "map");
    if (static_cast<int>(labels.size()) != source_size)
        throw DomainError("map lists " + std::to_string(labels.size()) + " images for " +
                          std::to_string(source_size) + " elements");
    Embedding e;
    for (int l : labels)
        e.map.push_back(target.rank(l));
    return e;
}

Json map_json(const Embedding& e, const BaseOrder& target)
{
    Json j = Json::array();
    for (int r : e.map)
        j.push_back(target.label(r));
    return j;
}

std::string map_text(const Embedding& e, const BaseOrder& source, const BaseOrder& target)
{
    std::string out;
    for (int i = 0; i < e.size(); ++i)
        out += (i ? " " : "") + std::to_string(source.label(i)) + "->" + std::to_string(target.label(e(i)));
    return out;
}

std::string ball_text(const DistanceData& space, const Ball& b)
{
    return "(" + labels_text(space.order, b.points) + "," + format_rational(space.spectrum[static_cast<std::size_t>(b.radius)]) + ")";
}

Json rationals_json(std::span<const Rational> values)
{
    Json j = Json::array();
    for (const auto& v : values)
        j.push_back(format_rational(v));
    return j;
}

Json levelpoint_json(const MetricEncoding& enc, int rank)
{
    const LevelPoint p = enc.level_point(rank);
    return Json{{"point", enc.space.order.label(p.point)}, {"level", p.level}};
}

// ---------------------------------------------------------------- word

void cmd_word_validate(Ctx& c, const std::string& alphabet, const std::string& word, std::optional<int> params)
{
    const auto a = alphabet_of(alphabet);
    const std::string text = text_or_file(word);
    const ParameterWord w = ParameterWord::parse(text, a, params);
    c.emit(Json{{"valid", true}, {"word", w.to_string()}, {"length", w.length()}, {"parameters", w.parameters()}},
           "valid: length " + std::to_string(w.length()) + ", " + std::to_string(w.parameters()) + " parameters\n");
}

void cmd_word_compose(Ctx& c, const std::string& alphabet, const std::string& u, const std::string& v)
{
    const auto a = alphabet_of(alphabet);
    const ParameterWord uv = compose(word_arg(u, a), word_arg(v, a));
    c.emit(Json{{"word", uv.to_string()}, {"length", uv.length()}, {"parameters", uv.parameters()}},
           uv.to_string() + "\n");
}

void cmd_word_enumerate(Ctx& c, const std::string& alphabet, int n, int m)
{
    const auto words = enumerate_words(alphabet_of(alphabet), n, m, c.g.budget_hom);
    Json list = Json::array();
    std::string text;
    for (const auto& w : words) {
        list.push_back(w.to_string());
        text += w.to_string() + "\n";
    }
    c.emit(Json{{"length", n}, {"parameters", m}, {"count", words.size()}, {"words", list}},
           text + "count: " + std::to_string(words.size()) + "\n");
}

// ---------------------------------------------------------------- structure

void cmd_structure_validate(Ctx& c, const std::string& file)
{
    const OrderedStructure s = load_structure(file);
    const ValidationReport r = validate_structure(s);
    Json j{{"valid", true}, {"kind", std::string(to_string(r.kind))}, {"size", r.size}};
    std::string text = "valid " + std::string(to_string(r.kind)) + " with " + std::to_string(r.size) + " elements\n";
    if (r.kind == StructureKind::ultrametric || r.kind == StructureKind::metric) {
        j["attained_spectrum"] = rationals_json(r.attained_spectrum);
        text += "attained spectrum: " + format_rational_list(r.attained_spectrum) + "\n";
    }
    j["canonical"] = structure_to_json(s);
    c.emit(j, text);
}

void cmd_structure_embeddings(Ctx& c, const std::string& src_file, const std::string& tgt_file)
{
    const OrderedStructure src = load_structure(src_file);
    const OrderedStructure tgt = load_structure(tgt_file);
    if (src.index() != tgt.index())
        throw DomainError("source and target must have the same kind");
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            const S& t = std::get<S>(tgt);
            const auto all = enumerate_embeddings(s, t, c.g.budget_hom);
            Json list = Json::array();
            std::string text;
            for (const auto& e : all) {
                list.push_back(map_json(e, t.order));
                text += map_text(e, s.order, t.order) + "\n";
            }
            c.emit(Json{{"count", all.size()}, {"embeddings", list}},
                   text + "count: " + std::to_string(all.size()) + "\n");
        },
        src);
}

// ---------------------------------------------------------------- encode

void cmd_encode(Ctx& c, StructureKind kind, const std::string& file)
{
    const OrderedStructure s = load_structure(file);
    switch (kind) {
    case StructureKind::graph: {
        const auto& g = as_kind<LinOrderedGraph>(s, "the input");
        const GraphEncoding enc = encode_graph(g);
        Json edges = Json::array();
        std::string text = "object: " + std::to_string(enc.object) + "\nedges:";
        for (auto [a, b] : enc.edges) {
            edges.push_back({g.order.label(a), g.order.label(b)});
            text += " " + labels_text(g.order, {a, b});
        }
        c.emit(Json{{"object", enc.object}, {"vertices", g.size()}, {"edges", edges}}, text + "\n");
        return;
    }
    case StructureKind::poset: {
        const auto& p = as_kind<LinOrderedPoset>(s, "the input");
        const PosetEncoding enc = encode_poset(p);
        Json ds = Json::array();
        std::string text = "object: " + std::to_string(enc.object) + "\ndownsets:";
        for (const auto& d : enc.downsets) {
            ds.push_back(p.order.labels_of(d));
            text += " " + labels_text(p.order, d);
        }
        c.emit(Json{{"object", enc.object}, {"downsets", ds}}, text + "\n");
        return;
    }
    case StructureKind::ultrametric: {
        const auto& u = as_kind<ConvUltrametricSpace>(s, "the input");
        const BallPoset enc = encode_ultrametric(u);
        Json bs = Json::array();
        std::string text = "balls: " + std::to_string(enc.balls.size()) + "\n";
        for (std::size_t i = 0; i < enc.balls.size(); ++i) {
            const Ball& b = enc.balls[i];
            bs.push_back(Json{{"label", i + 1},
                              {"points", u.order.labels_of(b.points)},
                              {"radius", format_rational(u.spectrum[static_cast<std::size_t>(b.radius)])}});
            text += std::to_string(i + 1) + ": " + ball_text(u, b) + "\n";
        }
        const Json poset = structure_to_json(enc.poset);
        c.emit(Json{{"balls", bs}, {"poset", poset}}, text + "poset: " + poset.dump() + "\n");
        return;
    }
    case StructureKind::metric: {
        const auto& m = as_kind<LinOrderedMetricSpace>(s, "the input");
        const MetricEncoding enc = encode_metric(m);
        Json pts = Json::array();
        std::string text = "level points: " + std::to_string(enc.poset.size()) +
                           (enc.tight ? " (spectrum tight)" : " (spectrum not tight)") + "\n";
        for (int r = 0; r < enc.poset.size(); ++r) {
            const LevelPoint p = enc.level_point(r);
            pts.push_back(levelpoint_json(enc, r));
            text += std::to_string(r + 1) + ": (" + std::to_string(m.order.label(p.point)) + "," +
                    std::to_string(p.level) + ")\n";
        }
        const Json poset = structure_to_json(enc.poset);
        c.emit(Json{{"tight", enc.tight}, {"level_points", pts}, {"poset", poset}},
               text + "poset: " + poset.dump() + "\n");
        return;
    }
    }
}

// ---------------------------------------------------------------- phi / witness

struct TupleTarget
{
    LinOrderedPoset poset;
    Embedding u;
};

TupleTarget tuple_target(const LinOrderedPoset& encoded, const std::string& target_file, const std::string& u_arg)
{
    TupleTarget t{encoded, identity_embedding(encoded.size())};
    if (!target_file.empty())
        t.poset = as_kind<LinOrderedPoset>(load_structure(target_file), "--target");
    if (!u_arg.empty())
        t.u = map_arg(u_arg, encoded.size(), t.poset.order);
    else if (!target_file.empty() && !(t.poset == encoded))
        throw UsageError("--u is required with --target");
    return t;
}

Json tuples_json(const LinOrderedPoset& a, const TupleMap& m)
{
    Json j = Json::array();
    for (const auto& t : m.images) {
        Json row = Json::array();
        for (int e : t)
            row.push_back(a.order.label(e));
        j.push_back(std::move(row));
    }
    return j;
}

void cmd_phi(Ctx& c, StructureKind kind, const std::string& file, const std::string& u_arg, const std::string& target)
{
    const OrderedStructure s = load_structure(file);
    Json images = Json::array();
    std::string text;
    auto sets = [&](const BaseOrder& order, const PowerSetMap& m) {
        for (std::size_t i = 0; i < m.images.size(); ++i) {
            images.push_back(m.images[i]);
            text += std::to_string(order.label(static_cast<int>(i))) + " -> " + format_subset(m.images[i]) + "\n";
        }
        c.emit(Json{{"universe", m.universe}, {"images", images}}, text);
    };
    auto tuples = [&](const BaseOrder& order, const LinOrderedPoset& a, const TupleMap& m) {
        for (std::size_t i = 0; i < m.images.size(); ++i)
            text += std::to_string(order.label(static_cast<int>(i))) + " -> " + format_tuple(a, m.images[i]) + "\n";
        c.emit(Json{{"images", tuples_json(a, m)}}, text);
    };
    switch (kind) {
    case StructureKind::graph:
        if (u_arg.empty())
            throw UsageError("--u is required");
        sets(as_kind<LinOrderedGraph>(s, "the input").order,
             phi_graph(as_kind<LinOrderedGraph>(s, "the input"), word_arg(u_arg, zero_alphabet())));
        return;
    case StructureKind::poset:
        if (u_arg.empty())
            throw UsageError("--u is required");
        sets(as_kind<LinOrderedPoset>(s, "the input").order,
             phi_poset(as_kind<LinOrderedPoset>(s, "the input"), word_arg(u_arg, zero_alphabet())));
        return;
    case StructureKind::ultrametric: {
        const auto& u = as_kind<ConvUltrametricSpace>(s, "the input");
        const TupleTarget t = tuple_target(encode_ultrametric(u).poset, target, u_arg);
        tuples(u.order, t.poset, phi_ultra(u, t.poset, t.u));
        return;
    }
    case StructureKind::metric: {
        const auto& m = as_kind<LinOrderedMetricSpace>(s, "the input");
        const TupleTarget t = tuple_target(encode_metric(m).poset, target, u_arg);
        tuples(m.order, t.poset, phi_metric(m, t.poset, t.u));
        return;
    }
    }
}

void cmd_witness(Ctx& c, StructureKind kind, const std::string& d_file, const std::string& e_file,
                 const std::string& f_arg, const std::string& u_arg)
{
    const OrderedStructure d_any = load_structure(d_file);
    const OrderedStructure e_any = load_structure(e_file);
    switch (kind) {
    case StructureKind::graph: {
        const auto& d = as_kind<LinOrderedGraph>(d_any, "--D");
        const auto& e = as_kind<LinOrderedGraph>(e_any, "--E");
        if (u_arg.empty())
            throw UsageError("--u is required");
        const GraphWitness w = witness_graph(d, e, map_arg(f_arg, e.size(), d.order), word_arg(u_arg, zero_alphabet()));
        Json parts = Json::array();
        std::string text = "h: " + w.h.to_string() + "\n";
        for (std::size_t i = 0; i < w.parts.size(); ++i) {
            parts.push_back(w.parts[i]);
            text += "X'_" + std::to_string(i + 1) + " = " + format_subset(w.parts[i]) + "\n";
        }
        c.emit(Json{{"h", w.h.to_string()}, {"parts", parts}}, text);
        return;
    }
    case StructureKind::poset: {
        const auto& d = as_kind<LinOrderedPoset>(d_any, "--D");
        const auto& e = as_kind<LinOrderedPoset>(e_any, "--E");
        if (u_arg.empty())
            throw UsageError("--u is required");
        const ParameterWord h = witness_poset(d, e, map_arg(f_arg, e.size(), d.order), word_arg(u_arg, zero_alphabet()));
        c.emit(Json{{"h", h.to_string()}}, "h: " + h.to_string() + "\n");
        return;
    }
    case StructureKind::ultrametric: {
        const auto& d = as_kind<ConvUltrametricSpace>(d_any, "--D");
        const auto& e = as_kind<ConvUltrametricSpace>(e_any, "--E");
        const Embedding v = witness_ultra(d, e, map_arg(f_arg, e.size(), d.order));
        const BallPoset bd = encode_ultrametric(d);
        const BallPoset be = encode_ultrametric(e);
        Json j = Json::array();
        std::string text;
        for (int i = 0; i < v.size(); ++i) {
            j.push_back(v(i) + 1);
            text += ball_text(e, be.balls[static_cast<std::size_t>(i)]) + " -> " +
                    ball_text(d, bd.balls[static_cast<std::size_t>(v(i))]) + "\n";
        }
        c.emit(Json{{"v", j}}, text);
        return;
    }
    case StructureKind::metric: {
        const auto& d = as_kind<LinOrderedMetricSpace>(d_any, "--D");
        const auto& e = as_kind<LinOrderedMetricSpace>(e_any, "--E");
        const Embedding v = witness_metric(d, e, map_arg(f_arg, e.size(), d.order));
        const MetricEncoding ed = encode_metric(d);
        const MetricEncoding ee = encode_metric(e);
        Json j = Json::array();
        std::string text;
        for (int i = 0; i < v.size(); ++i) {
            j.push_back(v(i) + 1);
            const LevelPoint a = ee.level_point(i);
            const LevelPoint b = ed.level_point(v(i));
            text += "(" + std::to_string(e.order.label(a.point)) + "," + std::to_string(a.level) + ") -> (" +
                    std::to_string(d.order.label(b.point)) + "," + std::to_string(b.level) + ")\n";
        }
        c.emit(Json{{"v", j}}, text);
        return;
    }
    }
}

// ---------------------------------------------------------------- pa-check

Json pa_check_json(const PaCheck& p)
{
    return Json{{"phi_embedding", p.phi_ok},
                {"witness_valid", p.witness_ok},
                {"pa_equation", p.equation_ok},
                {"witness", p.witness},
                {"lhs", p.lhs},
                {"rhs", p.rhs},
                {"detail", p.detail}};
}

std::string pa_check_text(const PaCheck& p)
{
    auto yes = [](bool b) { return b ? std::string("pass") : std::string("FAIL"); };
    std::string text = "witness: " + p.witness + "\n";
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs)
            s += (s.empty() ? "" : " ") + x;
        return s;
    };
    text += "Φ(u)∘f:      " + join(p.lhs) + "\n";
    text += "Φ(u·witness): " + join(p.rhs) + "\n";
    text += "(i) Φ embedding: " + yes(p.phi_ok) + "\n(ii) witness valid: " + yes(p.witness_ok) +
            "\n(iii) PA equation: " + yes(p.equation_ok) + "\n";
    if (!p.detail.empty())
        text += "detail: " + p.detail + "\n";
    return text;
}

void emit_pa_report(Ctx& c, const PaReport& r, const std::string& mode)
{
    Json failures = Json::array();
    std::string text = std::string(to_string(r.kind)) + " " + mode + ": " + std::to_string(r.trials) +
                       " trials, seed " + std::to_string(r.seed) + "\n";
    for (const auto& t : r.failures) {
        failures.push_back(Json{{"trial", t.index}, {"seed", t.seed}, {"instance", t.instance}, {"check", pa_check_json(t.check)}});
        text += "trial " + std::to_string(t.index) + " (seed " + std::to_string(t.seed) + "): " + t.check.detail +
                "\n  " + t.instance + "\n";
    }
    text += "(i) Φ embedding failures: " + std::to_string(r.phi_failures) +
            "\n(ii) witness failures: " + std::to_string(r.witness_failures) +
            "\n(iii) PA equation failures: " + std::to_string(r.equation_failures) + "\n" +
            (r.passed() ? "all trials pass\n" : "FAILURES\n");
    c.emit(Json{{"instance", Json{{"kind", std::string(to_string(r.kind))}, {"mode", mode}, {"trials", r.trials}}},
                {"verdict", r.passed() ? "pass" : "fail"},
                {"counts", Json{{"phi_failures", r.phi_failures},
                                {"witness_failures", r.witness_failures},
                                {"equation_failures", r.equation_failures}}},
                {"failures", failures},
                {"seed", r.seed},
                {"wall_time_ms", c.wall_time()}},
           text);
}

struct PaArgs
{
    std::string d, e, f, u, target;
    bool random = false;
    int trials = 200;
};

void cmd_pa_check(Ctx& c, StructureKind kind, const PaArgs& a)
{
    if (a.random) {
        const PaReport r = pa_random_suite(kind, a.trials, c.g.seed);
        emit_pa_report(c, r, "random suite");
        if (!r.passed())
            throw DomainError("PA check failed on " + std::to_string(r.failures.size()) + " trials");
        return;
    }
    if (a.d.empty() || a.e.empty())
        throw UsageError("--D and --E are required unless --random is given");
    const OrderedStructure d_any = load_structure(a.d);
    const OrderedStructure e_any = load_structure(a.e);
    if (kind_of(d_any) != kind || kind_of(e_any) != kind)
        throw DomainError("--D and --E must both be " + std::string(to_string(kind)) + " structures");
    if (a.f.empty()) {
        const PaReport r = pa_harness(d_any, e_any, a.trials, c.g.seed);
        emit_pa_report(c, r, "harness");
        if (!r.passed())
            throw DomainError("PA check failed on " + std::to_string(r.failures.size()) + " trials");
        return;
    }
    PaCheck p;
    switch (kind) {
    case StructureKind::graph: {
        const auto& d = std::get<LinOrderedGraph>(d_any);
        const auto& e = std::get<LinOrderedGraph>(e_any);
        if (a.u.empty())
            throw UsageError("--u is required with --f");
        p = pa_check_graph(d, e, map_arg(a.f, e.size(), d.order), word_arg(a.u, zero_alphabet()));
        break;
    }
    case StructureKind::poset: {
        const auto& d = std::get<LinOrderedPoset>(d_any);
        const auto& e = std::get<LinOrderedPoset>(e_any);
        if (a.u.empty())
            throw UsageError("--u is required with --f");
        p = pa_check_poset(d, e, map_arg(a.f, e.size(), d.order), word_arg(a.u, zero_alphabet()));
        break;
    }
    case StructureKind::ultrametric: {
        const auto& d = std::get<ConvUltrametricSpace>(d_any);
        const auto& e = std::get<ConvUltrametricSpace>(e_any);
        const TupleTarget t = tuple_target(encode_ultrametric(d).poset, a.target, a.u);
        p = pa_check_ultra(d, e, map_arg(a.f, e.size(), d.order), t.poset, t.u);
        break;
    }
    case StructureKind::metric: {
        const auto& d = std::get<LinOrderedMetricSpace>(d_any);
        const auto& e = std::get<LinOrderedMetricSpace>(e_any);
        const TupleTarget t = tuple_target(encode_metric(d).poset, a.target, a.u);
        p = pa_check_metric(d, e, map_arg(a.f, e.size(), d.order), t.poset, t.u);
        break;
    }
    }
    Json j = pa_check_json(p);
    j["wall_time_ms"] = c.wall_time();
    c.emit(j, pa_check_text(p));
    if (!p.passed())
        throw DomainError("PA check failed: " + p.detail);
}

// ---------------------------------------------------------------- spectrum

void cmd_spectrum_check(Ctx& c, const std::string& values)
{
    const auto s = parse_rational_list(text_or_file(values));
    const bool tight = is_tight(s);
    Json j{{"values", rationals_json(s)}, {"tight", tight}};
    std::string text = tight ? "tight\n" : "not tight\n";
    if (!tight) {
        const int k = static_cast<int>(s.size()) - 1;
        for (int i = 1; i <= k; ++i)
            for (int jj = i; i + jj <= k; ++jj)
                if (s[static_cast<std::size_t>(i + jj)] > s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(jj)]) {
                    j["violation"] = Json{{"i", i}, {"j", jj}};
                    text += "s_" + std::to_string(i + jj) + " = " + format_rational(s[static_cast<std::size_t>(i + jj)]) +
                            " > s_" + std::to_string(i) + " + s_" + std::to_string(jj) + "\n";
                    c.emit(j, text);
                    return;
                }
    }
    c.emit(j, text);
}

void cmd_spectrum_tighten(Ctx& c, const std::string& values)
{
    const auto s = parse_rational_list(text_or_file(values));
    const TightSpectrum t = tight_complete(s);
    c.emit(Json{{"input", rationals_json(s)}, {"values", rationals_json(t.values)}, {"tight", t.tight}},
           format_rational_list(t.values) + "\n");
}

// ---------------------------------------------------------------- arrow

template <class S>
std::string render_morphism(const Embedding& e, const S& target)
{
    std::string out = "[";
    for (int i = 0; i < e.size(); ++i)
        out += (i ? "," : "") + std::to_string(target.order.label(e(i)));
    return out + "]";
}

struct ArrowArgs
{
    std::string kind, a, b, c;
    int k = 2;
    std::string coloring;
};

Json counts_json(const ArrowCounts& n)
{
    return Json{{"hom_AC", n.hom_ac}, {"hom_BC", n.hom_bc}, {"hom_AB", n.hom_ab}, {"colorings_checked", n.colorings_checked}};
}

std::string counts_text(const ArrowCounts& n)
{
    return "|hom(A,C)| = " + std::to_string(n.hom_ac) + ", |hom(B,C)| = " + std::to_string(n.hom_bc) +
           ", |hom(A,B)| = " + std::to_string(n.hom_ab) + ", colorings checked: " + std::to_string(n.colorings_checked) + "\n";
}

std::string coloring_text(const std::vector<int>& colors)
{
    std::string out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        out += (i ? "," : "") + std::to_string(colors[i]);
    return out;
}

void cmd_arrow(Ctx& c, const ArrowArgs& a, bool check)
{
    const StructureKind kind = parse_structure_kind(a.kind);
    const OrderedStructure sa = load_structure(a.a);
    const OrderedStructure sb = load_structure(a.b);
    const OrderedStructure sc = load_structure(a.c);
    for (const auto* s : {&sa, &sb, &sc})
        if (kind_of(*s) != kind)
            throw DomainError("--A, --B and --C must all be " + std::string(to_string(kind)) + " structures");
    std::visit(
        [&](const auto& A) {
            using S = std::decay_t<decltype(A)>;
            const S& B = std::get<S>(sb);
            const S& C = std::get<S>(sc);
            const auto problem = build_arrow(StructureCategory<S>{}, A, B, C, a.k, c.budget());
            Json instance{{"kind", a.kind},
                          {"A", structure_to_json(sa)},
                          {"B", structure_to_json(sb)},
                          {"C", structure_to_json(sc)},
                          {"k", a.k}};
            Json morphisms = Json::array();
            for (const auto& m : problem.hom_ac)
                morphisms.push_back(render_morphism(m, C));
            ArrowCounts counts{problem.hom_ac.size(), problem.hom_bc.size(), problem.hom_ab.size(), 0};
            if (!check) {
                const ArrowVerdict v = decide_arrow(problem, c.budget());
                Json witness = nullptr;
                std::string text = std::string("verdict: ") + (v.holds ? "holds" : "fails") + "\n";
                if (v.bad_coloring) {
                    witness = Json{{"bad_coloring", *v.bad_coloring}, {"hom_AC", morphisms}};
                    text += "bad coloring of hom(A,C):";
                    for (std::size_t i = 0; i < v.bad_coloring->size(); ++i)
                        text += " " + morphisms[i].get<std::string>() + ":" + std::to_string((*v.bad_coloring)[i]);
                    text += "\n";
                }
                c.emit(Json{{"instance", instance},
                            {"verdict", v.holds ? "holds" : "fails"},
                            {"witness", witness},
                            {"counts", counts_json(v.counts)},
                            {"seed", c.g.seed},
                            {"wall_time_ms", c.wall_time()}},
                       text + counts_text(v.counts));
                return;
            }
            std::vector<int> coloring;
            if (a.coloring == "random") {
                Rng rng(c.g.seed);
                for (std::size_t i = 0; i < problem.hom_ac.size(); ++i)
                    coloring.push_back(uniform_int(rng, 1, a.k));
            } else {
                coloring = parse_int_list(a.coloring, "coloring");
            }
            const ColoringCheck r = check_coloring(problem.table, coloring);
            counts.colorings_checked = 1;
            Json classes = Json::array();
            std::string text;
            for (std::size_t w = 0; w < r.classes_met.size(); ++w) {
                classes.push_back(Json{{"w", render_morphism(problem.hom_bc[w], C)}, {"colors", r.classes_met[w]}});
                text += "w = " + render_morphism(problem.hom_bc[w], C) + " meets colors {" +
                        coloring_text(r.classes_met[w]) + "}\n";
            }
            Json witness = r.w ? Json{{"w", render_morphism(problem.hom_bc[static_cast<std::size_t>(*r.w)], C)},
                                      {"color", r.color},
                                      {"classes_met", classes}}
                               : Json{{"w", nullptr}, {"classes_met", classes}};
            text = std::string("verdict: ") + (r.w ? "monochromatic w found" : "no monochromatic w") + "\n" +
                   (r.w ? "w = " + render_morphism(problem.hom_bc[static_cast<std::size_t>(*r.w)], C) +
                              " with color " + std::to_string(r.color) + "\n"
                        : std::string()) +
                   text;
            c.emit(Json{{"instance", instance},
                        {"coloring", coloring},
                        {"verdict", r.w ? "holds" : "fails"},
                        {"witness", witness},
                        {"counts", counts_json(counts)},
                        {"seed", c.g.seed},
                        {"wall_time_ms", c.wall_time()}},
                   text + counts_text(counts));
        },
        sa);
}

struct GrArgs
{
    std::string alphabet = "0";
    int n = 1, m = 1, ell = 1, k = 2;
    std::string route = "backtrack";
};

void cmd_arrow_gr(Ctx& c, const GrArgs& a)
{
    const auto alphabet = alphabet_of(a.alphabet);
    ArrowVerdict v;
    if (a.route == "backtrack") {
        v = decide_gr(alphabet, a.n, a.m, a.ell, a.k, c.budget());
    } else if (a.route == "table") {
        if (a.m > a.n)
            throw DomainError("no u exists: W^" + std::to_string(a.n) + "_" + std::to_string(a.m) + " is empty");
        v = decide_arrow(build_arrow(GrCategory{alphabet}, a.ell, a.m, a.n, a.k, c.budget()), c.budget());
    } else {
        throw UsageError("--route must be backtrack or table");
    }
    Json instance{{"category", "GR"}, {"alphabet", alphabet->letters()}, {"n", a.n}, {"m", a.m}, {"ell", a.ell},
                  {"k", a.k}, {"route", a.route}};
    std::string text = std::string("verdict: ") + (v.holds ? "holds" : "fails") + "\n";
    Json witness = nullptr;
    if (v.bad_coloring) {
        const auto words = enumerate_words(alphabet, a.n, a.ell, c.g.budget_hom);
        Json ws = Json::array();
        text += "bad coloring of W^n_ell:";
        for (std::size_t i = 0; i < words.size(); ++i) {
            ws.push_back(words[i].to_string());
            text += " [" + words[i].to_string() + "]:" + std::to_string((*v.bad_coloring)[i]);
        }
        text += "\n";
        witness = Json{{"bad_coloring", *v.bad_coloring}, {"words", ws}};
    }
    c.emit(Json{{"instance", instance},
                {"verdict", v.holds ? "holds" : "fails"},
                {"witness", witness},
                {"counts", counts_json(v.counts)},
                {"seed", c.g.seed},
                {"wall_time_ms", c.wall_time()}},
           text + counts_text(v.counts));
}

// ---------------------------------------------------------------- transfer / fixture

struct TransferArgs
{
    std::string d, e, target, coloring = "random";
    int k = 2;
    std::optional<int> length;
    int max_length = 12;
};

void cmd_transfer(Ctx& c, StructureKind kind, const TransferArgs& a)
{
    const OrderedStructure d = load_structure(a.d);
    const OrderedStructure e = load_structure(a.e);
    if (kind_of(d) != kind || kind_of(e) != kind)
        throw DomainError("--D and --E must both be " + std::string(to_string(kind)) + " structures");
    TransferOptions opt;
    opt.colors = a.k;
    if (a.coloring == "random")
        opt.mode = ColoringMode::random;
    else if (a.coloring == "constant")
        opt.mode = ColoringMode::constant;
    else
        throw UsageError("--coloring must be random or constant");
    opt.seed = c.g.seed;
    opt.length = a.length;
    opt.max_length = a.max_length;
    if (!a.target.empty())
        opt.target = as_kind<LinOrderedPoset>(load_structure(a.target), "--target");
    const TransferReport r = transfer_demo(d, e, opt, c.budget());

    Json images = Json::array();
    std::string text = "premise: " + r.ramsey_object + " arrows (" + counts_text(r.premise.counts).substr(0, counts_text(r.premise.counts).size() - 1) + ")\n";
    text += "monochromatic u: " + r.u + " (color " + std::to_string(r.color) + ")\n";
    text += "Φ(u):";
    for (const auto& s : r.phi_u)
        text += " " + s;
    text += "\n";
    for (const auto& step : r.images) {
        images.push_back(Json{{"image", step.image}, {"color", step.color}, {"embedding", step.embedding}});
        text += "Φ(u)∘f = " + step.image + " color " + std::to_string(step.color) +
                (step.embedding ? "" : " NOT AN EMBEDDING") + "\n";
    }
    text += r.verified ? "verified: Φ(u)∘hom(E,D) is monochromatic\n" : "NOT VERIFIED\n";
    Json instance{{"kind", std::string(to_string(kind))}, {"D", structure_to_json(d)}, {"E", structure_to_json(e)},
                  {"k", a.k}, {"coloring", a.coloring}};
    c.emit(Json{{"instance", instance},
                {"verdict", r.verified ? "verified" : "not verified"},
                {"witness", Json{{"ramsey_object", r.ramsey_object}, {"u", r.u}, {"color", r.color}, {"phi_u", r.phi_u}, {"images", images}}},
                {"counts", counts_json(r.premise.counts)},
                {"seed", c.g.seed},
                {"wall_time_ms", c.wall_time()}},
           text);
    if (!r.verified)
        throw ConstructionError("transfer demo could not verify the monochromatic image");
}

void cmd_fixture(Ctx& c, const std::optional<std::string>& corrupt)
{
    const auto checks = run_worked_example(corrupt);
    Json list = Json::array();
    std::string text;
    const FixtureCheck* first_bad = nullptr;
    for (const auto& ch : checks) {
        list.push_back(Json{{"name", ch.name}, {"expected", ch.expected}, {"actual", ch.actual}, {"ok", ch.ok()}});
        text += (ch.ok() ? "ok       " : "MISMATCH ") + ch.name + " = " + ch.actual +
                (ch.ok() ? "" : " (expected " + ch.expected + ")") + "\n";
        if (!ch.ok() && !first_bad)
            first_bad = &ch;
    }
    text += first_bad ? "mismatch at " + first_bad->name + "\n"
                      : "all " + std::to_string(checks.size()) + " fixture values match\n";
    c.emit(Json{{"fixture", "paper-example"}, {"checks", list}, {"passed", first_bad == nullptr},
                {"first_mismatch", first_bad ? Json(first_bad->name) : Json(nullptr)}},
           text);
    if (first_bad)
        throw DomainError("fixture mismatch at " + first_bad->name + ": expected " + first_bad->expected + ", got " +
                          first_bad->actual);
}

void report_error(Ctx& c, std::ostream& err, const Json& detail, const std::string& message)
{
    if (c.json())
        c.out << Json{{"error", detail}}.dump(2) << "\n";
    err << "error: " << message << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Ctx c{{}, out};
    CLI::App app{"Pre-adjunction constructions and exhaustive Ramsey checks", "preadj"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", c.g.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--budget-colorings", c.g.budget_colorings, "Largest number of colorings searched")->capture_default_str();
    app.add_option("--budget-hom", c.g.budget_hom, "Largest hom-set or enumeration size")->capture_default_str();
    app.add_option("--budget-ms", c.g.budget_ms, "Wall-clock cap for searches, 0 for none")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--threads", c.g.threads, "Worker threads for coloring search")->check(CLI::Range(1u, 256u))->capture_default_str();
    app.add_flag("--timing", c.g.timing, "Report wall_time_ms (otherwise null)");

    std::function<void()> action;
    const std::map<std::string, StructureKind> kinds{{"graph", StructureKind::graph},
                                                     {"poset", StructureKind::poset},
                                                     {"ultrametric", StructureKind::ultrametric},
                                                     {"metric", StructureKind::metric}};

    // word
    std::string alphabet = "0", word_text, u_text, v_text;
    std::optional<int> params;
    int length = 1, nparams = 1;
    auto* word = app.add_subcommand("word", "Parameter words")->require_subcommand(1);
    auto* wv = word->add_subcommand("validate", "Check a parameter word");
    wv->add_option("--alphabet", alphabet, "Comma-separated letters")->capture_default_str();
    wv->add_option("--word", word_text, "Word text or file")->required();
    wv->add_option("--params", params, "Required parameter count");
    wv->callback([&] { action = [&] { cmd_word_validate(c, alphabet, word_text, params); }; });
    auto* wc = word->add_subcommand("compose", "Substitute v into u");
    wc->add_option("--alphabet", alphabet, "Comma-separated letters")->capture_default_str();
    wc->add_option("--u", u_text, "Outer word text or file")->required();
    wc->add_option("--v", v_text, "Inner word text or file")->required();
    wc->callback([&] { action = [&] { cmd_word_compose(c, alphabet, u_text, v_text); }; });
    auto* we = word->add_subcommand("enumerate", "List all m-parameter words of length n");
    we->add_option("--alphabet", alphabet, "Comma-separated letters")->capture_default_str();
    we->add_option("--length,-n", length, "Word length")->required();
    we->add_option("--params,-m", nparams, "Parameter count")->required();
    we->callback([&] { action = [&] { cmd_word_enumerate(c, alphabet, length, nparams); }; });

    // structure
    std::string file, src_file, tgt_file;
    auto* st = app.add_subcommand("structure", "Structure files")->require_subcommand(1);
    auto* sv = st->add_subcommand("validate", "Check every axiom of a structure file");
    sv->add_option("file", file, "Structure JSON")->required();
    sv->callback([&] { action = [&] { cmd_structure_validate(c, file); }; });
    auto* se = st->add_subcommand("embeddings", "List all embeddings");
    se->add_option("--src", src_file, "Source structure")->required();
    se->add_option("--tgt", tgt_file, "Target structure")->required();
    se->callback([&] { action = [&] { cmd_structure_embeddings(c, src_file, tgt_file); }; });

    auto add_kinds = [&](CLI::App* parent, const std::string& what, auto setup) {
        parent->require_subcommand(1);
        for (const auto& [name, kind] : kinds)
            setup(parent->add_subcommand(name, what + " for " + name + "s"), kind);
    };

    // encode
    add_kinds(app.add_subcommand("encode", "Encode a structure into the target category"), "Encoding",
              [&](CLI::App* sub, StructureKind kind) {
                  sub->add_option("file", file, "Structure JSON")->required();
                  sub->callback([&, kind] { action = [&, kind] { cmd_encode(c, kind, file); }; });
              });

    // phi
    std::string target_file;
    add_kinds(app.add_subcommand("phi", "Image of a structure under Φ"), "Φ",
              [&](CLI::App* sub, StructureKind kind) {
                  sub->add_option("file", file, "Structure JSON")->required();
                  sub->add_option("--u", u_text, "Word (graph, poset) or map of target labels (ultrametric, metric)");
                  if (kind == StructureKind::ultrametric || kind == StructureKind::metric)
                      sub->add_option("--target", target_file, "Target poset (default: the encoding itself)");
                  sub->callback([&, kind] { action = [&, kind] { cmd_phi(c, kind, file, u_text, target_file); }; });
              });

    // witness
    std::string d_file, e_file, f_text;
    add_kinds(app.add_subcommand("witness", "Witness morphism for f : E -> D"), "Witness",
              [&](CLI::App* sub, StructureKind kind) {
                  sub->add_option("--D", d_file, "Larger structure")->required();
                  sub->add_option("--E", e_file, "Smaller structure")->required();
                  sub->add_option("--f", f_text, "Images of E's elements as D labels, comma-separated")->required();
                  if (kind == StructureKind::graph || kind == StructureKind::poset)
                      sub->add_option("--u", u_text, "Word over {0}")->required();
                  sub->callback([&, kind] { action = [&, kind] { cmd_witness(c, kind, d_file, e_file, f_text, u_text); }; });
              });

    // pa-check
    PaArgs pa;
    add_kinds(app.add_subcommand("pa-check", "Check the pre-adjunction condition"), "PA check",
              [&](CLI::App* sub, StructureKind kind) {
                  sub->add_option("--D", pa.d, "Larger structure");
                  sub->add_option("--E", pa.e, "Smaller structure");
                  sub->add_option("--f", pa.f, "Fixed f; random per trial when omitted");
                  sub->add_option("--u", pa.u, "Fixed u (word, or map into the target poset)");
                  if (kind == StructureKind::ultrametric || kind == StructureKind::metric)
                      sub->add_option("--target", pa.target, "Target poset for u (default: the encoding of D)");
                  sub->add_flag("--random", pa.random, "Random D and E per trial");
                  sub->add_option("--trials", pa.trials, "Number of randomized trials")->capture_default_str();
                  sub->callback([&, kind] { action = [&, kind] { cmd_pa_check(c, kind, pa); }; });
              });

    // spectrum
    std::string values;
    auto* sp = app.add_subcommand("spectrum", "Distance spectra")->require_subcommand(1);
    auto* sc = sp->add_subcommand("check", "Is the spectrum tight");
    sc->add_option("--values", values, "Comma-separated rationals starting with 0")->required();
    sc->callback([&] { action = [&] { cmd_spectrum_check(c, values); }; });
    auto* stt = sp->add_subcommand("tighten", "Tight completion");
    stt->add_option("--values", values, "Comma-separated rationals starting with 0")->required();
    stt->callback([&] { action = [&] { cmd_spectrum_tighten(c, values); }; });

    // arrow
    ArrowArgs arrow;
    GrArgs gr;
    auto* ar = app.add_subcommand("arrow", "Arrow relation C -> (B)^A_k")->require_subcommand(1);
    auto add_arrow_opts = [&](CLI::App* sub) {
        sub->add_option("--kind", arrow.kind, "Structure kind")->required()->check(CLI::IsMember({"graph", "poset", "ultrametric", "metric"}));
        sub->add_option("--A", arrow.a, "Structure A")->required();
        sub->add_option("--B", arrow.b, "Structure B")->required();
        sub->add_option("--C", arrow.c, "Structure C")->required();
        sub->add_option("-k,--colors", arrow.k, "Number of colors")->capture_default_str();
    };
    auto* ad = ar->add_subcommand("decide", "Decide by exhausting all colorings");
    add_arrow_opts(ad);
    ad->callback([&] { action = [&] { cmd_arrow(c, arrow, false); }; });
    auto* acc = ar->add_subcommand("check-coloring", "Look for a monochromatic w under one coloring");
    add_arrow_opts(acc);
    acc->add_option("--coloring", arrow.coloring, "Colors 1..k per hom(A,C) element, or 'random'")->required();
    acc->callback([&] { action = [&] { cmd_arrow(c, arrow, true); }; });
    auto* ag = ar->add_subcommand("gr", "Decide n -> (m)^ell_k for parameter words");
    ag->add_option("--alphabet", gr.alphabet, "Comma-separated letters")->capture_default_str();
    ag->add_option("-n", gr.n, "Word length")->required();
    ag->add_option("-m", gr.m, "Parameters of u")->required();
    ag->add_option("--ell", gr.ell, "Parameters of the colored words")->required();
    ag->add_option("-k,--colors", gr.k, "Number of colors")->capture_default_str();
    ag->add_option("--route", gr.route, "backtrack or table")->capture_default_str();
    ag->callback([&] { action = [&] { cmd_arrow_gr(c, gr); }; });

    // transfer-demo
    TransferArgs tr;
    add_kinds(app.add_subcommand("transfer-demo", "Run the Ramsey transfer on a tiny instance"), "Transfer",
              [&](CLI::App* sub, StructureKind kind) {
                  sub->add_option("--D", tr.d, "Structure D")->required();
                  sub->add_option("--E", tr.e, "Structure E")->required();
                  sub->add_option("-k,--colors", tr.k, "Number of colors")->capture_default_str();
                  sub->add_option("--coloring", tr.coloring, "random or constant")->capture_default_str();
                  if (kind == StructureKind::graph || kind == StructureKind::poset) {
                      sub->add_option("--length", tr.length, "Fixed word length N (default: probe upward)");
                      sub->add_option("--max-length", tr.max_length, "Probe limit")->capture_default_str();
                  } else {
                      sub->add_option("--target", tr.target, "Poset C (default: the encoding of D)");
                  }
                  sub->callback([&, kind] { action = [&, kind] { cmd_transfer(c, kind, tr); }; });
              });

    // fixture
    std::optional<std::string> corrupt;
    auto* fx = app.add_subcommand("fixture", "Built-in fixtures")->require_subcommand(1);
    auto* fpe = fx->add_subcommand("paper-example", "Recompute the worked graph example value by value");
    fpe->add_option("--corrupt", corrupt, "Alter one expected value (negative control)");
    fpe->callback([&] { action = [&] { cmd_fixture(c, corrupt); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // Subcommand help
        if (e.get_exit_code() == 0) {
            out << e.what() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }
    c.start = Clock::now();
    try {
        if (!action)
            throw UsageError("no command given");
        action();
        return 0;
    } catch (const BudgetExceeded& e) {
        report_error(c, err,
                     Json{{"type", "budget"}, {"quantity", e.quantity()}, {"required", e.required()}, {"limit", e.limit()}, {"message", e.what()}},
                     e.what());
        return 2;
    } catch (const PremiseFailure& e) {
        report_error(c, err, Json{{"type", "premise"}, {"message", e.what()}, {"bad_coloring", e.coloring()}}, e.what());
        return 1;
    } catch (const ParseError& e) {
        report_error(c, err,
                     Json{{"type", "parse"}, {"source", e.source()}, {"line", e.line()}, {"token", e.token()}, {"message", e.what()}},
                     e.what());
        return 1;
    } catch (const WordError& e) {
        report_error(c, err, Json{{"type", "word"}, {"position", e.position()}, {"message", e.what()}}, e.what());
        return 1;
    } catch (const DomainError& e) {
        report_error(c, err, Json{{"type", "domain"}, {"message", e.what()}}, e.what());
        return 1;
    } catch (const ConstructionError& e) {
        report_error(c, err, Json{{"type", "construction"}, {"message", e.what()}}, e.what());
        return 1;
    }
}

} // namespace preadj
