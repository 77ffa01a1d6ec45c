#include "preadj/json_io.hpp"

#include <fstream>
#include <sstream>

namespace preadj {

namespace {

int line_of_offset(std::string_view text, std::size_t offset)
{
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

int line_of(std::string_view text, std::string_view needle)
{
    auto pos = text.find(needle);
    return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

class Reader
{
public:
    Reader(std::string_view text, const std::string& source) : text_(text), source_(source) {}

    [[noreturn]] void fail(std::string_view key, const std::string& token, const std::string& detail) const
    {
        throw ParseError(source_, line_of(text_, "\"" + std::string(key) + "\""), token, detail);
    }

    const Json& field(const Json& obj, const char* key) const
    {
        if (!obj.contains(key))
            throw ParseError(source_, 1, key, std::string("missing field \"") + key + "\"");
        return obj.at(key);
    }

    int label(const Json& v, std::string_view key) const
    {
        if (!v.is_number_integer())
            fail(key, v.dump(), "element labels must be integers");
        return v.get<int>();
    }

    Rational rational(const Json& v, std::string_view key) const
    {
        try {
            if (v.is_number_integer())
                return Rational(v.get<std::int64_t>());
            if (v.is_string())
                return parse_rational(v.get<std::string>());
        } catch (const DomainError& e) {
            fail(key, v.dump(), e.what());
        }
        fail(key, v.dump(), "distances must be \"p/q\" strings or integers");
    }

    const Json& array(const Json& obj, const char* key) const
    {
        const Json& v = field(obj, key);
        if (!v.is_array())
            fail(key, v.dump(), std::string("\"") + key + "\" must be an array");
        return v;
    }

    const std::string& source() const { return source_; }

private:
    std::string_view text_;
    const std::string& source_;
};

std::pair<int, int> label_pair(const Reader& r, const Json& v, const char* key)
{
    if (!v.is_array() || v.size() != 2)
        r.fail(key, v.dump(), "expected a pair [a, b]");
    return {r.label(v[0], key), r.label(v[1], key)};
}

} // namespace

OrderedStructure parse_structure(std::string_view text, const std::string& source)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        const std::string token = at < text.size() ? std::string(1, text[at]) : std::string();
        throw ParseError(source, line_of_offset(text, at), token, "malformed JSON");
    }
    Reader r(text, source);
    if (!doc.is_object())
        throw ParseError(source, 1, "", "a structure must be a JSON object");
    const Json& kind_v = r.field(doc, "kind");
    if (!kind_v.is_string())
        r.fail("kind", kind_v.dump(), "\"kind\" must be a string");
    StructureKind kind;
    try {
        kind = parse_structure_kind(kind_v.get<std::string>());
    } catch (const DomainError& e) {
        r.fail("kind", kind_v.get<std::string>(), e.what());
    }

    std::vector<int> labels;
    for (const auto& v : r.array(doc, "universe"))
        labels.push_back(r.label(v, "universe"));
    BaseOrder order;
    try {
        order = BaseOrder(labels);
    } catch (const DomainError& e) {
        r.fail("universe", "", e.what());
    }
    auto check_label = [&](int label, const char* key) {
        if (!order.contains(label))
            r.fail(key, std::to_string(label), "element " + std::to_string(label) + " is not in the universe");
    };

    try {
        switch (kind) {
        case StructureKind::graph: {
            std::vector<std::pair<int, int>> edges;
            if (doc.contains("edges"))
                for (const auto& e : r.array(doc, "edges")) {
                    auto p = label_pair(r, e, "edges");
                    check_label(p.first, "edges");
                    check_label(p.second, "edges");
                    edges.push_back(p);
                }
            return make_graph(order, edges);
        }
        case StructureKind::poset: {
            std::vector<std::pair<int, int>> leq;
            if (doc.contains("leq"))
                for (const auto& e : r.array(doc, "leq")) {
                    auto p = label_pair(r, e, "leq");
                    check_label(p.first, "leq");
                    check_label(p.second, "leq");
                    leq.push_back(p);
                }
            return make_poset(order, leq);
        }
        case StructureKind::ultrametric:
        case StructureKind::metric: {
            std::vector<DistanceEntry> entries;
            if (doc.contains("dist"))
                for (const auto& e : r.array(doc, "dist")) {
                    if (!e.is_array() || e.size() != 3)
                        r.fail("dist", e.dump(), "expected a triple [a, b, \"p/q\"]");
                    DistanceEntry d{r.label(e[0], "dist"), r.label(e[1], "dist"), r.rational(e[2], "dist")};
                    check_label(d.a, "dist");
                    check_label(d.b, "dist");
                    entries.push_back(d);
                }
            std::optional<std::vector<Rational>> spectrum;
            if (doc.contains("spectrum")) {
                spectrum.emplace();
                for (const auto& v : r.array(doc, "spectrum"))
                    spectrum->push_back(r.rational(v, "spectrum"));
            }
            if (kind == StructureKind::ultrametric)
                return make_ultrametric(order, entries, spectrum);
            return make_metric(order, entries, spectrum);
        }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        const char* key = kind == StructureKind::graph   ? "edges"
                          : kind == StructureKind::poset ? "leq"
                                                         : "dist";
        throw ParseError(source, line_of(text, std::string("\"") + key + "\""), "", e.what());
    }
    throw ParseError(source, 1, "", "unknown kind");
}

OrderedStructure load_structure(const std::string& path)
{
    return parse_structure(read_file(path), path);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json structure_to_json(const OrderedStructure& s)
{
    Json out;
    out["kind"] = std::string(to_string(kind_of(s)));
    std::visit(
        [&](const auto& x) {
            using S = std::decay_t<decltype(x)>;
            out["universe"] = x.order.labels();
            const auto& lb = x.order;
            if constexpr (std::is_same_v<S, LinOrderedGraph>) {
                Json edges = Json::array();
                for (auto [a, b] : x.edges())
                    edges.push_back({lb.label(a), lb.label(b)});
                out["edges"] = std::move(edges);
            } else if constexpr (std::is_same_v<S, LinOrderedPoset>) {
                Json leq = Json::array();
                for (int a = 0; a < x.size(); ++a)
                    for (int b = 0; b < x.size(); ++b)
                        if (a != b && x.below(a, b))
                            leq.push_back({lb.label(a), lb.label(b)});
                out["leq"] = std::move(leq);
            } else {
                Json dist = Json::array();
                for (int a = 0; a < x.size(); ++a)
                    for (int b = a + 1; b < x.size(); ++b)
                        dist.push_back({lb.label(a), lb.label(b), format_rational(x.d(a, b))});
                out["dist"] = std::move(dist);
                Json spec = Json::array();
                for (const auto& v : x.spectrum)
                    spec.push_back(format_rational(v));
                out["spectrum"] = std::move(spec);
            }
        },
        s);
    return out;
}

} // namespace preadj
