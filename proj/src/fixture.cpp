#include "preadj/fixture.hpp"

#include <algorithm>
#include <utility>

#include "preadj/graph.hpp"
#include "preadj/pa.hpp"

namespace preadj {

namespace {

const std::vector<std::pair<std::string, std::string>>& expected_values()
{
    static const std::vector<std::pair<std::string, std::string>> values{
        {"F(G)", "7"},
        {"edge order", "{1,2} {2,3} {2,4}"},
        {"X_1", "{2,7,16}"},
        {"X_2", "{5,11}"},
        {"X_3", "{8,9}"},
        {"X_4", "{10}"},
        {"X_5", "{12}"},
        {"X_6", "{13}"},
        {"X_7", "{15}"},
        {"v_1", "{2,7,12,16}"},
        {"v_2", "{5,11,12,13,15}"},
        {"v_3", "{8,9,13}"},
        {"v_4", "{10,15}"},
        {"F(G')", "5"},
        {"X'_1", "{5,11,12}"},
        {"X'_2", "{8,9}"},
        {"X'_3", "{10}"},
        {"X'_4", "{13}"},
        {"X'_5", "{15}"},
        {"h", "0 x1 x2 x3 x1 x4 x5"},
        {"u.h", "0 0 0 0 x1 0 0 x2 x2 x3 x1 x1 x4 0 x5 0"},
        {"w_1", "{5,11,12,13,15}"},
        {"w_2", "{8,9,13}"},
        {"w_3", "{10,15}"},
        {"PA equation", "holds"},
    };
    return values;
}

std::string corrupted(const std::string& value)
{
    // Drop the last element of a set or the last token of a word.
    if (!value.empty() && value.front() == '{') {
        auto comma = value.rfind(',');
        return comma == std::string::npos ? "{}" : value.substr(0, comma) + "}";
    }
    auto space = value.rfind(' ');
    return space == std::string::npos ? value + "0" : value.substr(0, space);
}

} // namespace

std::vector<std::string> worked_example_checks()
{
    std::vector<std::string> out;
    for (const auto& [name, value] : expected_values())
        out.push_back(name);
    return out;
}

std::vector<FixtureCheck> run_worked_example(const std::optional<std::string>& corrupt)
{
    auto expected = expected_values();
    if (corrupt) {
        auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.first == *corrupt; });
        if (it == expected.end())
            throw DomainError("unknown fixture value '" + *corrupt + "'");
        it->second = corrupted(it->second);
    }

    const auto zero = zero_alphabet();
    const std::vector<std::pair<int, int>> g_edges{{1, 2}, {2, 3}, {2, 4}};
    const LinOrderedGraph g = make_graph(BaseOrder::iota(4), g_edges);
    const std::vector<std::pair<int, int>> g2_edges{{1, 2}, {1, 3}};
    const LinOrderedGraph g2 = make_graph(BaseOrder::iota(3), g2_edges);
    const Embedding f{{1, 2, 3}};
    const ParameterWord u = ParameterWord::parse("0 x1 0 0 x2 0 x1 x3 x3 x4 x2 x5 x6 0 x7 x1", zero, 7);

    std::vector<std::pair<std::string, std::string>> actual;
    const GraphEncoding enc = encode_graph(g);
    actual.emplace_back("F(G)", std::to_string(enc.object));
    std::string order;
    for (auto [a, b] : enc.edges)
        order += (order.empty() ? "" : " ") + format_subset({g.order.label(a), g.order.label(b)});
    actual.emplace_back("edge order", order);
    const auto classes = u.variable_classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
        actual.emplace_back("X_" + std::to_string(i + 1), format_subset(classes[i]));
    const PowerSetMap phi_u = phi_graph(g, u);
    for (std::size_t i = 0; i < phi_u.images.size(); ++i)
        actual.emplace_back("v_" + std::to_string(i + 1), format_subset(phi_u.images[i]));
    actual.emplace_back("F(G')", std::to_string(encode_graph(g2).object));
    const GraphWitness w = witness_graph(g, g2, f, u);
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        actual.emplace_back("X'_" + std::to_string(i + 1), format_subset(w.parts[i]));
    actual.emplace_back("h", w.h.to_string());
    const ParameterWord uh = compose(u, w.h);
    actual.emplace_back("u.h", uh.to_string());
    const PowerSetMap phi_uh = phi_graph(g2, uh);
    for (std::size_t i = 0; i < phi_uh.images.size(); ++i)
        actual.emplace_back("w_" + std::to_string(i + 1), format_subset(phi_uh.images[i]));
    actual.emplace_back("PA equation", compose(phi_u, f) == phi_uh ? "holds" : "fails");

    std::vector<FixtureCheck> out;
    for (const auto& [name, value] : expected) {
        auto it = std::find_if(actual.begin(), actual.end(), [&](const auto& a) { return a.first == name; });
        out.push_back({name, value, it == actual.end() ? std::string("<missing>") : it->second});
    }
    return out;
}

} // namespace preadj
