#include "doctest.h"

#include <sstream>

#include "preadj/cli.hpp"
#include "preadj/json_io.hpp"
#include "preadj/generators.hpp"

using namespace preadj;

namespace {

const std::string data = PREADJ_TEST_DATA;

struct Run
{
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string file(const std::string& name) { return data + "/" + name; }

std::vector<OrderedStructure> random_structures(Rng& rng)
{
    const int n = uniform_int(rng, 1, 5);
    return {random_graph(rng, n), random_poset(rng, n),
            random_ultrametric(rng, n, random_spectrum(rng, n == 1 ? 1 : uniform_int(rng, 2, 4))),
            random_metric(rng, n, random_tight_spectrum(rng, n == 1 ? 1 : uniform_int(rng, 2, 4)))};
}

} // namespace

TEST_SUITE("json")
{
TEST_CASE("structure round trip")
{
    Rng rng(64);
    for (int trial = 0; trial < 200; ++trial)
        for (const auto& s : random_structures(rng)) {
            const auto text = structure_to_json(s).dump();
            const auto back = parse_structure(text, "round trip");
            REQUIRE(back == s);
            REQUIRE(structure_to_json(back).dump() == text);
        }
}

TEST_CASE("parse errors name the source and the line")
{
    try {
        parse_structure("{\"kind\": \"graph\",\n \"universe\": [1, 2],\n \"edges\": [[1, 3]]}", "g.json");
        FAIL("no error");
    } catch (const DomainError& e) {
        const std::string what = e.what();
        CHECK(what.find("g.json") != std::string::npos);
        CHECK(what.find('3') != std::string::npos);
    }
    CHECK_THROWS_AS(parse_structure("{\"kind\": \"graph\", \"universe\": [1, 1], \"edges\": []}", "x"), DomainError);
    CHECK_THROWS_AS(parse_structure("{\"kind\": \"poset\", \"universe\": [1, 2, 3], \"leq\": [[1, 2], [2, 3]]}", "x"),
                    DomainError);
    CHECK_THROWS_AS(parse_structure("{\"kind\": \"tree\", \"universe\": [1]}", "x"), ParseError);
    CHECK_THROWS_AS(parse_structure("{\"kind\": \"graph\", ", "x"), ParseError);
    CHECK_THROWS_AS(parse_structure("{\"kind\": \"ultrametric\", \"universe\": [1, 2, 3],"
                                    " \"dist\": [[1, 2, 1], [1, 3, 2], [2, 3, 3]]}",
                                    "x"),
                    DomainError);
}
}

TEST_SUITE("cli")
{
TEST_CASE("outputs")
{
    CHECK(run({"word", "compose", "--u", "0 x1 x2", "--v", "x1 0"}).out == "0 x1 0\n");
    CHECK(run({"word", "compose", "--u", "0 x1 0 0 x2 0 x1 x3 x3 x4 x2 x5 x6 0 x7 x1", "--v",
               file("worked_h.txt")})
              .out == "0 0 0 0 x1 0 0 x2 x2 x3 x1 x1 x4 0 x5 0\n");
    CHECK(run({"spectrum", "tighten", "--values", "0,1,5"}).out == "0,1,2,3,4,5\n");
    CHECK(run({"spectrum", "tighten", "--values", "0,1/2,3/2"}).out == "0,1/2,1,3/2\n");
    CHECK(run({"spectrum", "check", "--values", "0,1,2"}).out.starts_with("tight"));
    CHECK(run({"word", "enumerate", "-n", "2", "-m", "1"}).out == "0 x1\nx1 0\nx1 x1\ncount: 3\n");
    const auto v = run({"structure", "validate", file("worked_g.json")});
    CHECK(v.status == 0);
    CHECK(v.out == "valid graph with 4 elements\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({"spectrum", "check", "--values", "0,1,5"}).status == 0);
    CHECK(run({"arrow", "decide", "--kind", "poset", "--A", file("chain1.json"), "--B", file("chain2.json"), "--C",
               file("chain3.json")})
              .status == 0);
    CHECK(run({"fixture", "paper-example"}).status == 0);

    const auto bad_word = run({"word", "validate", "--word", "x2 x1"});
    CHECK(bad_word.status == 1);
    CHECK(bad_word.err.starts_with("error: "));
    CHECK(run({"bogus"}).status == 1);
    CHECK(run({}).status == 1);
    CHECK(run({"--threads", "0", "spectrum", "check", "--values", "0,1"}).status == 1);
    CHECK(run({"structure", "validate", file("missing.json")}).status == 1);
    CHECK(run({"spectrum", "tighten", "--values", "0,2,1"}).status == 1);
    CHECK(run({"fixture", "paper-example", "--corrupt", "h"}).status == 1);
    CHECK(run({"phi", "metric", file("metric2.json"), "--u", "1,2,3,5"}).status == 1);

    const auto refused = run({"--budget-colorings", "2", "arrow", "decide", "--kind", "poset", "--A",
                              file("chain1.json"), "--B", file("chain2.json"), "--C", file("chain3.json")});
    CHECK(refused.status == 2);
    CHECK(refused.err.find("budget") != std::string::npos);
    CHECK(run({"--budget-hom", "2", "word", "enumerate", "-n", "3", "-m", "1"}).status == 2);
}

TEST_CASE("json errors are structured")
{
    const auto r = run({"--format", "json", "word", "validate", "--word", "x2 x1"});
    CHECK(r.status == 1);
    const auto j = Json::parse(r.out);
    CHECK(j["error"]["type"] == "word");
    CHECK(j["error"]["position"] == 1);
}

TEST_CASE("arrow report")
{
    const auto r = run({"--format", "json", "arrow", "decide", "--kind", "poset", "--A", file("chain1.json"), "--B",
                        file("chain2.json"), "--C", file("chain2.json")});
    REQUIRE(r.status == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "fails");
    CHECK(j["counts"]["hom_AC"] == 2);
    CHECK(j["counts"]["hom_BC"] == 1);
    CHECK(j["counts"]["hom_AB"] == 2);
    CHECK(j["wall_time_ms"].is_null());
    CHECK(j["seed"] == 0);
    const auto coloring = j["witness"]["bad_coloring"];
    REQUIRE(coloring.size() == 2);
    CHECK(coloring[0] != coloring[1]);

    const auto timed = Json::parse(run({"--timing", "--format", "json", "arrow", "decide", "--kind", "poset", "--A",
                                        file("chain1.json"), "--B", file("chain2.json"), "--C", file("chain2.json")})
                                       .out);
    CHECK(timed["wall_time_ms"].is_number());
}

TEST_CASE("outputs are reproducible")
{
    const std::vector<std::vector<std::string>> commands{
        {"--format", "json", "fixture", "paper-example"},
        {"--format", "json", "--seed", "9", "pa-check", "poset", "--random", "--trials", "20"},
        {"--format", "json", "--seed", "3", "arrow", "check-coloring", "--kind", "graph", "--A", file("vertex.json"),
         "--B", file("edge.json"), "--C", file("worked_g.json"), "--coloring", "random"},
        {"--format", "json", "--threads", "4", "arrow", "gr", "-n", "4", "-m", "2", "--ell", "1"},
        {"--format", "json", "encode", "ultrametric", file("ultra3.json")},
        {"--format", "json", "phi", "metric", file("metric3.json")},
    };
    for (const auto& c : commands) {
        const auto a = run(c), b = run(c);
        INFO(c[2] << " " << c[3]);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
    const auto t1 = run({"--format", "json", "--threads", "1", "arrow", "gr", "-n", "4", "-m", "2", "--ell", "1"});
    const auto t4 = run({"--format", "json", "--threads", "4", "arrow", "gr", "-n", "4", "-m", "2", "--ell", "1"});
    CHECK(t1.out == t4.out);
}
}
