#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "preadj/generators.hpp"
#include "preadj/param_words.hpp"

using namespace preadj;
using brute::substitute;

namespace {

const std::string worked_u = "0 x1 0 0 x2 0 x1 x3 x3 x4 x2 x5 x6 0 x7 x1";

} // namespace

TEST_SUITE("words")
{
TEST_CASE("validation")
{
    const auto w = ParameterWord::parse(worked_u, zero_alphabet(), 7);
    CHECK(w.length() == 16);
    CHECK(w.parameters() == 7);
    CHECK(w.variable_positions(1) == Subset{2, 7, 16});
    CHECK(w.variable_positions(4) == Subset{10});
    CHECK(ParameterWord::parse("x1", zero_alphabet()).variable_positions(1) == Subset{1});
    CHECK_THROWS_AS(w.variable_positions(8), DomainError);
    CHECK(w.to_string() == worked_u);

    try {
        ParameterWord::parse("x2 x1", zero_alphabet(), 2);
        FAIL("accepted");
    } catch (const WordError& e) {
        CHECK(e.kind() == WordError::Kind::order_violation);
        CHECK(std::string(e.what()).find("x2") != std::string::npos);
    }
    try {
        ParameterWord::parse("x1 0", zero_alphabet(), 2);
        FAIL("accepted");
    } catch (const WordError& e) {
        CHECK(e.kind() == WordError::Kind::missing_variable);
    }
    CHECK_THROWS_AS(ParameterWord::parse("x1 1", zero_alphabet()), WordError);
    CHECK_THROWS_AS(ParameterWord::parse("x1 x2", zero_alphabet(), 1), WordError);
    CHECK_THROWS_AS(Alphabet::parse_list("0,x1"), DomainError);
}

TEST_CASE("composition examples")
{
    const auto a = zero_alphabet();
    const auto u = ParameterWord::parse(worked_u, a);
    const auto h = ParameterWord::parse("0 x1 x2 x3 x1 x4 x5", a);
    CHECK(compose(u, h).to_string() == "0 0 0 0 x1 0 0 x2 x2 x3 x1 x1 x4 0 x5 0");
    CHECK(compose(u, ParameterWord::identity(7, a)) == u);
    const auto uv = compose(ParameterWord::parse("x1 0 x2", a), ParameterWord::parse("x1 x1", a));
    CHECK(uv.to_string() == "x1 0 x1");
    CHECK(uv.parameters() == 1);
    CHECK(ParameterWord::identity(3, a).to_string() == "x1 x2 x3");
    CHECK(ParameterWord::identity(1, a).to_string() == "x1");
    CHECK_THROWS_AS(ParameterWord::identity(0, a), DomainError);
    CHECK_THROWS_AS(compose(u, ParameterWord::parse("x1 x2", a)), DomainError);
    const auto ab = make_alphabet({"0", "1"});
    CHECK_THROWS_AS(compose(ParameterWord::parse("x1", a), ParameterWord::parse("x1", ab)), DomainError);
}

TEST_CASE("enumeration")
{
    const auto words = enumerate_words(zero_alphabet(), 2, 1, 100);
    std::set<std::string> got;
    for (const auto& w : words)
        got.insert(w.to_string());
    CHECK(got == std::set<std::string>{"x1 x1", "x1 0", "0 x1"});
    CHECK(enumerate_words(zero_alphabet(), 1, 1, 10).size() == 1);
    CHECK(enumerate_words(zero_alphabet(), 1, 2, 10).empty());
    CHECK(enumerate_words(zero_alphabet(), 0, 0, 10).empty()); // words have positive length
    CHECK_THROWS_AS(enumerate_words(zero_alphabet(), 4, 1, 3), BudgetExceeded);

    for (const auto& letters : {std::vector<std::string>{"0"}, std::vector<std::string>{"0", "1"}}) {
        const auto a = make_alphabet(letters);
        for (int n = 1; n <= 4; ++n)
            for (int m = 0; m <= n; ++m) {
                std::vector<std::string> listed;
                for (const auto& w : enumerate_words(a, n, m, 100000))
                    listed.push_back(w.to_string());
                const auto first = listed;
                std::sort(listed.begin(), listed.end());
                CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
                CHECK(listed == brute::parameter_words(letters, n, m));
                CHECK(count_words(static_cast<int>(letters.size()), n, m) == listed.size());
                // deterministic order
                std::vector<std::string> again;
                for (const auto& w : enumerate_words(a, n, m, 100000))
                    again.push_back(w.to_string());
                CHECK(again == first);
            }
    }
}

TEST_CASE("category laws on random words")
{
    Rng rng(20261014);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = trial % 2 ? make_alphabet({"0", "1"}) : zero_alphabet();
        const int n = uniform_int(rng, 1, 12);
        const int m = uniform_int(rng, 1, n);
        const int k = uniform_int(rng, 1, m);
        const int j = uniform_int(rng, 0, k);
        const auto u = random_word(rng, a, n, m);
        const auto v = random_word(rng, a, m, k);
        const auto w = random_word(rng, a, k, j);
        const auto uv = compose(u, v);
        REQUIRE(uv.to_string() == substitute(u.to_string(), v.to_string()));
        REQUIRE(uv.length() == n);
        REQUIRE(uv.parameters() == k);
        REQUIRE(compose(uv, w) == compose(u, compose(v, w)));
        REQUIRE(compose(ParameterWord::identity(n, a), u) == u);
        REQUIRE(compose(u, ParameterWord::identity(m, a)) == u);
    }
}
}
