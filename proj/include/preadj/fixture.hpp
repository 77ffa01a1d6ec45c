#pragma once

// The worked example for linearly ordered graphs: a 4-vertex graph G with
// edges {1,2}, {2,3}, {2,4}, a 7-parameter word u of length 16, the
// embedding f of a 3-vertex graph G' onto vertices 2, 3, 4, and the word h.

#include <optional>
#include <string>
#include <vector>

namespace preadj {

struct FixtureCheck
{
    std::string name;
    std::string expected;
    std::string actual;

    bool ok() const { return expected == actual; }
};

/// Names of all checked values, in evaluation order.
std::vector<std::string> worked_example_checks();

/// Recomputes every intermediate value. With `corrupt`, that expected value
/// is altered first (negative control); an unknown name throws DomainError.
std::vector<FixtureCheck> run_worked_example(const std::optional<std::string>& corrupt = std::nullopt);

} // namespace preadj
