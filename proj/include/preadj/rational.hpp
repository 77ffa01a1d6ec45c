#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost 1.74's mixed rational/integer
// operator== calls itself forever. Exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
} // namespace boost

namespace preadj {

/// Exact distance value. Always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or "p". Throws DomainError on anything else (including q == 0).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

/// Comma-separated list, e.g. "0,1,5/2".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(std::span<const Rational> values, std::string_view sep = ",");

} // namespace preadj
