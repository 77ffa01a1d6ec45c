#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace preadj {

/// Violated precondition, malformed input, or a structure/word that fails its axioms.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input text that could not be parsed. Carries the location of the offending token.
class ParseError : public DomainError
{
public:
    ParseError(std::string source, int line, std::string token, const std::string& detail)
        : DomainError(source + ":" + std::to_string(line) + ": " + detail +
                      (token.empty() ? std::string() : " (near '" + token + "')")),
          source_(std::move(source)), line_(line), token_(std::move(token))
    {}

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::string source_;
    int line_;
    std::string token_;
};

/// A property that a construction guarantees did not hold on a concrete input.
class ConstructionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Work refused because it would exceed an explicit resource bound.
class BudgetExceeded : public std::runtime_error
{
public:
    BudgetExceeded(std::string quantity, std::uint64_t required, std::uint64_t limit)
        : std::runtime_error("budget exceeded: " + quantity + " needs at least " +
                             std::to_string(required) + ", limit is " + std::to_string(limit)),
          quantity_(std::move(quantity)), required_(required), limit_(limit)
    {}

    const std::string& quantity() const noexcept { return quantity_; }
    /// Lower bound on the amount of work the request would have needed.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::string quantity_;
    std::uint64_t required_;
    std::uint64_t limit_;
};

} // namespace preadj
