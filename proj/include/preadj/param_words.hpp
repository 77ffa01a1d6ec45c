#pragma once

// Parameter words over a finite alphabet: the morphisms of the
// Graham-Rothschild category, where hom(k, n) is the set of k-parameter
// words of length n and composition is substitution.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "preadj/combinat.hpp"
#include "preadj/errors.hpp"

namespace preadj {

/// A word symbol: either a letter (0-based index into the alphabet) or a
/// variable x_i (1-based index).
struct Token
{
    enum class Kind : std::uint8_t { letter, variable };

    Kind kind = Kind::letter;
    int index = 0;

    static constexpr Token letter(int i) { return {Kind::letter, i}; }
    static constexpr Token var(int i) { return {Kind::variable, i}; }
    constexpr bool is_variable() const { return kind == Kind::variable; }

    friend constexpr auto operator<=>(const Token&, const Token&) = default;
};

/// Finite alphabet of literal symbols. No letter may look like a variable ("x" followed by digits).
class Alphabet
{
public:
    explicit Alphabet(std::vector<std::string> letters);
    /// Comma-separated letters, e.g. "0" or "0,1".
    static Alphabet parse_list(std::string_view text);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    const std::string& letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    std::optional<int> find(std::string_view symbol) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters);
/// The one-letter alphabet {0} used by the graph and poset encodings.
AlphabetPtr zero_alphabet();

/// Raised by ParameterWord::validate. position is 1-based, or 0 when the
/// defect is not tied to a position (e.g. a variable that never occurs).
class WordError : public DomainError
{
public:
    enum class Kind { missing_variable, order_violation, unknown_token, parameter_mismatch, empty_word };

    WordError(Kind kind, int position, const std::string& what)
        : DomainError(what), kind_(kind), position_(position)
    {}

    Kind kind() const noexcept { return kind_; }
    int position() const noexcept { return position_; }

private:
    Kind kind_;
    int position_;
};

/// An m-parameter word of length n: every x_1..x_m occurs and first
/// occurrences appear in increasing variable order.
class ParameterWord
{
public:
    /// Throws WordError unless the tokens form an m-parameter word over the alphabet.
    static ParameterWord validate(std::vector<Token> tokens, AlphabetPtr alphabet, int m);

    /// Whitespace-separated tokens: letters verbatim, variables as x1, x2, ...
    /// When m is omitted it is the largest variable index present.
    static ParameterWord parse(std::string_view text, AlphabetPtr alphabet,
                               std::optional<int> m = std::nullopt);

    /// x_1 x_2 ... x_n.
    static ParameterWord identity(int n, AlphabetPtr alphabet);

    int length() const noexcept { return static_cast<int>(tokens_.size()); }
    int parameters() const noexcept { return m_; }
    const std::vector<Token>& tokens() const noexcept { return tokens_; }
    const Token& operator[](int position) const { return tokens_.at(static_cast<std::size_t>(position - 1)); }
    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

    /// 1-based positions of x_i. Throws DomainError unless 1 <= i <= m.
    Subset variable_positions(int i) const;
    /// All variable position sets X_1..X_m (index 0 holds X_1).
    std::vector<Subset> variable_classes() const;

    std::string to_string() const;

    friend bool operator==(const ParameterWord& a, const ParameterWord& b)
    {
        return a.m_ == b.m_ && a.tokens_ == b.tokens_ &&
               (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
    }
    friend bool operator<(const ParameterWord& a, const ParameterWord& b) { return a.tokens_ < b.tokens_; }

private:
    ParameterWord(std::vector<Token> tokens, AlphabetPtr alphabet, int m)
        : tokens_(std::move(tokens)), alphabet_(std::move(alphabet)), m_(m)
    {}

    std::vector<Token> tokens_;
    AlphabetPtr alphabet_;
    int m_ = 0;
};

/// Substitution u[v_1/x_1, ..., v_m/x_m]. Requires v.length() == u.parameters()
/// and equal alphabets. The result is re-validated.
ParameterWord compose(const ParameterWord& u, const ParameterWord& v);

/// Exact |W^n_m(A)| = sum_j C(n, j) |A|^(n-j) S(j, m), saturating at UINT64_MAX.
std::uint64_t count_words(int alphabet_size, int n, int m);

/// Lexicographic stream (letters before variables, x_i before x_{i+1}) of
/// all m-parameter words of length n. Single consumer.
class WordEnumerator
{
public:
    /// Throws BudgetExceeded from next() once more than `bound` words would be produced.
    WordEnumerator(AlphabetPtr alphabet, int n, int m, std::uint64_t bound);

    std::optional<ParameterWord> next();
    std::uint64_t produced() const noexcept { return produced_; }

private:
    bool advance();
    bool fill_from(int position);

    AlphabetPtr alphabet_;
    int n_;
    int m_;
    std::uint64_t bound_;
    std::uint64_t produced_ = 0;
    std::vector<int> code_;      // token code per position: < |A| letter, else variable code-|A|+1
    std::vector<int> introduced_; // variables introduced in positions [0, i]
    bool started_ = false;
    bool done_ = false;
};

std::vector<ParameterWord> enumerate_words(AlphabetPtr alphabet, int n, int m, std::uint64_t bound);

} // namespace preadj
