#include "preadj/param_words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace preadj {

namespace {

bool looks_like_variable(std::string_view s)
{
    if (s.size() < 2 || s.front() != 'x')
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string token_text(const Alphabet& alphabet, const Token& t)
{
    if (t.is_variable())
        return "x" + std::to_string(t.index);
    return alphabet.letter(t.index);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                             : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max()
                                                             : a * b;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters))
{
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.empty() || std::any_of(l.begin(), l.end(), [](unsigned char c) { return std::isspace(c); }))
            throw DomainError("alphabet letter '" + l + "' is empty or contains whitespace");
        if (looks_like_variable(l))
            throw DomainError("alphabet letter '" + l + "' collides with a variable name");
        for (std::size_t j = 0; j < i; ++j)
            if (letters_[j] == l)
                throw DomainError("duplicate alphabet letter '" + l + "'");
    }
}

Alphabet Alphabet::parse_list(std::string_view text)
{
    std::vector<std::string> letters;
    std::size_t start = 0;
    if (text.empty())
        return Alphabet({});
    while (true) {
        auto comma = text.find(',', start);
        letters.emplace_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Alphabet(std::move(letters));
}

std::optional<int> Alphabet::find(std::string_view symbol) const
{
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == symbol)
            return static_cast<int>(i);
    return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> letters)
{
    return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr zero_alphabet()
{
    static const AlphabetPtr zero = make_alphabet({"0"});
    return zero;
}

ParameterWord ParameterWord::validate(std::vector<Token> tokens, AlphabetPtr alphabet, int m)
{
    if (!alphabet)
        throw DomainError("parameter word without an alphabet");
    if (tokens.empty())
        throw WordError(WordError::Kind::empty_word, 0, "parameter word must have positive length");
    if (m < 0)
        throw WordError(WordError::Kind::parameter_mismatch, 0, "negative parameter count");
    int seen = 0; // variables introduced so far
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        const Token& t = tokens[i];
        if (!t.is_variable()) {
            if (t.index < 0 || t.index >= alphabet->size())
                throw WordError(WordError::Kind::unknown_token, pos,
                                "position " + std::to_string(pos) + ": letter index out of range");
            continue;
        }
        if (t.index < 1 || t.index > m)
            throw WordError(WordError::Kind::parameter_mismatch, pos,
                            "position " + std::to_string(pos) + ": variable x" + std::to_string(t.index) +
                                " exceeds the declared parameter count " + std::to_string(m));
        if (t.index > seen + 1)
            throw WordError(WordError::Kind::order_violation, pos,
                            "position " + std::to_string(pos) + ": first occurrence of x" +
                                std::to_string(t.index) + " precedes x" + std::to_string(seen + 1));
        seen = std::max(seen, t.index);
    }
    if (seen < m)
        throw WordError(WordError::Kind::missing_variable, 0,
                        "variable x" + std::to_string(seen + 1) + " never appears");
    return ParameterWord(std::move(tokens), std::move(alphabet), m);
}

ParameterWord ParameterWord::parse(std::string_view text, AlphabetPtr alphabet, std::optional<int> m)
{
    if (!alphabet)
        throw DomainError("parameter word without an alphabet");
    std::vector<Token> tokens;
    std::istringstream in{std::string(text)};
    std::string sym;
    int max_var = 0;
    while (in >> sym) {
        const int pos = static_cast<int>(tokens.size()) + 1;
        if (looks_like_variable(sym)) {
            int idx = 0;
            try {
                idx = std::stoi(sym.substr(1));
            } catch (const std::exception&) {
                throw WordError(WordError::Kind::unknown_token, pos,
                                "position " + std::to_string(pos) + ": bad variable '" + sym + "'");
            }
            if (idx < 1)
                throw WordError(WordError::Kind::unknown_token, pos,
                                "position " + std::to_string(pos) + ": variables start at x1");
            tokens.push_back(Token::var(idx));
            max_var = std::max(max_var, idx);
        } else if (auto li = alphabet->find(sym)) {
            tokens.push_back(Token::letter(*li));
        } else {
            throw WordError(WordError::Kind::unknown_token, pos,
                            "position " + std::to_string(pos) + ": unknown token '" + sym + "'");
        }
    }
    return validate(std::move(tokens), std::move(alphabet), m.value_or(max_var));
}

ParameterWord ParameterWord::identity(int n, AlphabetPtr alphabet)
{
    if (n < 1)
        throw DomainError("identity word needs n >= 1, got " + std::to_string(n));
    std::vector<Token> tokens;
    for (int i = 1; i <= n; ++i)
        tokens.push_back(Token::var(i));
    return ParameterWord(std::move(tokens), std::move(alphabet), n);
}

Subset ParameterWord::variable_positions(int i) const
{
    if (i < 1 || i > m_)
        throw DomainError("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(m_));
    Subset out;
    for (std::size_t p = 0; p < tokens_.size(); ++p)
        if (tokens_[p] == Token::var(i))
            out.push_back(static_cast<int>(p) + 1);
    return out;
}

std::vector<Subset> ParameterWord::variable_classes() const
{
    std::vector<Subset> out(static_cast<std::size_t>(m_));
    for (std::size_t p = 0; p < tokens_.size(); ++p)
        if (tokens_[p].is_variable())
            out[static_cast<std::size_t>(tokens_[p].index - 1)].push_back(static_cast<int>(p) + 1);
    return out;
}

std::string ParameterWord::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (i)
            out += ' ';
        out += token_text(*alphabet_, tokens_[i]);
    }
    return out;
}

ParameterWord compose(const ParameterWord& u, const ParameterWord& v)
{
    if (!(u.alphabet() == v.alphabet()))
        throw DomainError("cannot compose words over different alphabets");
    if (v.length() != u.parameters())
        throw DomainError("cannot compose: u has " + std::to_string(u.parameters()) +
                          " parameters but v has length " + std::to_string(v.length()));
    std::vector<Token> out;
    out.reserve(static_cast<std::size_t>(u.length()));
    for (const Token& t : u.tokens())
        out.push_back(t.is_variable() ? v[t.index] : t);
    return ParameterWord::validate(std::move(out), u.alphabet_ptr(), v.parameters());
}

std::uint64_t count_words(int alphabet_size, int n, int m)
{
    if (n < 1 || m < 0 || m > n)
        return 0;
    // stirling[j][i] = S(j, i)
    std::vector<std::vector<std::uint64_t>> stirling(static_cast<std::size_t>(n + 1),
                                                     std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
    stirling[0][0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= std::min(j, m); ++i)
            stirling[j][i] = sat_add(sat_mul(static_cast<std::uint64_t>(i), stirling[j - 1][i]), stirling[j - 1][i - 1]);
    std::uint64_t total = 0;
    std::uint64_t binom = 1; // C(n, j)
    for (int j = 0; j <= n; ++j) {
        if (j > 0)
            binom = binom == std::numeric_limits<std::uint64_t>::max()
                        ? binom
                        : sat_mul(binom, static_cast<std::uint64_t>(n - j + 1)) / static_cast<std::uint64_t>(j);
        std::uint64_t letters = 1;
        for (int r = 0; r < n - j; ++r)
            letters = sat_mul(letters, static_cast<std::uint64_t>(alphabet_size));
        total = sat_add(total, sat_mul(sat_mul(binom, letters), stirling[j][static_cast<std::size_t>(m)]));
    }
    return total;
}

WordEnumerator::WordEnumerator(AlphabetPtr alphabet, int n, int m, std::uint64_t bound)
    : alphabet_(std::move(alphabet)), n_(n), m_(m), bound_(bound)
{
    if (!alphabet_)
        throw DomainError("enumeration without an alphabet");
    if (m < 0)
        throw DomainError("negative parameter count");
    if (n < 1 || m > n)
        done_ = true;
}

// Chooses the smallest feasible code at every position from `position` on.
bool WordEnumerator::fill_from(int position)
{
    const int letters = alphabet_->size();
    for (int i = position; i < n_; ++i) {
        const int before = i == 0 ? 0 : introduced_[static_cast<std::size_t>(i - 1)];
        bool placed = false;
        for (int c = 0; c < letters + m_; ++c) {
            const int var = c < letters ? 0 : c - letters + 1;
            if (var > before + 1)
                break;
            const int after = std::max(before, var);
            const int rest = n_ - 1 - i;
            const bool fillable = rest == m_ - after || letters > 0 || m_ >= 1;
            if (rest < m_ - after || !fillable)
                continue;
            code_[static_cast<std::size_t>(i)] = c;
            introduced_[static_cast<std::size_t>(i)] = after;
            placed = true;
            break;
        }
        if (!placed)
            return false;
    }
    return true;
}

bool WordEnumerator::advance()
{
    const int letters = alphabet_->size();
    for (int i = n_ - 1; i >= 0; --i) {
        const int before = i == 0 ? 0 : introduced_[static_cast<std::size_t>(i - 1)];
        for (int c = code_[static_cast<std::size_t>(i)] + 1; c < letters + m_; ++c) {
            const int var = c < letters ? 0 : c - letters + 1;
            if (var > before + 1)
                break;
            const int after = std::max(before, var);
            const int rest = n_ - 1 - i;
            if (rest < m_ - after)
                continue;
            code_[static_cast<std::size_t>(i)] = c;
            introduced_[static_cast<std::size_t>(i)] = after;
            if (fill_from(i + 1))
                return true;
        }
    }
    return false;
}

std::optional<ParameterWord> WordEnumerator::next()
{
    if (done_)
        return std::nullopt;
    bool ok;
    if (!started_) {
        started_ = true;
        code_.assign(static_cast<std::size_t>(n_), 0);
        introduced_.assign(static_cast<std::size_t>(n_), 0);
        ok = fill_from(0);
    } else {
        ok = advance();
    }
    if (!ok) {
        done_ = true;
        return std::nullopt;
    }
    if (produced_ >= bound_)
        throw BudgetExceeded("|W^" + std::to_string(n_) + "_" + std::to_string(m_) + "(A)|", bound_ + 1, bound_);
    ++produced_;
    const int letters = alphabet_->size();
    std::vector<Token> tokens;
    tokens.reserve(static_cast<std::size_t>(n_));
    for (int c : code_)
        tokens.push_back(c < letters ? Token::letter(c) : Token::var(c - letters + 1));
    return ParameterWord::validate(std::move(tokens), alphabet_, m_);
}

std::vector<ParameterWord> enumerate_words(AlphabetPtr alphabet, int n, int m, std::uint64_t bound)
{
    WordEnumerator e(std::move(alphabet), n, m, bound);
    std::vector<ParameterWord> out;
    while (auto w = e.next())
        out.push_back(std::move(*w));
    return out;
}

} // namespace preadj
