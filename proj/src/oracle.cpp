#include "preadj/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace preadj {

std::optional<std::uint64_t> coloring_count(int k, std::uint64_t hom_size)
{
    std::uint64_t total = 1;
    const auto base = static_cast<std::uint64_t>(k);
    for (std::uint64_t i = 0; i < hom_size; ++i) {
        if (total > UINT64_MAX / base)
            return std::nullopt;
        total *= base;
    }
    return total;
}

namespace {

using Clock = std::chrono::steady_clock;

// Incremental state for one slice of the Gray-code walk. The coloring at
// rank r has digit i equal to (b_i - b_{i+1}) mod k, where b is r in base k;
// from r to r + 1 exactly one digit changes, by +1 mod k.
class GrayWalker
{
public:
    GrayWalker(const ArrowTable& t, const std::vector<std::vector<std::pair<int, int>>>& containing)
        : t_(t), containing_(containing), k_(t.colors), h_(static_cast<int>(t.hom_ac)),
          counts_(t.images.size() * static_cast<std::size_t>(t.colors), 0), mono_(t.images.size(), 0),
          digits_(static_cast<std::size_t>(h_), 0), color_(static_cast<std::size_t>(h_), 0)
    {}

    void seek(std::uint64_t rank)
    {
        for (int i = 0; i < h_; ++i) {
            digits_[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(k_));
            rank /= static_cast<std::uint64_t>(k_);
        }
        for (int i = 0; i < h_; ++i) {
            const int next = i + 1 < h_ ? digits_[static_cast<std::size_t>(i + 1)] : 0;
            color_[static_cast<std::size_t>(i)] = ((digits_[static_cast<std::size_t>(i)] - next) % k_ + k_) % k_;
        }
        std::fill(counts_.begin(), counts_.end(), 0);
        mono_count_ = 0;
        for (std::size_t w = 0; w < t_.images.size(); ++w) {
            for (int x : t_.images[w])
                ++counts_[w * static_cast<std::size_t>(k_) + static_cast<std::size_t>(color_[static_cast<std::size_t>(x)])];
            mono_[w] = 0;
            if (t_.images[w].empty()) {
                mono_[w] = 1;
            } else {
                for (int c = 0; c < k_; ++c)
                    if (counts_[w * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] ==
                        static_cast<int>(t_.images[w].size()))
                        mono_[w] = 1;
            }
            mono_count_ += mono_[w];
        }
    }

    // Advances from rank r to r + 1 (r + 1 < k^H).
    void step()
    {
        int i = 0;
        while (digits_[static_cast<std::size_t>(i)] == k_ - 1)
            digits_[static_cast<std::size_t>(i++)] = 0;
        ++digits_[static_cast<std::size_t>(i)];
        const int old_color = color_[static_cast<std::size_t>(i)];
        const int new_color = (old_color + 1) % k_;
        color_[static_cast<std::size_t>(i)] = new_color;
        for (auto [w, mult] : containing_[static_cast<std::size_t>(i)]) {
            const auto base = static_cast<std::size_t>(w) * static_cast<std::size_t>(k_);
            counts_[base + static_cast<std::size_t>(old_color)] -= mult;
            counts_[base + static_cast<std::size_t>(new_color)] += mult;
            const int size = static_cast<int>(t_.images[static_cast<std::size_t>(w)].size());
            const char now = counts_[base + static_cast<std::size_t>(new_color)] == size ? 1 : 0;
            if (now != mono_[static_cast<std::size_t>(w)]) {
                mono_count_ += now ? 1 : -1;
                mono_[static_cast<std::size_t>(w)] = now;
            }
        }
    }

    bool bad() const { return mono_count_ == 0; }

    std::vector<int> coloring() const
    {
        std::vector<int> out(color_.size());
        for (std::size_t i = 0; i < color_.size(); ++i)
            out[i] = color_[i] + 1;
        return out;
    }

private:
    const ArrowTable& t_;
    const std::vector<std::vector<std::pair<int, int>>>& containing_;
    int k_;
    int h_;
    std::vector<int> counts_;
    std::vector<char> mono_;
    std::vector<int> digits_;
    std::vector<int> color_;
    long mono_count_ = 0;
};

} // namespace

SearchResult search_colorings(const ArrowTable& table, const Budget& budget)
{
    const auto total_opt = coloring_count(table.colors, table.hom_ac);
    if (!total_opt || *total_opt > budget.max_colorings)
        throw BudgetExceeded("k^|hom(A,C)| colorings (k = " + std::to_string(table.colors) +
                                 ", |hom(A,C)| = " + std::to_string(table.hom_ac) + ")",
                             total_opt.value_or(UINT64_MAX), budget.max_colorings);
    const std::uint64_t total = *total_opt;

    std::vector<std::vector<std::pair<int, int>>> containing(static_cast<std::size_t>(table.hom_ac));
    for (std::size_t w = 0; w < table.images.size(); ++w) {
        std::map<int, int> mult;
        for (int x : table.images[w])
            ++mult[x];
        for (auto [x, m] : mult)
            containing[static_cast<std::size_t>(x)].emplace_back(static_cast<int>(w), m);
    }

    const unsigned threads = std::max(1u, budget.threads);
    const std::uint64_t block = std::max<std::uint64_t>(1024, total / (std::uint64_t{threads} * 64) + 1);
    const std::uint64_t blocks = (total + block - 1) / block;
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::atomic<bool> timed_out{false};
    const auto start = Clock::now();

    auto worker = [&] {
        GrayWalker walker(table, containing);
        std::uint64_t since_check = 0;
        while (true) {
            const std::uint64_t b = next_block.fetch_add(1);
            if (b >= blocks || timed_out.load())
                return;
            const std::uint64_t lo = b * block;
            if (lo >= best.load())
                return;
            const std::uint64_t hi = std::min(total, lo + block);
            walker.seek(lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                if (r > lo)
                    walker.step();
                if (walker.bad()) {
                    std::uint64_t cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {}
                    break;
                }
                if (budget.wall.count() > 0 && ++since_check >= 4096) {
                    since_check = 0;
                    if (Clock::now() - start > budget.wall) {
                        timed_out = true;
                        return;
                    }
                }
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }
    if (timed_out)
        throw BudgetExceeded("wall-clock milliseconds",
                             static_cast<std::uint64_t>(budget.wall.count()) + 1,
                             static_cast<std::uint64_t>(budget.wall.count()));

    SearchResult out;
    if (best.load() == UINT64_MAX) {
        out.holds = true;
        out.colorings_checked = total;
        return out;
    }
    GrayWalker walker(table, containing);
    walker.seek(best.load());
    out.bad_coloring = walker.coloring();
    out.colorings_checked = best.load() + 1;
    return out;
}

ColoringCheck check_coloring(const ArrowTable& table, std::span<const int> coloring)
{
    if (coloring.size() != table.hom_ac)
        throw DomainError("coloring has " + std::to_string(coloring.size()) + " entries, hom(A, C) has " +
                          std::to_string(table.hom_ac));
    for (int c : coloring)
        if (c < 1 || c > table.colors)
            throw DomainError("color " + std::to_string(c) + " outside 1.." + std::to_string(table.colors));
    ColoringCheck out;
    for (std::size_t w = 0; w < table.images.size(); ++w) {
        std::vector<int> met;
        for (int x : table.images[w])
            met.push_back(coloring[static_cast<std::size_t>(x)]);
        std::sort(met.begin(), met.end());
        met.erase(std::unique(met.begin(), met.end()), met.end());
        if (!out.w && met.size() <= 1) {
            out.w = static_cast<int>(w);
            out.color = met.empty() ? 0 : met.front();
        }
        out.classes_met.push_back(std::move(met));
    }
    return out;
}

ArrowVerdict decide_gr(const AlphabetPtr& alphabet, int n, int m, int ell, int k, const Budget& budget)
{
    if (m > n)
        throw DomainError("no u exists: W^" + std::to_string(n) + "_" + std::to_string(m) + " is empty");
    if (k < 2)
        throw DomainError("the number of colors must be at least 2");
    const auto targets = enumerate_words(alphabet, n, ell, budget.max_hom);
    const auto us = enumerate_words(alphabet, n, m, budget.max_hom);
    const auto vs = enumerate_words(alphabet, m, ell, budget.max_hom);
    std::map<std::vector<Token>, int> index;
    for (std::size_t i = 0; i < targets.size(); ++i)
        index.emplace(targets[i].tokens(), static_cast<int>(i));

    // For each u, the targets u·v, and for each target the u's it completes.
    std::vector<std::vector<int>> images;
    std::vector<std::vector<int>> completes(targets.size());
    bool vacuous = false;
    for (const auto& u : us) {
        std::vector<int> row;
        for (const auto& v : vs)
            row.push_back(index.at(compose(u, v).tokens()));
        if (row.empty()) {
            vacuous = true;
        } else {
            completes[static_cast<std::size_t>(*std::max_element(row.begin(), row.end()))].push_back(
                static_cast<int>(images.size()));
        }
        images.push_back(std::move(row));
    }

    ArrowVerdict verdict;
    verdict.counts = {targets.size(), us.size(), vs.size(), 0};
    if (vacuous) {
        verdict.holds = true;
        return verdict;
    }

    const auto deadline = Clock::now() + budget.wall;
    const int h = static_cast<int>(targets.size());
    std::vector<int> color(static_cast<std::size_t>(h), -1);
    std::uint64_t leaves = 0;
    bool found = false;
    // The coloring budget bounds search leaves: pruned branches plus complete colorings.
    auto charge = [&] {
        if (++leaves > budget.max_colorings)
            throw BudgetExceeded("backtracking leaves over colorings of W^n_ell", leaves, budget.max_colorings);
        if (budget.wall.count() > 0 && (leaves & 4095) == 0 && Clock::now() > deadline)
            throw BudgetExceeded("wall-clock milliseconds", static_cast<std::uint64_t>(budget.wall.count()) + 1,
                                 static_cast<std::uint64_t>(budget.wall.count()));
    };
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == h) {
            charge();
            found = true;
            return;
        }
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit && !found; ++c) {
            color[static_cast<std::size_t>(i)] = c;
            bool mono = false;
            for (int u : completes[static_cast<std::size_t>(i)]) {
                const auto& row = images[static_cast<std::size_t>(u)];
                mono = std::all_of(row.begin(), row.end(),
                                   [&](int x) { return color[static_cast<std::size_t>(x)] == c; });
                if (mono)
                    break;
            }
            if (mono) {
                charge();
                continue;
            }
            self(self, i + 1, std::max(used, c + 1));
        }
        if (!found)
            color[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0, 0);
    verdict.counts.colorings_checked = leaves;
    if (found) {
        verdict.holds = false;
        std::vector<int> bad(color.size());
        for (std::size_t i = 0; i < color.size(); ++i)
            bad[i] = color[i] + 1;
        verdict.bad_coloring = std::move(bad);
    } else {
        verdict.holds = true;
    }
    return verdict;
}

} // namespace preadj
