#include "lodcloud/chi_square.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lodcloud/errors.hpp"
#include "lodcloud/special_functions.hpp"

namespace lodcloud {

namespace {

// Drops all-zero rows and columns; validates shape and nonnegativity.
CountMatrix compact_table(const CountMatrix& table) {
    if (table.empty())
        throw DegenerateTableError("contingency table is empty");
    const size_t cols = table[0].size();
    for (const auto& row : table) {
        if (row.size() != cols)
            throw DegenerateTableError("contingency table rows differ in length");
        for (long long cell : row)
            if (cell < 0)
                throw DomainError("contingency table cells must be nonnegative");
    }

    std::vector<bool> keep_row(table.size(), false);
    std::vector<bool> keep_col(cols, false);
    for (size_t r = 0; r < table.size(); ++r) {
        for (size_t c = 0; c < cols; ++c) {
            if (table[r][c] > 0) {
                keep_row[r] = true;
                keep_col[c] = true;
            }
        }
    }

    CountMatrix compact;
    for (size_t r = 0; r < table.size(); ++r) {
        if (!keep_row[r])
            continue;
        std::vector<long long> row;
        for (size_t c = 0; c < cols; ++c)
            if (keep_col[c])
                row.push_back(table[r][c]);
        compact.push_back(std::move(row));
    }
    if (compact.size() < 2 || compact[0].size() < 2)
        throw DegenerateTableError(
            "chi-square needs at least 2 nonzero rows and 2 nonzero columns");
    return compact;
}

struct Marginals {
    std::vector<long long> rows;
    std::vector<long long> cols;
    long long total = 0;
};

Marginals marginals_of(const CountMatrix& table) {
    Marginals m;
    m.rows.assign(table.size(), 0);
    m.cols.assign(table[0].size(), 0);
    for (size_t r = 0; r < table.size(); ++r) {
        for (size_t c = 0; c < table[r].size(); ++c) {
            m.rows[r] += table[r][c];
            m.cols[c] += table[r][c];
            m.total += table[r][c];
        }
    }
    return m;
}

double statistic_of(const CountMatrix& table, const Marginals& m) {
    double statistic = 0.0;
    for (size_t r = 0; r < table.size(); ++r) {
        for (size_t c = 0; c < table[r].size(); ++c) {
            const double expected = static_cast<double>(m.rows[r]) *
                                    static_cast<double>(m.cols[c]) /
                                    static_cast<double>(m.total);
            const double diff = static_cast<double>(table[r][c]) - expected;
            statistic += diff * diff / expected;
        }
    }
    return statistic;
}

// SplitMix64 over (seed, counter): a fresh engine per shuffle keeps the
// stream independent of evaluation order.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

ChiSquareResult chi_square_independence(const CountMatrix& table) {
    const CountMatrix compact = compact_table(table);
    const Marginals m = marginals_of(compact);

    ChiSquareResult result;
    result.statistic = statistic_of(compact, m);
    result.degrees_of_freedom = static_cast<int>((compact.size() - 1) *
                                                 (compact[0].size() - 1));
    result.p_value = regularized_gamma_q(result.degrees_of_freedom / 2.0,
                                         result.statistic / 2.0);
    return result;
}

ChiSquareResult chi_square_monte_carlo(const CountMatrix& table, int shuffles,
                                       std::uint64_t seed) {
    if (shuffles < 1)
        throw DomainError("monte carlo chi-square needs at least 1 shuffle");
    const CountMatrix compact = compact_table(table);
    const Marginals m = marginals_of(compact);
    const double observed = statistic_of(compact, m);

    // One item per count unit; row labels stay fixed while the column
    // multiset is reshuffled, which preserves both marginals exactly.
    std::vector<int> item_row;
    std::vector<int> item_col;
    item_row.reserve(static_cast<size_t>(m.total));
    item_col.reserve(static_cast<size_t>(m.total));
    for (size_t r = 0; r < compact.size(); ++r)
        for (size_t c = 0; c < compact[r].size(); ++c)
            for (long long i = 0; i < compact[r][c]; ++i) {
                item_row.push_back(static_cast<int>(r));
                item_col.push_back(static_cast<int>(c));
            }

    const double threshold = observed - 1e-9;
    long long hits = 0;
    CountMatrix shuffled(compact.size(),
                         std::vector<long long>(compact[0].size(), 0));
    std::vector<int> cols = item_col;
    for (int shuffle = 0; shuffle < shuffles; ++shuffle) {
        std::mt19937_64 engine(mix64(seed, static_cast<std::uint64_t>(shuffle)));
        cols = item_col;
        for (size_t i = cols.size(); i > 1; --i) {
            std::uniform_int_distribution<size_t> pick(0, i - 1);
            std::swap(cols[i - 1], cols[pick(engine)]);
        }
        for (auto& row : shuffled)
            std::fill(row.begin(), row.end(), 0);
        for (size_t i = 0; i < cols.size(); ++i)
            ++shuffled[item_row[i]][cols[i]];
        if (statistic_of(shuffled, m) >= threshold)
            ++hits;
    }

    ChiSquareResult result;
    result.statistic = observed;
    result.degrees_of_freedom = static_cast<int>((compact.size() - 1) *
                                                 (compact[0].size() - 1));
    result.p_value = static_cast<double>(1 + hits) / static_cast<double>(1 + shuffles);
    return result;
}

double expected_below_five_fraction(const CountMatrix& table) {
    const CountMatrix compact = compact_table(table);
    const Marginals m = marginals_of(compact);
    long long below = 0;
    long long cells = 0;
    for (size_t r = 0; r < compact.size(); ++r) {
        for (size_t c = 0; c < compact[r].size(); ++c) {
            const double expected = static_cast<double>(m.rows[r]) *
                                    static_cast<double>(m.cols[c]) /
                                    static_cast<double>(m.total);
            ++cells;
            if (expected < 5.0)
                ++below;
        }
    }
    return static_cast<double>(below) / static_cast<double>(cells);
}

} // namespace lodcloud
