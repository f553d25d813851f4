#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "lodcloud/chi_square.hpp"
#include "lodcloud/errors.hpp"
#include "test_support.hpp"

using lodcloud::chi_square_independence;
using lodcloud::CountMatrix;

TEST_CASE("uniform table is exactly independent") {
    const CountMatrix table = {{5, 5}, {5, 5}};
    const auto result = chi_square_independence(table);
    CHECK(result.statistic == doctest::Approx(0.0));
    CHECK(result.degrees_of_freedom == 1);
    CHECK(result.p_value == doctest::Approx(1.0));
}

TEST_CASE("diagonal 2x2 table scores twenty") {
    const CountMatrix table = {{10, 0}, {0, 10}};
    const auto result = chi_square_independence(table);
    CHECK(result.statistic == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(result.degrees_of_freedom == 1);
    // oracle: upper tail of the density at 20 with one degree of freedom
    const double expected = test_support::chi2_upper_tail_quadrature(1, 20.0);
    CHECK(result.p_value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(result.p_value == doctest::Approx(7.74e-6).epsilon(0.01));
}

TEST_CASE("all-zero rows and columns are dropped before the statistic") {
    const CountMatrix padded = {{10, 0, 0}, {0, 0, 0}, {0, 0, 10}};
    const auto padded_result = chi_square_independence(padded);
    const auto plain_result = chi_square_independence({{10, 0}, {0, 10}});
    CHECK(padded_result.statistic == doctest::Approx(plain_result.statistic));
    CHECK(padded_result.degrees_of_freedom == plain_result.degrees_of_freedom);
    CHECK(padded_result.p_value == doctest::Approx(plain_result.p_value));
}

TEST_CASE("degenerate tables are rejected") {
    CHECK_THROWS_AS(chi_square_independence({}), lodcloud::DegenerateTableError);
    CHECK_THROWS_AS(chi_square_independence({{3, 4}}), lodcloud::DegenerateTableError);
    CHECK_THROWS_AS(chi_square_independence({{3}, {4}}), lodcloud::DegenerateTableError);
    CHECK_THROWS_AS(chi_square_independence({{1, 2}, {3}}), lodcloud::DegenerateTableError);
    CHECK_THROWS_AS(chi_square_independence({{1, -2}, {3, 4}}), lodcloud::DomainError);
}

TEST_CASE("statistic is invariant under row and column permutations") {
    std::mt19937_64 rng(666);
    std::uniform_int_distribution<int> cell(0, 12);
    for (int trial = 0; trial < 20; ++trial) {
        CountMatrix table(3, std::vector<long long>(4));
        for (auto& row : table)
            for (auto& value : row)
                value = cell(rng);
        lodcloud::ChiSquareResult original;
        try {
            original = chi_square_independence(table);
        } catch (const lodcloud::DegenerateTableError&) {
            continue;
        }

        std::shuffle(table.begin(), table.end(), rng);
        std::vector<int> order = {0, 1, 2, 3};
        std::shuffle(order.begin(), order.end(), rng);
        CountMatrix permuted(table.size(), std::vector<long long>(4));
        for (size_t r = 0; r < table.size(); ++r)
            for (size_t c = 0; c < 4; ++c)
                permuted[r][c] = table[r][order[c]];

        const auto shuffled = chi_square_independence(permuted);
        CHECK(shuffled.statistic == doctest::Approx(original.statistic).epsilon(1e-12));
        CHECK(shuffled.degrees_of_freedom == original.degrees_of_freedom);
    }
}

TEST_CASE("monte carlo p-value is deterministic for a fixed seed") {
    const CountMatrix table = {{8, 1}, {2, 7}};
    const auto first = lodcloud::chi_square_monte_carlo(table, 20000, 1009);
    const auto second = lodcloud::chi_square_monte_carlo(table, 20000, 1009);
    CHECK(first.p_value == second.p_value);
    CHECK(first.statistic == doctest::Approx(second.statistic));

    const auto other_seed = lodcloud::chi_square_monte_carlo(table, 20000, 4242);
    // same table, same statistic; the estimate may differ slightly
    CHECK(other_seed.statistic == doctest::Approx(first.statistic));
}

TEST_CASE("monte carlo p-value approximates the exact permutation probability") {
    // perfectly diagonal 2x2 with 4+4 items: under fixed marginals only
    // 2 of the C(8,4)=70 column arrangements reproduce a table this extreme,
    // so the exact permutation p is 2/70.
    const CountMatrix table = {{4, 0}, {0, 4}};
    const auto result = lodcloud::chi_square_monte_carlo(table, 100000, 1009);
    CHECK(result.p_value == doctest::Approx(2.0 / 70.0).epsilon(0.25));
    // add-one estimator keeps p strictly positive
    CHECK(result.p_value > 0.0);
}

TEST_CASE("monte carlo p-value for a uniform table is large") {
    const CountMatrix table = {{5, 5}, {5, 5}};
    const auto result = lodcloud::chi_square_monte_carlo(table, 20000, 1009);
    CHECK(result.p_value > 0.5);
}

TEST_CASE("sparse-table fraction flags small expected counts") {
    // expected counts all 0.5 -> every cell below 5
    CHECK(lodcloud::expected_below_five_fraction({{1, 0}, {0, 1}}) ==
          doctest::Approx(1.0));
    // expected counts all 10 -> none below 5
    CHECK(lodcloud::expected_below_five_fraction({{10, 10}, {10, 10}}) ==
          doctest::Approx(0.0));
}

TEST_CASE("asymptotic p matches quadrature across statistics and dfs") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> cell(0, 30);
    for (int trial = 0; trial < 12; ++trial) {
        const int rows = std::uniform_int_distribution<int>(2, 4)(rng);
        const int cols = std::uniform_int_distribution<int>(2, 4)(rng);
        CountMatrix table(rows, std::vector<long long>(cols));
        for (auto& row : table)
            for (auto& value : row)
                value = cell(rng);
        lodcloud::ChiSquareResult result;
        try {
            result = chi_square_independence(table);
        } catch (const lodcloud::DegenerateTableError&) {
            continue;
        }
        if (result.statistic < 1e-9)
            continue;
        const double expected =
            test_support::chi2_upper_tail_quadrature(result.degrees_of_freedom,
                                                     result.statistic);
        CHECK(std::fabs(result.p_value - expected) < 1e-9);
    }
}
