#pragma once

#include <cstdint>
#include <vector>

namespace lodcloud {

using CountMatrix = std::vector<std::vector<long long>>;

struct ChiSquareResult {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 1.0;
};

// Pearson chi-square test of independence. All-zero rows and columns are
// dropped before the statistic; p is the upper regularized gamma tail,
// no continuity correction.
ChiSquareResult chi_square_independence(const CountMatrix& table);

// Permutation p-value: `shuffles` random tables with the observed marginals
// (item pairing with a reshuffled column multiset). The returned p uses the
// add-one estimator (1 + hits) / (1 + shuffles). The shuffle stream is
// derived from (seed, shuffle index) pairs, so results do not depend on
// evaluation order.
ChiSquareResult chi_square_monte_carlo(const CountMatrix& table,
                                       int shuffles = 100000,
                                       std::uint64_t seed = 1009);

// Fraction of retained cells whose expected count is below 5; above 0.2 the
// asymptotic p-value is conventionally considered unreliable.
double expected_below_five_fraction(const CountMatrix& table);

} // namespace lodcloud
