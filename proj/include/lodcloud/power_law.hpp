#pragma once

#include <vector>

namespace lodcloud {

enum class PowerLawMethod { mle, least_squares };

struct PowerLawFit {
    double alpha = 0.0;
    int x_min = 1;
    PowerLawMethod method = PowerLawMethod::mle;
};

// Hurwitz zeta sum_{k>=0} (a + k)^{-s} for s > 1, a > 0, by Euler-Maclaurin.
double hurwitz_zeta(double s, double a);

// Discrete power-law exponent for samples >= x_min. mle maximizes the
// zeta-normalized likelihood (bracketed search, |delta alpha| < 1e-6);
// least_squares is the negated slope of the OLS line through the
// (log degree, log frequency) histogram points.
PowerLawFit fit_power_law(const std::vector<int>& samples, int x_min,
                          PowerLawMethod method);

} // namespace lodcloud
