#include "lodcloud/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lodcloud/errors.hpp"

namespace lodcloud {

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0) || !(a > 0.0))
        throw DomainError("hurwitz_zeta requires s > 1 and a > 0");
    // Direct terms plus Euler-Maclaurin tail with three Bernoulli corrections.
    constexpr int kDirectTerms = 25;
    double sum = 0.0;
    for (int k = 0; k < kDirectTerms; ++k)
        sum += std::pow(a + k, -s);
    const double m = a + kDirectTerms;
    sum += std::pow(m, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(m, -s);
    const double m2 = m * m;
    double term = s * std::pow(m, -s - 1.0) / 12.0;
    sum += term;
    term *= (s + 1.0) * (s + 2.0) / (60.0 * m2);
    sum -= term;
    term *= (s + 3.0) * (s + 4.0) / (42.0 * m2);
    sum += term;
    return sum;
}

namespace {

// Negative log-likelihood per sample, up to a constant: log zeta(a, x_min) +
// a * mean(log x).
double mle_objective(double alpha, double mean_log, int x_min) {
    return std::log(hurwitz_zeta(alpha, x_min)) + alpha * mean_log;
}

double golden_section_minimize(double lo, double hi, double mean_log, int x_min) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = mle_objective(c, mean_log, x_min);
    double fd = mle_objective(d, mean_log, x_min);
    while (b - a > 1e-7) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = mle_objective(c, mean_log, x_min);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = mle_objective(d, mean_log, x_min);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

PowerLawFit fit_power_law(const std::vector<int>& samples, int x_min,
                          PowerLawMethod method) {
    if (x_min < 1)
        throw DomainError("x_min must be a positive integer");

    std::map<int, int> histogram;
    long long kept = 0;
    for (int x : samples) {
        if (x < 1)
            throw DomainError("power-law samples must be positive integers");
        if (x >= x_min) {
            ++histogram[x];
            ++kept;
        }
    }
    if (kept < 2)
        throw TooFewSamplesError("power-law fit needs at least 2 samples >= x_min");
    if (histogram.size() < 2)
        throw DegenerateDistributionError(
            "power-law fit needs at least 2 distinct sample values");

    PowerLawFit fit;
    fit.x_min = x_min;
    fit.method = method;

    if (method == PowerLawMethod::mle) {
        double sum_log = 0.0;
        for (const auto& [value, count] : histogram)
            sum_log += count * std::log(static_cast<double>(value));
        const double mean_log = sum_log / static_cast<double>(kept);
        fit.alpha = golden_section_minimize(1.0 + 1e-6, 25.0, mean_log, x_min);
    } else {
        // OLS slope over (log x, log frequency); alpha is the negated slope.
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double n = static_cast<double>(histogram.size());
        for (const auto& [value, count] : histogram) {
            const double lx = std::log(static_cast<double>(value));
            const double ly = std::log(static_cast<double>(count));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const double denom = n * sxx - sx * sx;
        if (denom == 0.0)
            throw DegenerateDistributionError(
                "least-squares fit needs at least 2 distinct sample values");
        fit.alpha = -(n * sxy - sx * sy) / denom;
    }
    return fit;
}

} // namespace lodcloud
