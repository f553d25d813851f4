#include "lodcloud/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lodcloud/errors.hpp"
#include "lodcloud/special_functions.hpp"

namespace lodcloud {

namespace {

double clamp_unit(double v) {
    return std::min(1.0, std::max(-1.0, v));
}

CorrelationResult pearson_impl(const std::vector<double>& x,
                               const std::vector<double>& y,
                               CorrelationMethod method) {
    const int n = static_cast<int>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ZeroVarianceError("pearson correlation needs nonconstant inputs");

    CorrelationResult result;
    result.method = method;
    result.n = n;
    result.coefficient = clamp_unit(sxy / std::sqrt(sxx * syy));
    if (n >= 3) {
        const double r = result.coefficient;
        if (std::fabs(r) >= 1.0) {
            result.p_value = 0.0;
        } else {
            const double df = n - 2;
            const double t = r * std::sqrt(df / (1.0 - r * r));
            result.p_value = student_t_two_sided_p(t, df);
        }
    }
    return result;
}

// Sum over tie groups of f(group size), counting only groups of size >= 2.
template <typename F>
double tie_sum(std::vector<double> values, F&& f) {
    std::sort(values.begin(), values.end());
    double total = 0.0;
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i + 1;
        while (j < values.size() && values[j] == values[i])
            ++j;
        const double t = static_cast<double>(j - i);
        if (t >= 2.0)
            total += f(t);
        i = j;
    }
    return total;
}

CorrelationResult kendall_impl(const std::vector<double>& x,
                               const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    long long s = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            const double prod = dx * dy;
            if (prod > 0.0)
                ++s;
            else if (prod < 0.0)
                --s;
        }
    }
    const double n0 = 0.5 * n * (n - 1.0);
    const double n1 = tie_sum(x, [](double t) { return t * (t - 1.0) / 2.0; });
    const double n2 = tie_sum(y, [](double t) { return t * (t - 1.0) / 2.0; });
    const double denom = std::sqrt((n0 - n1) * (n0 - n2));
    if (denom == 0.0)
        throw ZeroVarianceError("kendall correlation needs nonconstant inputs");

    CorrelationResult result;
    result.method = CorrelationMethod::kendall;
    result.n = n;
    result.coefficient = clamp_unit(static_cast<double>(s) / denom);
    if (n >= 3) {
        const double v0 = n * (n - 1.0) * (2.0 * n + 5.0);
        const double vt =
            tie_sum(x, [](double t) { return t * (t - 1.0) * (2.0 * t + 5.0); });
        const double vu =
            tie_sum(y, [](double t) { return t * (t - 1.0) * (2.0 * t + 5.0); });
        const double v1 =
            tie_sum(x, [](double t) { return t * (t - 1.0); }) *
            tie_sum(y, [](double t) { return t * (t - 1.0); }) /
            (2.0 * n * (n - 1.0));
        const double v2 =
            tie_sum(x, [](double t) { return t * (t - 1.0) * (t - 2.0); }) *
            tie_sum(y, [](double t) { return t * (t - 1.0) * (t - 2.0); }) /
            (9.0 * n * (n - 1.0) * (n - 2.0));
        const double var_s = (v0 - vt - vu) / 18.0 + v1 + v2;
        if (var_s <= 0.0) {
            result.p_value = 1.0;
        } else {
            const double abs_s = std::fabs(static_cast<double>(s));
            const double z = abs_s >= 1.0 ? (abs_s - 1.0) / std::sqrt(var_s) : 0.0;
            result.p_value = normal_two_sided_p(z);
        }
    }
    return result;
}

} // namespace

std::vector<double> midranks(const std::vector<double>& values) {
    const size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]])
            ++j;
        // 1-based ranks i+1 .. j averaged over the tie run.
        const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (size_t k = i; k < j; ++k)
            ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

CorrelationResult correlate(const std::vector<double>& x,
                            const std::vector<double>& y,
                            CorrelationMethod method) {
    if (x.size() != y.size())
        throw LengthMismatchError("correlate inputs differ in length: " +
                                  std::to_string(x.size()) + " vs " +
                                  std::to_string(y.size()));
    if (x.size() < 2)
        throw TooFewSamplesError("correlate needs at least 2 samples, got " +
                                 std::to_string(x.size()));
    switch (method) {
    case CorrelationMethod::pearson:
        return pearson_impl(x, y, method);
    case CorrelationMethod::spearman: {
        CorrelationResult result =
            pearson_impl(midranks(x), midranks(y), CorrelationMethod::spearman);
        return result;
    }
    case CorrelationMethod::kendall:
        return kendall_impl(x, y);
    }
    throw DomainError("unknown correlation method");
}

const char* correlation_method_name(CorrelationMethod method) {
    switch (method) {
    case CorrelationMethod::pearson:
        return "pearson";
    case CorrelationMethod::spearman:
        return "spearman";
    case CorrelationMethod::kendall:
        return "kendall";
    }
    return "unknown";
}

} // namespace lodcloud
