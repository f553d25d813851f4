#pragma once

#include <optional>
#include <vector>

namespace lodcloud {

enum class CorrelationMethod { pearson, spearman, kendall };

struct CorrelationResult {
    double coefficient = 0.0;
    // Absent for samples too small to test (n < 3).
    std::optional<double> p_value;
    CorrelationMethod method = CorrelationMethod::pearson;
    int n = 0;
};

// Pearson product-moment, Spearman over mid-ranks, or Kendall tau-b.
// P-values: t statistic with n-2 degrees of freedom for pearson/spearman,
// normal approximation with tie-adjusted variance and continuity correction
// for kendall; all two-sided.
CorrelationResult correlate(const std::vector<double>& x,
                            const std::vector<double>& y,
                            CorrelationMethod method);

// Mid-ranks (1-based; ties share the average of their rank range).
std::vector<double> midranks(const std::vector<double>& values);

const char* correlation_method_name(CorrelationMethod method);

} // namespace lodcloud
