#pragma once

namespace lodcloud {

// Upper regularized incomplete gamma Q(s, x), s > 0, x >= 0.
// Series expansion for x < s + 1, Lentz continued fraction otherwise;
// absolute error below 1e-12.
double regularized_gamma_q(double s, double x);

// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double regularized_beta(double x, double a, double b);

// Two-sided tail of Student's t with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);

// Two-sided standard normal tail P(|Z| >= |z|).
double normal_two_sided_p(double z);

} // namespace lodcloud
