#include <cmath>

#include "doctest.h"

#include "lodcloud/errors.hpp"
#include "lodcloud/special_functions.hpp"
#include "test_support.hpp"

using lodcloud::regularized_gamma_q;

TEST_CASE("gamma tail is one at zero") {
    for (double s : {0.25, 0.5, 1.0, 2.5, 7.0, 40.0})
        CHECK(regularized_gamma_q(s, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("half-integer shape matches the complementary error function") {
    // Q(1/2, x) = erfc(sqrt(x))
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 12.0}) {
        CHECK(regularized_gamma_q(0.5, x) ==
              doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-12));
    }
    CHECK(regularized_gamma_q(0.5, 2.0) == doctest::Approx(0.04550026).epsilon(1e-7));
}

TEST_CASE("unit shape matches the exponential tail") {
    // Q(1, x) = exp(-x)
    for (double x : {0.0, 0.5, 1.0, 3.0, 10.0})
        CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    CHECK(regularized_gamma_q(1.0, 1.0) == doctest::Approx(0.36787944).epsilon(1e-8));
}

TEST_CASE("gamma tail decreases in x") {
    for (double s : {0.5, 1.0, 3.5, 9.0}) {
        double previous = 1.0;
        for (double x = 0.25; x < 40.0; x += 0.25) {
            const double q = regularized_gamma_q(s, x);
            CHECK(q <= previous + 1e-15);
            CHECK(q >= 0.0);
            CHECK(q <= 1.0);
            previous = q;
        }
    }
}

TEST_CASE("gamma tail rejects a nonpositive shape") {
    CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), lodcloud::DomainError);
    CHECK_THROWS_AS(regularized_gamma_q(-1.0, 1.0), lodcloud::DomainError);
    CHECK_THROWS_AS(regularized_gamma_q(1.0, -0.5), lodcloud::DomainError);
}

TEST_CASE("gamma tail matches direct density quadrature") {
    for (int df = 1; df <= 10; ++df) {
        for (double x : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 30.0}) {
            const double expected = test_support::chi2_upper_tail_quadrature(df, x);
            const double actual = regularized_gamma_q(0.5 * df, 0.5 * x);
            CHECK(std::fabs(actual - expected) < 1e-9);
        }
    }
}

TEST_CASE("student t tail behaves at the reference points") {
    // symmetric two-sided tail: t = 0 gives 1, large |t| gives ~0
    CHECK(lodcloud::student_t_two_sided_p(0.0, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lodcloud::student_t_two_sided_p(100.0, 5.0) < 1e-8);
    CHECK(lodcloud::student_t_two_sided_p(-2.0, 10.0) ==
          doctest::Approx(lodcloud::student_t_two_sided_p(2.0, 10.0)).epsilon(1e-12));
    // df = 1 is the Cauchy distribution: P(|T| >= 1) = 1/2
    CHECK(lodcloud::student_t_two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("normal tail matches erfc") {
    for (double z : {0.0, 0.5, 1.0, 1.96, 3.0}) {
        CHECK(lodcloud::normal_two_sided_p(z) ==
              doctest::Approx(std::erfc(z / std::sqrt(2.0))).epsilon(1e-12));
    }
}

TEST_CASE("regularized beta hits closed forms") {
    // I_x(1, b) = 1 - (1-x)^b
    CHECK(lodcloud::regularized_beta(0.3, 1.0, 4.0) ==
          doctest::Approx(1.0 - std::pow(0.7, 4.0)).epsilon(1e-12));
    // I_x(a, 1) = x^a
    CHECK(lodcloud::regularized_beta(0.6, 3.0, 1.0) ==
          doctest::Approx(std::pow(0.6, 3.0)).epsilon(1e-12));
    CHECK(lodcloud::regularized_beta(0.0, 2.0, 2.0) == doctest::Approx(0.0));
    CHECK(lodcloud::regularized_beta(1.0, 2.0, 2.0) == doctest::Approx(1.0));
}
