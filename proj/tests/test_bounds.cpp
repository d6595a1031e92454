#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gamma2/bounds.hpp"
#include "gamma2/errors.hpp"

using namespace gamma2;

TEST_CASE("lower bound formulas") {
  CHECK(lambda_lower(2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(lambda_lower(3) - 5.5) < 1e-15);
  CHECK(std::abs(lambda_lower(4) - 20.0 / 3) < 1e-14);
  CHECK_THROWS_AS(lambda_lower(1), std::invalid_argument);

  CHECK(std::abs(cd_lambda_lower(6, 1, 2) - 5.5) < 1e-15);
  CHECK(std::abs(cd_lambda_lower(10, 3, 4) - 7.75) < 1e-14);
  for (int d = 3; d <= 12; ++d) {
    CHECK(std::abs(cd_lambda_lower(2 * d, d - 2, d - 1) - lambda_lower(d)) < 1e-13);
    CHECK(std::abs(bakry_emery_lower(d - 2, d - 1) - (d - 1)) < 1e-13);
    CHECK(std::abs(lichnerowicz_lower(d - 2, d - 1) - (d - 1)) < 1e-13);
    CHECK(std::abs(rothaus_lower(2 * d, d - 2, d - 1) - (d + 3 - 4.0 / (d * d))) < 1e-13);
  }
  CHECK(std::abs(bakry_emery_lower(1, 2) - 2.0) < 1e-15);
  CHECK(bakry_emery_lower(0, 3) == 0.0);
  CHECK(std::abs(lichnerowicz_lower(1, 2) - 2.0) < 1e-15);
  CHECK(lichnerowicz_lower(0, 3) == 0.0);
  CHECK(std::abs(rothaus_lower(6, 1, 2) - 50.0 / 9) < 1e-15);

  // Both blends have weights summing to one.
  for (double n : {2.0, 3.5, 7.0}) {
    for (double rho : {0.5, 1.0, 4.0}) {
      const double be = rho * n / (n - 1);
      CHECK(std::abs(cd_lambda_lower(be, rho, n) - be) < 1e-13);
      CHECK(std::abs(rothaus_lower(be, rho, n) - be) < 1e-13);
    }
  }
}

TEST_CASE("closed-form upper bounds") {
  CHECK(std::abs(upper_U(0.69214) - 5.73892) < 1e-4);
  CHECK(std::abs(upper_U(1e6) - 6.0) < 1e-2);
  CHECK(std::abs(upper_alpha_expr(0.757585) - 5.8358) < 1e-3);
  CHECK(std::abs(upper_alpha_expr(1e6) - 6.0) < 1e-2);
  // Near t = 0, U = 10 - (15 pi / 2) sqrt(t) + O(t); the square-root term is
  // 2.4e-3 at t = 1e-8.
  for (double t : {1e-8, 1e-10, 1e-12}) {
    CHECK(std::abs(upper_U(t) - (10 - 7.5 * std::numbers::pi * std::sqrt(t))) < 1e2 * t);
  }
  CHECK(std::abs(upper_U(1e-10) - 10.0) < 1e-3);
  CHECK(upper_U(1e-8) < 10.0);
  CHECK(std::abs(upper_U(1e6) - (6.0 - 4.0 / 7e6)) < 1e-10);
  for (double t : {15.999999, 16.0, 16.000001}) {
    CHECK(std::abs(upper_U(t) - upper_U(16.0)) < 1e-8);
    CHECK(std::abs(upper_alpha_expr(t) - upper_alpha_expr(16.0)) < 1e-8);
  }
  CHECK_THROWS(upper_U(0.0));
  CHECK_THROWS(upper_alpha_expr(-1.0));
}

TEST_CASE("scalar minimization") {
  const ScalarMinResult q = minimize_scalar([](double t) { return (t - 2) * (t - 2); }, 0, 5, 1e-8);
  CHECK(std::abs(q.t_star - 2.0) < 1e-8);
  CHECK(q.value < 1e-15);
  CHECK(q.bracket_lo <= q.t_star);
  CHECK(q.bracket_hi >= q.t_star);
  CHECK(q.evaluations > kPrescanPoints);

  const ScalarMinResult u = minimize_upper_lambda3();
  CHECK(std::abs(u.t_star - 0.69214) < 1e-3);
  CHECK(std::abs(u.value - 5.73892) < 1e-4);
  const ScalarMinResult a = minimize_upper_alpha3();
  CHECK(std::abs(a.t_star - 0.757585) < 1e-3);
  CHECK(std::abs(a.value - 5.8358) < 1e-3);

  CHECK_THROWS(minimize_scalar([](double t) { return std::cos(20 * t); }, 0, 3, 1e-6));
  CHECK_THROWS_AS(minimize_scalar([](double t) { return t < 1 ? t : NAN; }, 0, 3, 1e-6),
                  NonFiniteValue);
  CHECK_THROWS(minimize_scalar([](double t) { return t; }, 2, 1, 1e-6));
}

TEST_CASE("bound reports are ordered") {
  const BoundReport r3 = bound_report(3);
  CHECK(r3.lambda_d == 6.0);
  CHECK(std::abs(r3.lambda_lower - 5.5) < 1e-12);
  CHECK(std::abs(r3.rothaus - 50.0 / 9) < 1e-12);
  CHECK(std::abs(r3.bakry_emery - 2.0) < 1e-12);
  CHECK(std::abs(r3.cd_lower - 5.5) < 1e-12);
  REQUIRE(r3.upper_lambda3.has_value());
  REQUIRE(r3.upper_alpha3.has_value());
  // Sandwich: the certified lower bounds sit below the quartic upper bounds.
  CHECK(r3.lambda_lower <= *r3.upper_lambda3);
  CHECK(*r3.upper_lambda3 <= r3.lambda_d);
  CHECK(r3.rothaus <= *r3.upper_alpha3);
  CHECK(*r3.upper_alpha3 <= r3.lambda_d);
  CHECK(*r3.upper_lambda3 <= *r3.upper_alpha3);

  const BoundReport r2 = bound_report(2);
  CHECK(r2.lambda_lower == doctest::Approx(4.0));
  CHECK_FALSE(r2.upper_lambda3.has_value());

  for (int d = 3; d <= 64; ++d) {
    const BoundReport r = bound_report(d);
    CHECK(r.lambda_d == 2.0 * d);
    CHECK(r.lambda_d >= r.rothaus);
    CHECK(r.rothaus >= r.lambda_lower);
    CHECK(r.lambda_lower >= r.bakry_emery);
    CHECK(r.lichnerowicz <= r.lambda_d);
    CHECK(r.cd_lower == doctest::Approx(r.lambda_lower).epsilon(1e-13));
    if (d > 3) CHECK_FALSE(r.upper_lambda3.has_value());
  }
  CHECK_THROWS(bound_report(1));
}

TEST_CASE("normalized lower bounds approach 1 monotonically") {
  double prev_l = INFINITY;
  double prev_r = INFINITY;
  for (int d = 3; d <= 64; ++d) {
    const double l = lambda_lower(d) / d;
    const double r = rothaus_lower(2 * d, d - 2, d - 1) / d;
    CHECK(l > 1.0);
    CHECK(r > 1.0);
    CHECK(l < prev_l);
    CHECK(r < prev_r);
    prev_l = l;
    prev_r = r;
  }
  CHECK(prev_l - 1 < 0.05);
  CHECK(prev_r - 1 < 0.05);
}
