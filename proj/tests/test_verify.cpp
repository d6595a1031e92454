#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gamma2/bounds.hpp"
#include "gamma2/families.hpp"
#include "gamma2/rng.hpp"
#include "gamma2/verify.hpp"

using namespace gamma2;

namespace {

// theta and tau from matching the AB and B^2 coefficients of the combination.
ThetaTau matched_theta_tau(int d, double beta) {
  const double c1 = (d + 1.0) * beta / (d - 2.0) - (d - 5.0) / (2.0 * (d - 2.0));
  const double c2 = beta * beta + (d - 3.0) * beta / (d - 2.0) + (d - 3.0) / (2.0 * (d - 2.0));
  const double theta = -0.5 / (c1 + 1.0);
  return {theta, 0.5 - theta * c2 - (1.0 - theta) / 4.0};
}

}  // namespace

TEST_CASE("theta and tau") {
  const ThetaTau a = theta_tau(3, -1.0);
  CHECK(a.theta == 0.25);
  CHECK(std::abs(a.tau - 1.0 / 16) < 1e-16);
  const ThetaTau b = theta_tau(3, -1.5);
  CHECK(b.theta == 0.125);
  CHECK(std::abs(b.tau) < 1e-16);
  for (double beta : {-3.0, -1.0, 0.0, 2.0}) {
    const ThetaTau c = theta_tau(2, beta);
    CHECK(c.theta == 0.0);
    CHECK(c.tau == 1.0 / 12);
  }
  const CounterRng rng(5);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const int d = 3 + static_cast<int>(i % 8);
    const double beta = rng.uniform(0, i, -4.0, 2.0);
    if (std::abs(2 * beta + 1) < 1e-3) continue;
    const ThetaTau got = theta_tau(d, beta);
    const ThetaTau want = matched_theta_tau(d, beta);
    CHECK(std::abs(got.theta - want.theta) < 1e-12 * std::max(1.0, std::abs(want.theta)));
    CHECK(std::abs(got.tau - want.tau) < 1e-12 * std::max(1.0, std::abs(want.tau)));
  }
  CHECK_THROWS_AS(theta_tau(3, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(theta_tau(1, -1.0), std::invalid_argument);
}

TEST_CASE("combination identity") {
  CHECK(combination_residual(3, -1.5, 1, 1) < 1e-15);
  CHECK(combination_residual(5, -1.2, 0, 0) == 0.0);
  const CounterRng rng(77);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const int d = 3 + static_cast<int>(i % 8);
    const auto [lo, hi] = beta_range(d);
    double beta = rng.uniform(0, i, lo, hi);
    if (beta == hi) beta = lo;
    const double A = rng.uniform(1, i, -10, 10);
    const double B = rng.uniform(2, i, -10, 10);
    worst = std::max(worst, combination_residual(d, beta, A, B));
  }
  CHECK(worst <= 1e-11);
  // A tau offset shows up as |offset| B^2.
  CHECK(std::abs(combination_residual(4, -1.0, 0.3, 2.0, 1e-3) - 4e-3) < 1e-13);
  CHECK_THROWS_AS(combination_residual(2, -1.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_q1(2, -1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("the d = 2 combination integrates to zero") {
  const ZQuadrature& r = default_z_rule(2);
  for (double c : {-1.0, 0.2, 1.5}) {
    const AxisymmetricProfile p(2, [c](double z) {
      return ProfileJet{c * z * z - 0.3 * z * z * z * z, 2 * c * z - 1.2 * z * z * z,
                        2 * c - 3.6 * z * z};
    });
    CHECK(d2_combination_residual(SymmetricPositiveFunction(p, DensityMode::log_density), r) < 1e-12);
  }
  CHECK_THROWS_AS(d2_combination_residual(make_quartic(1.0), default_z_rule(3)),
                  std::invalid_argument);
}

TEST_CASE("beta admissibility") {
  CHECK(beta_admissible(3, -1.5));
  CHECK(beta_admissible(3, -1.0));
  CHECK_FALSE(beta_admissible(3, 0.0));
  CHECK_FALSE(beta_admissible(3, -1.6));
  const auto [lo, hi] = beta_range(5);
  CHECK(lo == -7.0 / 6);
  CHECK(hi == -0.5);
  CHECK(theta_bounded_beta_max(3) == -5.0 / 8);
  for (int d = 3; d <= 10; ++d) {
    const double b = theta_bounded_beta_max(d);
    CHECK(std::abs(theta_tau(d, b).theta - 1.0) < 1e-14);
    const auto [l, h] = beta_range(d);
    CHECK(std::abs(theta_tau(d, l).tau) < 1e-14);
    CHECK(b > l);
    CHECK(b < h);
  }
}

TEST_CASE("lower bounds from beta") {
  CHECK(std::abs(lower_bound_from_beta(3, -1.5) - 5.5) < 1e-15);
  CHECK(std::abs(lower_bound_from_beta(3, -1.0) - 5.0) < 1e-15);
  CHECK_THROWS_AS(lower_bound_from_beta(3, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_from_beta(3, 0.0), std::invalid_argument);
  for (int d = 3; d <= 8; ++d) {
    const auto [lo, hi] = beta_range(d);
    double best = -INFINITY;
    for (int k = 0; k < 1000; ++k) {
      const double beta = lo + (hi - lo) * k / 1000.0;
      best = std::max(best, lower_bound_from_beta(d, beta));
    }
    CHECK(std::abs(best - lambda_lower(d)) < 1e-9);
    CHECK(std::abs(best - (d + 3 - 1.0 / (d - 1))) < 1e-9);
  }
}

TEST_CASE("curvature-dimension version") {
  const ThetaTau t = cd_theta_tau(2, -1.5);
  CHECK(t.theta == 0.125);
  CHECK(std::abs(t.tau) < 1e-16);
  CHECK(std::abs(cd_lower_from_beta(6, 1, 2, -1.5) - 5.5) < 1e-15);
  for (double beta : {-1.5, -1.2, -0.8, -0.6}) {
    CHECK(std::abs(cd_lower_from_beta(2, 1, 2, beta) - 2.0) < 1e-14);
  }
  for (int d = 3; d <= 10; ++d) {
    for (double beta : {-1.0, -0.75, -0.6}) {
      const ThetaTau a = cd_theta_tau(d - 1, beta);
      const ThetaTau b = theta_tau(d, beta);
      CHECK(std::abs(a.theta - b.theta) < 1e-14);
      CHECK(std::abs(a.tau - b.tau) < 1e-14);
    }
  }
  const double n = 4;
  const double lo = -(2 * n - 1) / (2 * n - 2);
  double best = -INFINITY;
  for (int k = 0; k < 1000; ++k) {
    best = std::max(best, cd_lower_from_beta(11, 2, n, lo + (-0.5 - lo) * k / 1000.0));
  }
  CHECK(std::abs(best - cd_lambda_lower(11, 2, n)) < 1e-9);
  CHECK_THROWS_AS(cd_lower_from_beta(6, 1, 2, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(cd_lower_from_beta(6, 1, 2, -2.0), std::invalid_argument);
}

TEST_CASE("trace inequality") {
  CHECK(trace_inequality_check(Eigen::Matrix3d::Zero()) == 0.0);
  Eigen::Matrix3d d = Eigen::Matrix3d::Zero();
  d(1, 1) = d(2, 2) = 1.7;
  CHECK(std::abs(trace_inequality_check(d)) < 1e-15);
  d(0, 1) = 0.4;
  d(0, 2) = -2.0;
  CHECK(std::abs(trace_inequality_check(d)) < 1e-15);
  const CounterRng rng(31);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 1) = rng.uniform(0, i, -5, 5);
    m(0, 2) = rng.uniform(1, i, -5, 5);
    m(1, 1) = rng.uniform(2, i, -5, 5);
    m(2, 2) = rng.uniform(3, i, -5, 5);
    m(1, 2) = m(2, 1) = rng.uniform(4, i, -5, 5);
    const double r = trace_inequality_check(m);
    const double a = m(1, 1) - m(2, 2);
    CHECK(r >= -1e-12);
    // For this structure the residual is (a^2)/2 + 2 m12^2.
    CHECK(std::abs(r - (0.5 * a * a + 2 * m(1, 2) * m(1, 2))) < 1e-12 * (1 + r));
  }
  Eigen::Matrix3d bad = Eigen::Matrix3d::Zero();
  bad(1, 0) = 1.0;
  CHECK_THROWS_AS(trace_inequality_check(bad), std::invalid_argument);
  bad.setZero();
  bad(1, 2) = 1.0;
  CHECK_THROWS_AS(trace_inequality_check(bad), std::invalid_argument);
}

TEST_CASE("pointwise log f inequality") {
  CHECK(pointwise_logf_inequality(make_constant(3.0), default_z_rule(3)) == 0.0);
  CHECK(pointwise_logf_inequality(make_quartic(0.69214), default_z_rule(3)) >= -1e-10);
  for (std::uint64_t i = 0; i < 20; ++i) {
    SampleSpec s;
    s.seed = i;
    s.amplitude = 1.0;
    s.mode = i % 2 ? SampleMode::density : SampleMode::log_density;
    CHECK(pointwise_logf_inequality(sample_random_symmetric(s).function(), default_sphere_rule()) >=
          -1e-10);
  }
}

TEST_CASE("verification suite") {
  const VerificationSummary s = run_verification_suite();
  CHECK(s.all_passed());
  std::set<std::string> names;
  for (const auto& c : s.checks) {
    CHECK_MESSAGE(c.pass, c.name);
    CHECK(c.count > 0);
    CHECK(c.max_residual <= c.tolerance);
    names.insert(c.name);
  }
  for (const char* n : {"combination_identity", "d2_combination", "theta_tau_values",
                        "beta_admissibility", "lower_bound_maximum", "cd_bound",
                        "cd_specialization", "trace_inequality", "pointwise_logf"}) {
    CHECK_MESSAGE(names.count(n) == 1, n);
  }
  CHECK(names.size() == s.checks.size());

  VerificationOptions o;
  o.perturb_tau = 1e-3;
  const VerificationSummary p = run_verification_suite(o);
  CHECK_FALSE(p.all_passed());
  for (const auto& c : p.checks) CHECK(c.pass == (c.name != "combination_identity"));

  const VerificationSummary serial = run_verification_suite({}, Execution::serial);
  REQUIRE(serial.checks.size() == s.checks.size());
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    CHECK(serial.checks[i].max_residual == s.checks[i].max_residual);
  }
}
