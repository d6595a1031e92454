#include "gamma2/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gamma2/bounds.hpp"
#include "gamma2/families.hpp"
#include "gamma2/rng.hpp"

namespace gamma2 {

namespace {

void require_general_dim(int d, const char* what) {
  if (d < 3) throw std::invalid_argument(std::string(what) + ": requires d >= 3");
}

void require_off_pole(double beta, const char* what) {
  if (beta == -0.5) throw std::invalid_argument(std::string(what) + ": beta = -1/2 is a pole");
}

}  // namespace

ThetaTau theta_tau(int d, double beta) {
  if (d < 2) throw std::invalid_argument("theta_tau: requires d >= 2");
  if (d == 2) return {0.0, 1.0 / 12.0};
  require_off_pole(beta, "theta_tau");
  const double dd = d;
  return {-(dd - 2.0) / ((dd + 1.0) * (2.0 * beta + 1.0)),
          (2.0 * (dd - 2.0) * beta + 2.0 * dd - 3.0) / (4.0 * (dd + 1.0))};
}

namespace {

template <class T>
T q1_value(int d, T beta, T A, T B) {
  const T dd = d;
  const T ab = (dd + 1) / (dd - 2) * beta - (dd - 5) / (2 * (dd - 2));
  const T bb = beta * beta + (dd - 3) / (dd - 2) * beta + (dd - 3) / (2 * (dd - 2));
  return A * A - ab * A * B + bb * B * B;
}

}  // namespace

double quadratic_q1(int d, double beta, double A, double B) {
  require_general_dim(d, "quadratic_q1");
  return q1_value<double>(d, beta, A, B);
}

double combination_residual(int d, double beta, double A, double B, double tau_offset) {
  require_general_dim(d, "combination_residual");
  const ThetaTau tt = theta_tau(d, beta);
  // theta grows without bound as beta -> -1/2, so the blend is summed in
  // extended precision to keep cancellation out of the residual.
  using L = long double;
  const L a = A, b = B, theta = tt.theta;
  const L half = a + b / 2;
  const L blended = theta * q1_value<L>(d, beta, a, b) + (1 - theta) * half * half;
  const L target = (a + b) * half - (L(tt.tau) + tau_offset) * b * b;
  return static_cast<double>(std::fabs(blended - target));
}

double d2_combination_residual(const SymmetricPositiveFunction& f, const ZQuadrature& rule) {
  const AxisymmetricProfile* prof = f.profile();
  if (!prof || f.dim() != 2 || rule.dim != 2) {
    throw std::invalid_argument("d2_combination_residual: needs a d = 2 axisymmetric function");
  }
  const ThetaTau tt = theta_tau(2, 0.0);
  std::vector<double> gap(rule.size());
  std::vector<double> scale(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z = rule.nodes[i];
    const ProfileJet raw = prof->jet(z);
    const ProfileJet lg = f.mode() == DensityMode::log_density ? raw : log_jet(raw);
    const double fv = f.mode() == DensityMode::log_density ? std::exp(raw.phi) : raw.phi;
    const double A = axi_laplacian(lg, z, 2);
    const double B = axi_gradient_sq(lg, z);
    const double half = A + 0.5 * B;
    gap[i] = fv * ((A + B) * half - tt.tau * B * B - half * half);
    scale[i] = fv * (1.0 + A * A + B * B);
  }
  return std::abs(weighted_sum(rule.weights, gap)) / weighted_sum(rule.weights, scale);
}

std::pair<double, double> beta_range(int d) {
  require_general_dim(d, "beta_range");
  return {-(2.0 * d - 3.0) / (2.0 * d - 4.0), -0.5};
}

bool beta_admissible(int d, double beta) {
  const auto [lo, hi] = beta_range(d);
  return beta >= lo && beta <= hi;
}

double theta_bounded_beta_max(int d) {
  require_general_dim(d, "theta_bounded_beta_max");
  return -(2.0 * d - 1.0) / (2.0 * (d + 1.0));
}

double lower_bound_from_beta(int d, double beta) {
  if (!beta_admissible(d, beta)) {
    throw std::invalid_argument("lower_bound_from_beta: beta " + std::to_string(beta) +
                                " outside the admissible range");
  }
  require_off_pole(beta, "lower_bound_from_beta");
  return 2.0 * d + (d - 2.0) / (2.0 * beta + 1.0);
}

ThetaTau cd_theta_tau(double n, double beta) {
  if (!(n >= 2.0)) throw std::invalid_argument("cd_theta_tau: requires n >= 2");
  require_off_pole(beta, "cd_theta_tau");
  return {-(n - 1.0) / ((n + 2.0) * (2.0 * beta + 1.0)),
          (2.0 * (n - 1.0) * beta + 2.0 * n - 1.0) / (4.0 * (n + 2.0))};
}

double cd_lower_from_beta(double lambda, double rho, double n, double beta) {
  if (!(n >= 2.0)) throw std::invalid_argument("cd_lower_from_beta: requires n >= 2");
  const double lo = -(2.0 * n - 1.0) / (2.0 * n - 2.0);
  if (!(beta >= lo && beta < -0.5)) {
    throw std::invalid_argument("cd_lower_from_beta: beta " + std::to_string(beta) +
                                " outside [-(2n-1)/(2n-2), -1/2)");
  }
  return lambda + (n - 1.0) / ((n + 2.0) * (2.0 * beta + 1.0)) * (lambda - rho * n / (n - 1.0));
}

double trace_inequality_check(const Eigen::Matrix3d& M) {
  constexpr double tol = 1e-14;
  if (!M.allFinite()) throw std::invalid_argument("trace_inequality_check: non-finite entry");
  if (M.col(0).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("trace_inequality_check: first column must vanish");
  }
  if (std::abs(M(1, 2) - M(2, 1)) > tol) {
    throw std::invalid_argument("trace_inequality_check: lower-right block must be symmetric");
  }
  const double tr = M.trace();
  return (M * M).trace() - 0.5 * tr * tr;
}

double pointwise_logf_inequality(const SymmetricPositiveFunction& f, RuleView rule) {
  return min_cd_gap(f, rule);
}

bool VerificationSummary::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult finish(std::string name, std::size_t count, double max_residual, double tolerance) {
  return {std::move(name), count, max_residual, tolerance, max_residual <= tolerance};
}

CheckResult check_combination(const VerificationOptions& o, Execution exec) {
  const CounterRng rng = CounterRng(o.seed).split(1);
  const std::size_t n = static_cast<std::size_t>(std::max(o.identity_samples, 0));
  std::vector<double> residual(n);
  for_each_index(n, exec, [&](std::size_t i) {
    const int d = 3 + static_cast<int>(rng.bits(0, i) % 8);
    const auto [lo, hi] = beta_range(d);
    double beta = rng.uniform(1, i, lo, hi);
    if (beta == hi) beta = lo;
    const double A = rng.uniform(2, i, -10.0, 10.0);
    const double B = rng.uniform(3, i, -10.0, 10.0);
    residual[i] = combination_residual(d, beta, A, B, o.perturb_tau);
  });
  const double worst = residual.empty() ? 0.0 : *std::max_element(residual.begin(), residual.end());
  return finish("combination_identity", n, worst, 1e-11);
}

CheckResult check_d2(const VerificationOptions& o) {
  const CounterRng rng = CounterRng(o.seed).split(2);
  const ZQuadrature& rule = default_z_rule(2);
  double worst = 0.0;
  const int n = std::max(o.d2_samples, 0);
  for (int i = 0; i < n; ++i) {
    const double c2 = rng.uniform(0, i, -2.0, 2.0);
    const double c4 = rng.uniform(1, i, -2.0, 2.0);
    const AxisymmetricProfile p(2, [c2, c4](double z) {
      const double z2 = z * z;
      return ProfileJet{c2 * z2 + c4 * z2 * z2, 2.0 * c2 * z + 4.0 * c4 * z2 * z,
                        2.0 * c2 + 12.0 * c4 * z2};
    });
    worst = std::max(worst,
                     d2_combination_residual(SymmetricPositiveFunction(p, DensityMode::log_density),
                                             rule));
  }
  return finish("d2_combination", static_cast<std::size_t>(n), worst, 1e-12);
}

CheckResult check_theta_tau_values() {
  double worst = 0.0;
  const auto cmp = [&](ThetaTau got, double theta, double tau) {
    worst = std::max({worst, std::abs(got.theta - theta), std::abs(got.tau - tau)});
  };
  cmp(theta_tau(3, -1.0), 0.25, 1.0 / 16.0);
  cmp(theta_tau(3, -1.5), 0.125, 0.0);
  cmp(theta_tau(2, -1.0), 0.0, 1.0 / 12.0);
  cmp(theta_tau(2, 0.3), 0.0, 1.0 / 12.0);
  return finish("theta_tau_values", 4, worst, 1e-15);
}

CheckResult check_admissibility() {
  constexpr int grid = 2001;
  std::size_t mismatches = 0;
  std::size_t count = 0;
  for (int d = 3; d <= 10; ++d) {
    const auto [lo, hi] = beta_range(d);
    const double a = lo - 1.0;
    const double b = hi + 1.0;
    for (int k = 0; k < grid; ++k) {
      const double beta = a + (b - a) * k / (grid - 1);
      if (beta == -0.5) continue;
      ++count;
      const ThetaTau tt = theta_tau(d, beta);
      const bool by_params = tt.theta >= 0.0 && tt.theta <= 1.0 && tt.tau >= 0.0;
      const bool by_range = beta_admissible(d, beta) && beta <= theta_bounded_beta_max(d);
      if (by_params != by_range) ++mismatches;
    }
  }
  return finish("beta_admissibility", count, static_cast<double>(mismatches), 0.0);
}

CheckResult check_lower_bound_max() {
  constexpr int grid = 1000;
  double worst = 0.0;
  std::size_t count = 0;
  for (int d = 3; d <= 10; ++d) {
    const auto [lo, hi] = beta_range(d);
    double best = -INFINITY;
    for (int k = 0; k < grid; ++k) {
      const double beta = lo + (hi - lo) * k / grid;  // stops short of the pole
      best = std::max(best, lower_bound_from_beta(d, beta));
    }
    count += grid;
    worst = std::max(worst, std::abs(best - lambda_lower(d)));
  }
  return finish("lower_bound_maximum", count, worst, 1e-9);
}

CheckResult check_cd_bound() {
  double worst = 0.0;
  std::size_t count = 0;
  for (int n = 2; n <= 9; ++n) {
    const double lo = -(2.0 * n - 1.0) / (2.0 * n - 2.0);
    for (double lambda : {2.0 * (n + 1), 7.5, 12.0}) {
      for (double rho : {0.0, 1.0, n - 1.0}) {
        ++count;
        worst = std::max(worst, std::abs(cd_lower_from_beta(lambda, rho, n, lo) -
                                         cd_lambda_lower(lambda, rho, n)));
      }
    }
  }
  return finish("cd_bound", count, worst, 1e-12);
}

CheckResult check_cd_specialization() {
  constexpr int grid = 200;
  double worst = 0.0;
  std::size_t count = 0;
  for (int d = 3; d <= 10; ++d) {
    const auto [lo, hi] = beta_range(d);
    for (int k = 0; k < grid; ++k) {
      const double beta = lo + (hi - lo) * k / grid;
      const ThetaTau a = theta_tau(d, beta);
      const ThetaTau b = cd_theta_tau(d - 1.0, beta);
      const double scale = 1.0 + std::abs(a.theta);
      worst = std::max({worst, std::abs(a.theta - b.theta) / scale, std::abs(a.tau - b.tau)});
      ++count;
    }
  }
  return finish("cd_specialization", count, worst, 1e-14);
}

CheckResult check_trace(const VerificationOptions& o) {
  const CounterRng rng = CounterRng(o.seed).split(3);
  const std::size_t n = static_cast<std::size_t>(std::max(o.matrix_samples, 0));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
    M(0, 1) = rng.uniform(0, i, -10.0, 10.0);
    M(0, 2) = rng.uniform(1, i, -10.0, 10.0);
    M(1, 1) = rng.uniform(2, i, -10.0, 10.0);
    M(2, 2) = rng.uniform(3, i, -10.0, 10.0);
    M(1, 2) = M(2, 1) = rng.uniform(4, i, -10.0, 10.0);
    worst = std::max(worst, -trace_inequality_check(M));
  }
  return finish("trace_inequality", n, worst, 1e-12);
}

CheckResult check_pointwise(const VerificationOptions& o) {
  const CounterRng rng = CounterRng(o.seed).split(4);
  const SphereQuadrature& rule = default_sphere_rule();
  const int n = std::max(o.function_samples, 0);
  double worst = std::max(0.0, -pointwise_logf_inequality(make_quartic(0.69214), default_z_rule(3)));
  for (int i = 0; i < n; ++i) {
    SampleSpec spec;
    spec.seed = rng.bits(0, static_cast<std::uint64_t>(i));
    spec.amplitude = rng.uniform(1, static_cast<std::uint64_t>(i), 0.01, 2.0);
    spec.mode = i % 2 == 0 ? SampleMode::log_density : SampleMode::density;
    const SymmetricPositiveFunction f = sample_random_symmetric(spec).function();
    worst = std::max(worst, -min_cd_gap(f, rule));
  }
  return finish("pointwise_logf", static_cast<std::size_t>(n) + 1, worst, 1e-10);
}

}  // namespace

VerificationSummary run_verification_suite(const VerificationOptions& options, Execution exec) {
  VerificationSummary s;
  s.checks.push_back(check_combination(options, exec));
  s.checks.push_back(check_d2(options));
  s.checks.push_back(check_theta_tau_values());
  s.checks.push_back(check_admissibility());
  s.checks.push_back(check_lower_bound_max());
  s.checks.push_back(check_cd_bound());
  s.checks.push_back(check_cd_specialization());
  s.checks.push_back(check_trace(options));
  s.checks.push_back(check_pointwise(options));
  return s;
}

}  // namespace gamma2
