#include "gamma2/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamma2/errors.hpp"

namespace gamma2 {
namespace {

void require_n(double n, const char* who) {
  if (!(n >= 2.0)) throw std::invalid_argument(std::string(who) + ": need n >= 2");
}

void require_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument(std::string(who) + ": t must be positive and finite");
  }
}

double checked(const std::function<double(double)>& fn, double t) {
  const double v = fn(t);
  if (!std::isfinite(v)) {
    throw NonFiniteValue("minimize_scalar: objective is not finite at t = " + std::to_string(t));
  }
  return v;
}

}  // namespace

double lambda_lower(int d) {
  if (d < 2) throw std::invalid_argument("lambda_lower: need d >= 2");
  return d + 3.0 - 1.0 / (d - 1.0);
}

double cd_lambda_lower(double lambda_m, double rho, double n) {
  require_n(n, "cd_lambda_lower");
  const double denom = n * (n + 2.0);
  return (4.0 * n - 1.0) / denom * lambda_m +
         (n - 1.0) * (n - 1.0) / denom * bakry_emery_lower(rho, n);
}

double bakry_emery_lower(double rho, double n) {
  require_n(n, "bakry_emery_lower");
  return rho * n / (n - 1.0);
}

double rothaus_lower(double lambda, double rho, double n) {
  require_n(n, "rothaus_lower");
  const double np1sq = (n + 1.0) * (n + 1.0);
  return 4.0 * n / np1sq * lambda + (n - 1.0) * (n - 1.0) / np1sq * bakry_emery_lower(rho, n);
}

double lichnerowicz_lower(double rho, double n) {
  require_n(n, "lichnerowicz_lower");
  return rho * n / (n - 1.0);
}

namespace {

// Above this t both closed forms are evaluated with their O(t^2) leading
// terms cancelled analytically.
constexpr double kLargeT = 16.0;

// sum_{k>=3} (-u)^k / (2k + 1), the tail of sqrt(t) atan(1/sqrt(t)) in u = 1/t.
double atan_tail(double u) {
  double sum = 0.0;
  double pw = -u * u * u;
  for (int k = 3; k < 200; ++k) {
    const double term = pw / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    pw *= -u;
  }
  return sum;
}

// log1p(r) - r for |r| < 1/2.
double log1p_minus_linear(double r) {
  double sum = 0.0;
  double pw = r * r;
  for (int k = 2; k < 200; ++k) {
    const double term = (k % 2 == 0 ? -pw : pw) / k;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    pw *= r;
  }
  return sum;
}

}  // namespace

double upper_U(double t) {
  require_t(t, "upper_U");
  if (t >= kLargeT) {
    const double p = 45.0 * t * t + 60.0 * t + 15.0;
    return 6.0 - 7.0 / t - 3.0 / (t * t) - p * atan_tail(1.0 / t);
  }
  const double s = std::sqrt(t);
  return 5.0 * (3.0 * t + 1.0) * (3.0 * t + 2.0) -
         15.0 * (t + 1.0) * (3.0 * t + 1.0) * s * std::atan(1.0 / s);
}

double upper_alpha_expr(double t) {
  require_t(t, "upper_alpha_expr");
  const double m = t * t + 2.0 * t / 3.0 + 0.2;
  double bracket = 0.0;
  if (t >= kLargeT) {
    const double r = (4.0 * t / 3.0 + 0.8) / m;  // (t + 1)^2 / m - 1
    bracket = 1.0 + 2.0 * t * t * atan_tail(1.0 / t) + 15.0 / 16.0 * m * log1p_minus_linear(r);
  } else {
    const double s = std::sqrt(t);
    bracket = 2.0 * t * t * s * std::atan(1.0 / s) +
              15.0 / 16.0 * m * std::log((t * t + 2.0 * t + 1.0) / m) -
              (120.0 * t * t + 35.0 * t + 9.0) / 60.0;
  }
  if (!(bracket > 1e-14)) {
    throw std::domain_error("upper_alpha_expr: entropy bracket is not positive at t = " +
                            std::to_string(t));
  }
  return 1.0 / bracket;
}

ScalarMinResult minimize_scalar(const std::function<double(double)>& fn, double lo, double hi,
                                double tol) {
  if (!(lo < hi)) throw std::invalid_argument("minimize_scalar: need lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_scalar: need tol > 0");

  const bool log_grid = lo > 0.0;
  std::vector<double> grid(kPrescanPoints), vals(kPrescanPoints);
  for (int i = 0; i < kPrescanPoints; ++i) {
    const double u = static_cast<double>(i) / (kPrescanPoints - 1);
    grid[i] = log_grid ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    vals[i] = checked(fn, grid[i]);
  }
  grid.front() = lo;
  grid.back() = hi;

  int best = 0;
  int local_minima = 0;
  for (int i = 0; i < kPrescanPoints; ++i) {
    if (vals[i] < vals[best]) best = i;
    if (i > 0 && i + 1 < kPrescanPoints && vals[i] < vals[i - 1] && vals[i] <= vals[i + 1]) {
      ++local_minima;
    }
  }
  if (local_minima > 1) {
    throw std::domain_error("minimize_scalar: objective has " + std::to_string(local_minima) +
                            " local minima on the pre-scan grid");
  }

  ScalarMinResult r;
  r.evaluations = kPrescanPoints;
  double a = grid[std::max(best - 1, 0)];
  double b = grid[std::min(best + 1, kPrescanPoints - 1)];

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = checked(fn, c);
  double fd = checked(fn, d);
  r.evaluations += 2;
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = checked(fn, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = checked(fn, d);
    }
    ++r.evaluations;
  }
  r.t_star = 0.5 * (a + b);
  r.value = checked(fn, r.t_star);
  ++r.evaluations;
  // Never report worse than the best sampled point.
  if (vals[best] < r.value) {
    r.t_star = grid[best];
    r.value = vals[best];
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  return r;
}

ScalarMinResult minimize_upper_lambda3() {
  return minimize_scalar(upper_U, kUpperBracketLo, kUpperBracketHi, kUpperTolerance);
}

ScalarMinResult minimize_upper_alpha3() {
  return minimize_scalar(upper_alpha_expr, kUpperBracketLo, kUpperBracketHi, kUpperTolerance);
}

BoundReport bound_report(int d) {
  if (d < 2) throw std::invalid_argument("bound_report: need d >= 2");
  BoundReport r;
  r.d = d;
  r.lambda_d = 2.0 * d;
  r.lambda_lower = lambda_lower(d);
  const double rho = d - 2.0;
  const double n = d - 1.0;
  if (d >= 3) {
    r.cd_lower = cd_lambda_lower(r.lambda_d, rho, n);
    r.bakry_emery = bakry_emery_lower(rho, n);
    r.rothaus = rothaus_lower(r.lambda_d, rho, n);
    r.lichnerowicz = lichnerowicz_lower(rho, n);
  } else {
    // S^1 is CD(0, 1) and the n >= 2 formulas degenerate. Along the sphere
    // family rho n/(n - 1) = d - 1, so use its value 1 and the resulting
    // limits lambda_d for the cd and Rothaus combinations.
    r.cd_lower = r.lambda_d;
    r.bakry_emery = d - 1.0;
    r.rothaus = r.lambda_d;
    r.lichnerowicz = d - 1.0;
  }
  if (d == 3) {
    r.upper_lambda3 = minimize_upper_lambda3().value;
    r.upper_alpha3 = minimize_upper_alpha3().value;
  }
  return r;
}

}  // namespace gamma2
