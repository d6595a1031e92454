#pragma once

// Closed-form bounds on the optimal constants for positive antipodally
// symmetric functions on S^{d-1}:
//   lambda_d  first nonzero eigenvalue of -lap on the symmetric class (= 2d)
//   alpha_d   optimal log-Sobolev constant
//   Lambda_d  optimal Gamma_2 criterion constant
// with lambda_d >= alpha_d >= Lambda_d. For comparison, without the symmetry
// restriction all three equal d - 1.
//
// The sphere S^{d-1} satisfies CD(rho, n) with (rho, n) = (d - 2, d - 1).

#include <functional>
#include <optional>

namespace gamma2 {

/// Lambda_d >= d + 3 - 1/(d - 1). Requires d >= 2.
double lambda_lower(int d);

/// Lower bound on Lambda_M under CD(rho, n) with first eigenvalue lambda_M:
/// (4n - 1)/(n(n + 2)) lambda_M + (n - 1)^2/(n(n + 2)) * rho n/(n - 1).
double cd_lambda_lower(double lambda_m, double rho, double n);

/// rho n / (n - 1), the Bakry-Emery bound on Lambda_M (and so on alpha_M).
double bakry_emery_lower(double rho, double n);

/// 4n/(n + 1)^2 lambda + (n - 1)^2/(n + 1)^2 * rho n/(n - 1), a bound on alpha_M.
double rothaus_lower(double lambda, double rho, double n);

/// rho n / (n - 1) as a bound on the first eigenvalue.
double lichnerowicz_lower(double rho, double n);

/// Gamma_2 ratio of (z^2 + t)^2 on S^2 in closed form:
/// 5(3t + 1)(3t + 2) - 15(t + 1)(3t + 1) sqrt(t) atan(1/sqrt(t)).
double upper_U(double t);

/// Log-Sobolev ratio of (z^2 + t)^2 on S^2 in closed form (the reciprocal of
/// the bracketed entropy expression). Throws std::domain_error when the
/// bracket is <= 1e-14.
double upper_alpha_expr(double t);

struct BoundReport {
  int d = 3;
  double lambda_d = 0.0;
  double lambda_lower = 0.0;
  double cd_lower = 0.0;
  double bakry_emery = 0.0;
  double rothaus = 0.0;
  double lichnerowicz = 0.0;
  std::optional<double> upper_lambda3;  // d == 3 only
  std::optional<double> upper_alpha3;   // d == 3 only
};

/// All bounds for dimension d; the d = 3 upper bounds come from minimizing
/// upper_U and upper_alpha_expr.
BoundReport bound_report(int d);

struct ScalarMinResult {
  double t_star = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

inline constexpr int kPrescanPoints = 1000;

/// Golden-section minimization on [lo, hi] after a kPrescanPoints grid scan
/// (log-spaced when lo > 0, linear otherwise). The scan rejects objectives
/// with more than one interior local minimum on the grid. Throws
/// NonFiniteValue if fn returns NaN or infinity.
ScalarMinResult minimize_scalar(const std::function<double(double)>& fn, double lo, double hi,
                                double tol);

/// Search bracket and tolerance used for the d = 3 upper bounds.
inline constexpr double kUpperBracketLo = 1e-3;
inline constexpr double kUpperBracketHi = 100.0;
inline constexpr double kUpperTolerance = 1e-6;

ScalarMinResult minimize_upper_lambda3();
ScalarMinResult minimize_upper_alpha3();

}  // namespace gamma2
