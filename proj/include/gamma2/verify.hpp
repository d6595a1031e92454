#pragma once

// Executable form of the lower-bound argument. With A = lap_s log f and
// B = |grad_s log f|^2, the quadratic form
//   Q1 = A^2 - ((d+1)/(d-2) beta - (d-5)/(2(d-2))) AB
//        + (beta^2 + (d-3)/(d-2) beta + (d-3)/(2(d-2))) B^2
// (whose integral against f is >= (d - 1) i(f)) is blended with (A + B/2)^2
// (whose integral is >= 2d i(f)) so that
//   theta Q1 + (1 - theta)(A + B/2)^2 = (A + B)(A + B/2) - tau B^2
// holds identically in A and B.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gamma2/functionals.hpp"
#include "gamma2/kernels.hpp"

namespace gamma2 {

struct ThetaTau {
  double theta = 0.0;
  double tau = 0.0;
};

/// theta = -(d-2)/((d+1)(2 beta + 1)), tau = (2(d-2) beta + 2d - 3)/(4(d+1)).
/// d = 2 takes a separate branch returning (0, 1/12) for every beta.
/// Throws std::invalid_argument for d < 2 or (d >= 3 and beta = -1/2).
ThetaTau theta_tau(int d, double beta);

/// Q1(A, B) above. Requires d >= 3.
double quadratic_q1(int d, double beta, double A, double B);

/// |theta Q1 + (1 - theta)(A + B/2)^2 - [(A + B)(A + B/2) - (tau + tau_offset) B^2]|.
/// tau_offset is a negative-control hook. Requires d >= 3 and beta != -1/2.
double combination_residual(int d, double beta, double A, double B, double tau_offset = 0.0);

/// The d = 2 analogue only holds after integration:
///   int f [(A + B)(A + B/2) - B^2/12 - (A + B/2)^2] = int f (3AB + B^2)/6 = 0 on S^1.
/// Returns |that integral| / int f (1 + A^2 + B^2). f must be a d = 2 axisymmetric function.
double d2_combination_residual(const SymmetricPositiveFunction& f, const ZQuadrature& rule);

/// Closed interval [-(2d-3)/(2d-4), -1/2] for d >= 3.
std::pair<double, double> beta_range(int d);
bool beta_admissible(int d, double beta);
/// Largest beta with theta <= 1: -(2d-1)/(2(d+1)). Inside beta_range the
/// blend is a convex combination only up to this point.
double theta_bounded_beta_max(int d);

/// 2d + (d-2)/(2 beta + 1). Throws std::invalid_argument unless admissible
/// and beta != -1/2.
double lower_bound_from_beta(int d, double beta);

/// theta = -(n-1)/((n+2)(2 beta + 1)), tau = (2(n-1) beta + 2n - 1)/(4(n+2)).
/// Requires n >= 2 and beta != -1/2.
ThetaTau cd_theta_tau(double n, double beta);

/// lambda + (n-1)/((n+2)(2 beta + 1)) (lambda - rho n/(n-1)) for
/// beta in [-(2n-1)/(2n-2), -1/2).
double cd_lower_from_beta(double lambda, double rho, double n, double beta);

/// tr(M^2) - tr(M)^2/2 for a 3x3 matrix with zero first column and
/// M(1,2) = M(2,1) (both to 1e-14). Throws std::invalid_argument otherwise.
double trace_inequality_check(const Eigen::Matrix3d& M);

/// Minimum over nodes of |hess_s log f|^2 - (lap_s log f)^2/(d - 1).
double pointwise_logf_inequality(const SymmetricPositiveFunction& f, RuleView rule);

struct VerificationOptions {
  std::uint64_t seed = 20240101;
  int identity_samples = 10000;
  int matrix_samples = 10000;
  int function_samples = 100;
  int d2_samples = 50;
  /// Added to tau inside the combination check; nonzero values must fail it.
  double perturb_tau = 0.0;
};

struct CheckResult {
  std::string name;
  std::size_t count = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationSummary {
  std::vector<CheckResult> checks;
  bool all_passed() const noexcept;
};

/// Check names: combination_identity, d2_combination, theta_tau_values,
/// beta_admissibility, lower_bound_maximum, cd_bound, cd_specialization,
/// trace_inequality, pointwise_logf.
VerificationSummary run_verification_suite(const VerificationOptions& options = {},
                                           Execution exec = Execution::parallel);

}  // namespace gamma2
