#pragma once

// Spherical calculus on S^{d-1} for functions given either as ambient
// extensions on R^d or as axisymmetric profiles of z = sigma_d.
//
// Projection route, with P = I - sigma sigma^T:
//   grad_s F = P grad F
//   hess_s F = P (Hess F) P - (sigma . grad F) P
//   lap_s F  = tr(Hess F) - sigma^T (Hess F) sigma - (d - 1) sigma . grad F
//
// Axisymmetric route for f(sigma) = phi(z):
//   |grad_s f|^2 = (1 - z^2) phi'^2
//   lap_s f      = (1 - z^2) phi'' - (d - 1) z phi'
//   hess_s f has the meridian eigenvalue (1 - z^2) phi'' - z phi' and the
//   latitude eigenvalue -z phi' with multiplicity d - 2.

#include <functional>

#include "gamma2/linalg.hpp"

namespace gamma2 {

class SpherePoint {
 public:
  /// Throws std::invalid_argument unless |sigma| = 1 to 1e-12 and 2 <= d <= kMaxDim.
  explicit SpherePoint(Vector sigma);

  /// Normalizes v first; v must be nonzero.
  static SpherePoint normalized(const Vector& v);

  const Vector& sigma() const noexcept { return sigma_; }
  int dim() const noexcept { return static_cast<int>(sigma_.size()); }
  /// Last coordinate, the axis of axisymmetric profiles.
  double z() const noexcept { return sigma_(sigma_.size() - 1); }

  SpherePoint antipode() const;

 private:
  Vector sigma_;
};

/// Value, gradient and Hessian of a function on R^d at one point.
struct AmbientJet {
  double value = 0.0;
  Vector gradient;
  Matrix hessian;
};

/// An ambient extension F on R^d with analytic derivatives.
class AmbientFunction {
 public:
  using Evaluator = std::function<AmbientJet(const Vector&)>;

  AmbientFunction(int dim, Evaluator eval);

  int dim() const noexcept { return dim_; }
  AmbientJet operator()(const Vector& x) const;

 private:
  int dim_;
  Evaluator eval_;
};

/// phi(z) and its first two derivatives.
struct ProfileJet {
  double phi = 0.0;
  double dphi = 0.0;
  double ddphi = 0.0;
};

/// A function of z = sigma_d on S^{d-1}.
class AxisymmetricProfile {
 public:
  using Evaluator = std::function<ProfileJet(double)>;

  AxisymmetricProfile(int dim, Evaluator eval);

  int dim() const noexcept { return dim_; }
  ProfileJet jet(double z) const { return eval_(z); }
  double phi(double z) const { return eval_(z).phi; }
  double dphi(double z) const { return eval_(z).dphi; }
  double ddphi(double z) const { return eval_(z).ddphi; }

 private:
  int dim_;
  Evaluator eval_;
};

Vector project_tangent(const SpherePoint& p, const Vector& v);

Vector spherical_gradient(const AmbientJet& jet, const SpherePoint& p);
Matrix spherical_hessian(const AmbientJet& jet, const SpherePoint& p);
double laplace_beltrami(const AmbientJet& jet, const SpherePoint& p);

Vector spherical_gradient(const AmbientFunction& F, const SpherePoint& p);
Matrix spherical_hessian(const AmbientFunction& F, const SpherePoint& p);
double laplace_beltrami(const AmbientFunction& F, const SpherePoint& p);

// Axisymmetric reductions. All throw std::invalid_argument for z outside [-1, 1].
double axi_gradient_sq(const ProfileJet& jet, double z);
double axi_laplacian(const ProfileJet& jet, double z, int dim);
double axi_hessian_norm_sq(const ProfileJet& jet, double z, int dim);

double axi_gradient_sq(const AxisymmetricProfile& prof, double z);
double axi_laplacian(const AxisymmetricProfile& prof, double z);
double axi_hessian_norm_sq(const AxisymmetricProfile& prof, double z);

// Chain rule for log F and sqrt F; the input value must be positive.
AmbientJet log_jet(const AmbientJet& jet);
AmbientJet sqrt_jet(const AmbientJet& jet);
/// Jet of exp(G) from the jet of G.
AmbientJet exp_jet(const AmbientJet& jet);
ProfileJet log_jet(const ProfileJet& jet);
ProfileJet sqrt_jet(const ProfileJet& jet);
ProfileJet exp_jet(const ProfileJet& jet);

}  // namespace gamma2
