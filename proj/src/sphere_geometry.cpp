#include "gamma2/sphere_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gamma2 {
namespace {

void check_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void check_z(double z) {
  if (!(z >= -1.0 && z <= 1.0)) {
    throw std::invalid_argument("axisymmetric evaluation: z = " + std::to_string(z) +
                                " outside [-1, 1]");
  }
}

}  // namespace

SpherePoint::SpherePoint(Vector sigma) : sigma_(std::move(sigma)) {
  const int d = static_cast<int>(sigma_.size());
  if (d < 2 || d > kMaxDim) {
    throw std::invalid_argument("SpherePoint: dimension " + std::to_string(d) +
                                " outside [2, " + std::to_string(kMaxDim) + "]");
  }
  if (std::abs(sigma_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("SpherePoint: |sigma| differs from 1 by more than 1e-12");
  }
}

SpherePoint SpherePoint::normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("SpherePoint::normalized: zero or non-finite vector");
  }
  return SpherePoint(v / n);
}

SpherePoint SpherePoint::antipode() const { return SpherePoint(-sigma_); }

AmbientFunction::AmbientFunction(int dim, Evaluator eval) : dim_(dim), eval_(std::move(eval)) {
  if (dim < 2 || dim > kMaxDim) {
    throw std::invalid_argument("AmbientFunction: unsupported dimension " + std::to_string(dim));
  }
}

AmbientJet AmbientFunction::operator()(const Vector& x) const {
  check_dim(static_cast<int>(x.size()), dim_, "AmbientFunction");
  return eval_(x);
}

AxisymmetricProfile::AxisymmetricProfile(int dim, Evaluator eval)
    : dim_(dim), eval_(std::move(eval)) {
  if (dim < 2 || dim > kMaxDim) {
    throw std::invalid_argument("AxisymmetricProfile: unsupported dimension " +
                                std::to_string(dim));
  }
}

Vector project_tangent(const SpherePoint& p, const Vector& v) {
  check_dim(p.dim(), static_cast<int>(v.size()), "project_tangent");
  const Vector& s = p.sigma();
  return v - s.dot(v) * s;
}

Vector spherical_gradient(const AmbientJet& jet, const SpherePoint& p) {
  return project_tangent(p, jet.gradient);
}

Matrix spherical_hessian(const AmbientJet& jet, const SpherePoint& p) {
  const int d = p.dim();
  check_dim(d, static_cast<int>(jet.gradient.size()), "spherical_hessian");
  check_dim(d, static_cast<int>(jet.hessian.rows()), "spherical_hessian");
  const Vector& s = p.sigma();
  Matrix proj = Matrix::Identity(d, d) - s * s.transpose();
  Matrix out = proj * jet.hessian * proj;
  out -= s.dot(jet.gradient) * proj;
  // Symmetrize away rounding so downstream norms see an exactly symmetric matrix.
  return 0.5 * (out + out.transpose());
}

double laplace_beltrami(const AmbientJet& jet, const SpherePoint& p) {
  const int d = p.dim();
  check_dim(d, static_cast<int>(jet.gradient.size()), "laplace_beltrami");
  const Vector& s = p.sigma();
  return jet.hessian.trace() - s.dot(jet.hessian * s) - (d - 1) * s.dot(jet.gradient);
}

Vector spherical_gradient(const AmbientFunction& F, const SpherePoint& p) {
  check_dim(F.dim(), p.dim(), "spherical_gradient");
  return spherical_gradient(F(p.sigma()), p);
}

Matrix spherical_hessian(const AmbientFunction& F, const SpherePoint& p) {
  check_dim(F.dim(), p.dim(), "spherical_hessian");
  return spherical_hessian(F(p.sigma()), p);
}

double laplace_beltrami(const AmbientFunction& F, const SpherePoint& p) {
  check_dim(F.dim(), p.dim(), "laplace_beltrami");
  return laplace_beltrami(F(p.sigma()), p);
}

double axi_gradient_sq(const ProfileJet& jet, double z) {
  check_z(z);
  return (1.0 - z * z) * jet.dphi * jet.dphi;
}

double axi_laplacian(const ProfileJet& jet, double z, int dim) {
  check_z(z);
  return (1.0 - z * z) * jet.ddphi - (dim - 1) * z * jet.dphi;
}

double axi_hessian_norm_sq(const ProfileJet& jet, double z, int dim) {
  check_z(z);
  const double meridian = (1.0 - z * z) * jet.ddphi - z * jet.dphi;
  const double latitude = -z * jet.dphi;
  return meridian * meridian + (dim - 2) * latitude * latitude;
}

double axi_gradient_sq(const AxisymmetricProfile& prof, double z) {
  check_z(z);
  return axi_gradient_sq(prof.jet(z), z);
}

double axi_laplacian(const AxisymmetricProfile& prof, double z) {
  check_z(z);
  return axi_laplacian(prof.jet(z), z, prof.dim());
}

double axi_hessian_norm_sq(const AxisymmetricProfile& prof, double z) {
  check_z(z);
  return axi_hessian_norm_sq(prof.jet(z), z, prof.dim());
}

AmbientJet log_jet(const AmbientJet& jet) {
  const double f = jet.value;
  AmbientJet out;
  out.value = std::log(f);
  out.gradient = jet.gradient / f;
  out.hessian = jet.hessian / f - out.gradient * out.gradient.transpose();
  return out;
}

AmbientJet sqrt_jet(const AmbientJet& jet) {
  const double g = std::sqrt(jet.value);
  AmbientJet out;
  out.value = g;
  out.gradient = jet.gradient / (2.0 * g);
  out.hessian = jet.hessian / (2.0 * g) -
                (jet.gradient * jet.gradient.transpose()) / (4.0 * g * jet.value);
  return out;
}

AmbientJet exp_jet(const AmbientJet& jet) {
  const double e = std::exp(jet.value);
  AmbientJet out;
  out.value = e;
  out.gradient = e * jet.gradient;
  out.hessian = e * (jet.hessian + jet.gradient * jet.gradient.transpose());
  return out;
}

ProfileJet log_jet(const ProfileJet& jet) {
  const double l1 = jet.dphi / jet.phi;
  return {std::log(jet.phi), l1, jet.ddphi / jet.phi - l1 * l1};
}

ProfileJet sqrt_jet(const ProfileJet& jet) {
  const double g = std::sqrt(jet.phi);
  return {g, jet.dphi / (2.0 * g),
          jet.ddphi / (2.0 * g) - jet.dphi * jet.dphi / (4.0 * g * jet.phi)};
}

ProfileJet exp_jet(const ProfileJet& jet) {
  const double e = std::exp(jet.phi);
  return {e, e * jet.dphi, e * (jet.ddphi + jet.dphi * jet.dphi)};
}

}  // namespace gamma2
