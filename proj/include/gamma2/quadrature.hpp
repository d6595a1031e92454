#pragma once

// Quadrature against the normalized surface measure of S^{d-1}
// (total mass 1).
//
// For an axisymmetric integrand g(z) the measure pushes forward to the
// density c_d (1 - z^2)^{(d-3)/2} on [-1, 1], so the z-rules are Gauss rules
// for that weight: Gauss-Chebyshev (d = 2), Gauss-Legendre (d = 3) and
// Gauss-Gegenbauer with lambda = (d - 2) / 2 otherwise.

#include <functional>
#include <vector>

#include "gamma2/sphere_geometry.hpp"

namespace gamma2 {

inline constexpr int kDefaultAxisymNodes = 64;
inline constexpr int kDefaultProductZNodes = 64;
inline constexpr int kDefaultProductAzimuthNodes = 128;

struct ZQuadrature {
  std::vector<double> nodes;    // ascending, strictly inside (-1, 1)
  std::vector<double> weights;  // positive, sum to 1
  int dim = 3;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Highest polynomial degree in z integrated exactly.
  int exact_degree() const noexcept { return 2 * static_cast<int>(nodes.size()) - 1; }
};

struct SphereQuadrature {
  std::vector<SpherePoint> points;
  std::vector<double> weights;
  int dim = 3;
  int exact_degree = 0;

  std::size_t size() const noexcept { return points.size(); }
};

/// n-node Gauss rule for the z-marginal of S^{d-1}. Throws for n < 2, d < 2.
ZQuadrature gauss_z_rule(int n, int d);

/// Gauss-Legendre in z times a uniform azimuthal grid on S^2.
/// Requires n_z >= 2 and n_az >= 4.
SphereQuadrature product_sphere_rule(int n_z, int n_az);

/// Cached default rules (64-node z rule per dimension, 64 x 128 product rule).
const ZQuadrature& default_z_rule(int d);
const SphereQuadrature& default_sphere_rule();

/// Sum of w_i g(z_i). Throws NonFiniteValue naming the offending node.
double integrate_axisym(const std::function<double(double)>& g, const ZQuadrature& rule);

/// Sum of w_i g(sigma_i). Throws NonFiniteValue naming the offending node.
double integrate_sphere(const std::function<double(const SpherePoint&)>& g,
                        const SphereQuadrature& rule);

}  // namespace gamma2
