#pragma once

// Test functions: the quartic family (z^2 + t)^2 on S^2, its rescaled form
// (1 + z^2/t)^2, constants, and seeded random even polynomials.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gamma2/functionals.hpp"
#include "gamma2/polynomial.hpp"

namespace gamma2 {

/// h(z) = (z^2 + t)^2 on S^2.
class QuarticFamily {
 public:
  explicit QuarticFamily(double t);

  double t() const noexcept { return t_; }
  ProfileJet jet(double z) const noexcept;
  /// int h dsigma = t^2 + 2t/3 + 1/5.
  double mass() const noexcept { return t_ * t_ + 2.0 * t_ / 3.0 + 0.2; }

 private:
  double t_;
};

SymmetricPositiveFunction make_quartic(double t);
/// (1 + z^2/t)^2 = h / t^2; every ratio matches make_quartic(t).
SymmetricPositiveFunction scaled_quartic(double t);
SymmetricPositiveFunction make_constant(double c, int dim = 3);

enum class SampleMode { log_density, density };

struct SampleSpec {
  std::uint64_t seed = 0;
  double amplitude = 1.0;
  SampleMode mode = SampleMode::log_density;
  int dim = 3;
  /// 2 or 4. In density mode 4 means f = q^2 with q = 1 + (random quadratic
  /// form), and 2 means f = q.
  int max_degree = 4;
};

/// Resampling budget for density mode.
inline constexpr int kMaxSampleAttempts = 100;

struct EvenPolynomialFunction {
  Polynomial polynomial;
  DensityMode mode = DensityMode::log_density;
  int attempts = 1;

  SymmetricPositiveFunction function() const;
};

/// Coefficients are uniform in [-amplitude, amplitude] per monomial and are a
/// pure function of (seed, attempt). Density-mode samples are redrawn until
/// the positivity floor holds on `check_points` (the default product rule
/// when empty and dim == 3, otherwise 4096 seeded random points); throws
/// PositivityError after kMaxSampleAttempts draws.
EvenPolynomialFunction sample_random_symmetric(const SampleSpec& spec,
                                               std::span<const SpherePoint> check_points = {});

/// Seeded uniformly distributed points on S^{dim-1}.
std::vector<SpherePoint> random_sphere_points(int dim, std::size_t count, std::uint64_t seed);

/// Re(((a + i b) . x)^degree) for a random orthonormal pair (a, b); harmonic
/// on R^dim, hence a degree-`degree` spherical harmonic. Needs dim >= 2.
Polynomial random_harmonic(int dim, int degree, std::uint64_t seed);

/// Serializable description of a test function.
struct FamilyDescriptor {
  std::string family = "quartic";  // quartic | scaled_quartic | constant | even_poly
  double t = 1.0;                  // quartic, scaled_quartic
  double c = 1.0;                  // constant
  SampleSpec sample;               // even_poly
};

SymmetricPositiveFunction build_family(const FamilyDescriptor& desc);

}  // namespace gamma2
