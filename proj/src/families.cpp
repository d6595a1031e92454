#include "gamma2/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gamma2/errors.hpp"
#include "gamma2/quadrature.hpp"
#include "gamma2/rng.hpp"

namespace gamma2 {
namespace {

void require_positive_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument(std::string(who) + ": t must be positive and finite");
  }
}

bool passes_floor(const Polynomial& p, std::span<const SpherePoint> points) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& pt : points) {
    const double v = p.value(pt.sigma());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo > 0.0 && lo >= kPositivityFloor * hi;
}

Polynomial random_form(const CounterRng& rng, std::uint64_t stream, int dim, int degree,
                       double amplitude, std::uint64_t& index) {
  Polynomial p(dim);
  for (const auto& e : Polynomial::monomials_of_degree(dim, degree)) {
    p.add_term(e, rng.uniform(stream, index++, -amplitude, amplitude));
  }
  return p;
}

double gaussian(const CounterRng& rng, std::uint64_t stream, std::uint64_t index) {
  const double u1 = 1.0 - rng.uniform(stream, 2 * index);
  const double u2 = rng.uniform(stream, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

QuarticFamily::QuarticFamily(double t) : t_(t) { require_positive_t(t, "QuarticFamily"); }

ProfileJet QuarticFamily::jet(double z) const noexcept {
  const double s = z * z + t_;
  return {s * s, 4.0 * z * s, 12.0 * z * z + 4.0 * t_};
}

SymmetricPositiveFunction make_quartic(double t) {
  const QuarticFamily fam(t);
  return SymmetricPositiveFunction(
      AxisymmetricProfile(3, [fam](double z) { return fam.jet(z); }));
}

SymmetricPositiveFunction scaled_quartic(double t) {
  require_positive_t(t, "scaled_quartic");
  return SymmetricPositiveFunction(AxisymmetricProfile(3, [t](double z) {
    const double s = 1.0 + z * z / t;
    return ProfileJet{s * s, 4.0 * z * s / t, 4.0 / t + 12.0 * z * z / (t * t)};
  }));
}

SymmetricPositiveFunction make_constant(double c, int dim) {
  if (!(c > 0.0)) throw std::invalid_argument("make_constant: c must be positive");
  return SymmetricPositiveFunction(AxisymmetricProfile(dim, [c](double) {
    return ProfileJet{c, 0.0, 0.0};
  }));
}

SymmetricPositiveFunction EvenPolynomialFunction::function() const {
  return SymmetricPositiveFunction(polynomial.as_ambient(), mode);
}

EvenPolynomialFunction sample_random_symmetric(const SampleSpec& spec,
                                               std::span<const SpherePoint> check_points) {
  if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
    throw std::invalid_argument("sample_random_symmetric: amplitude must be finite and >= 0");
  }
  if (spec.max_degree != 2 && spec.max_degree != 4) {
    throw std::invalid_argument("sample_random_symmetric: max_degree must be 2 or 4");
  }
  if (spec.dim < 2 || spec.dim > kMaxDim) {
    throw std::invalid_argument("sample_random_symmetric: unsupported dimension");
  }
  const CounterRng rng(spec.seed);

  if (spec.mode == SampleMode::log_density) {
    std::uint64_t index = 0;
    Polynomial p(spec.dim);
    for (int deg = 2; deg <= spec.max_degree; deg += 2) {
      p += random_form(rng, 0, spec.dim, deg, spec.amplitude, index);
    }
    return {p, DensityMode::log_density, 1};
  }

  std::vector<SpherePoint> own_points;
  if (check_points.empty()) {
    if (spec.dim == 3) {
      check_points = default_sphere_rule().points;
    } else {
      own_points = random_sphere_points(spec.dim, 4096, spec.seed);
      check_points = own_points;
    }
  }
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    std::uint64_t index = 0;
    Polynomial q = Polynomial::constant(spec.dim, 1.0) +
                   random_form(rng, static_cast<std::uint64_t>(attempt), spec.dim, 2,
                               spec.amplitude, index);
    Polynomial p = spec.max_degree == 4 ? q * q : q;
    if (passes_floor(p, check_points)) return {p, DensityMode::density, attempt + 1};
  }
  throw PositivityError("sample_random_symmetric: positivity floor unattainable after " +
                        std::to_string(kMaxSampleAttempts) + " attempts");
}

std::vector<SpherePoint> random_sphere_points(int dim, std::size_t count, std::uint64_t seed) {
  const CounterRng rng = CounterRng(seed).split(0x5eed'0f'5a'5a);
  std::vector<SpherePoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gaussian(rng, k, static_cast<std::uint64_t>(i));
    out.push_back(SpherePoint::normalized(v));
  }
  return out;
}

Polynomial random_harmonic(int dim, int degree, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_harmonic: need dim >= 2");
  if (degree < 0) throw std::invalid_argument("random_harmonic: negative degree");
  const CounterRng rng = CounterRng(seed).split(0x4a12);
  Vector a(dim), b(dim);
  for (int i = 0; i < dim; ++i) {
    a(i) = gaussian(rng, 0, static_cast<std::uint64_t>(i));
    b(i) = gaussian(rng, 1, static_cast<std::uint64_t>(i));
  }
  a.normalize();
  b -= a.dot(b) * a;
  b.normalize();

  Polynomial la(dim), lb(dim);
  for (int i = 0; i < dim; ++i) {
    la += Polynomial::coordinate(dim, i) * a(i);
    lb += Polynomial::coordinate(dim, i) * b(i);
  }
  // Re (la + i lb)^k = sum over even j of C(k, j) (-1)^{j/2} la^{k-j} lb^j.
  Polynomial out(dim);
  double binom = 1.0;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) binom = binom * (degree - j + 1) / j;
    if (j % 2 != 0) continue;
    Polynomial term = Polynomial::constant(dim, binom * ((j / 2) % 2 == 0 ? 1.0 : -1.0));
    for (int k = 0; k < degree - j; ++k) term = term * la;
    for (int k = 0; k < j; ++k) term = term * lb;
    out += term;
  }
  return out;
}

SymmetricPositiveFunction build_family(const FamilyDescriptor& desc) {
  if (desc.family == "quartic") return make_quartic(desc.t);
  if (desc.family == "scaled_quartic") return scaled_quartic(desc.t);
  if (desc.family == "constant") return make_constant(desc.c, desc.sample.dim);
  if (desc.family == "even_poly") return sample_random_symmetric(desc.sample).function();
  throw std::invalid_argument("unknown family '" + desc.family + "'");
}

}  // namespace gamma2
