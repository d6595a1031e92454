#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gamma2/errors.hpp"
#include "gamma2/quadrature.hpp"
#include "test_support.hpp"

using namespace gamma2;

namespace {

// Mean of prod x_i^{a_i} over S^{d-1}: zero unless every a_i is even, else
// prod (a_i - 1)!! / (d (d + 2) ... (d + |a| - 2)).
double monomial_moment(const std::vector<int>& a) {
  const int d = static_cast<int>(a.size());
  int total = 0;
  double num = 1.0;
  for (int ai : a) {
    if (ai % 2) return 0.0;
    for (int k = ai - 1; k > 0; k -= 2) num *= k;
    total += ai;
  }
  double den = 1.0;
  for (int j = 0; j < total; j += 2) den *= d + j;
  return num / den;
}

}  // namespace

TEST_CASE("z rules are normalized, positive and sorted") {
  for (int d = 2; d <= 9; ++d) {
    for (int n : {2, 3, 7, 16, 64, 101}) {
      const ZQuadrature r = gauss_z_rule(n, d);
      CHECK(r.size() == static_cast<std::size_t>(n));
      CHECK(r.dim == d);
      double sum = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(std::abs(r.nodes[i]) < 1.0);
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        sum += r.weights[i];
      }
      CHECK(std::abs(sum - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("z rules integrate even moments exactly up to degree 2n - 1") {
  for (int d = 2; d <= 9; ++d) {
    for (int n : {2, 5, 12, 64}) {
      const ZQuadrature r = gauss_z_rule(n, d);
      for (int k = 0; 2 * k <= r.exact_degree(); ++k) {
        const double got = integrate_axisym([k](double z) { return std::pow(z, 2 * k); }, r);
        CHECK(std::abs(got - testing::sphere_moment(d, k)) < 1e-13);
      }
      CHECK(std::abs(integrate_axisym([](double z) { return z * z * z; }, r)) < 1e-15);
    }
  }
}

TEST_CASE("z rule examples") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(integrate_axisym([](double) { return 1.0; }, gauss_z_rule(4, d)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(integrate_axisym([](double z) { return z * z; }, gauss_z_rule(4, d)) ==
          doctest::Approx(1.0 / d).epsilon(1e-14));
  }
  const ZQuadrature& r = default_z_rule(3);
  CHECK(std::abs(integrate_axisym([](double z) { return 1.0 / (z * z + 1.0); }, r) -
                 std::numbers::pi / 4) < 1e-14);
  for (double t : {0.05, 0.3, 2.0}) {
    // Poles at +-i sqrt(t) slow the convergence as t shrinks.
    const double tol = t < 0.1 ? 1e-11 : 1e-13;
    const double expected = std::atan(1 / std::sqrt(t)) / std::sqrt(t);
    CHECK(testing::rel_err(integrate_axisym([t](double z) { return 1.0 / (z * z + t); }, r),
                           expected) < tol);
    CHECK(std::abs(integrate_axisym([t](double z) { return std::pow(z * z + t, 2); }, r) -
                   (t * t + 2 * t / 3 + 0.2)) < 1e-14);
  }
  CHECK(std::abs(integrate_axisym([](double z) { return std::pow(z * z - 1.0 / 3, 2); }, r) -
                 4.0 / 45) < 1e-15);
}

TEST_CASE("z rule preconditions and error reporting") {
  CHECK_THROWS_AS(gauss_z_rule(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gauss_z_rule(8, 1), std::invalid_argument);
  CHECK_THROWS_AS(integrate_axisym([](double z) { return 1.0 / z; }, gauss_z_rule(3, 3)),
                  NonFiniteValue);
  CHECK(&default_z_rule(4) == &default_z_rule(4));
  CHECK(default_z_rule(5).size() == static_cast<std::size_t>(kDefaultAxisymNodes));
}

TEST_CASE("z rules converge under doubling") {
  for (int d = 3; d <= 7; ++d) {
    const auto g = [](double z) { return std::exp(std::cos(3 * z)) / (1.2 + z * z); };
    const double a = integrate_axisym(g, gauss_z_rule(32, d));
    const double b = integrate_axisym(g, gauss_z_rule(64, d));
    CHECK(std::abs(a - b) < 1e-13);
  }
}

TEST_CASE("product rule on S^2") {
  const SphereQuadrature& r = default_sphere_rule();
  CHECK(r.size() == static_cast<std::size_t>(kDefaultProductZNodes * kDefaultProductAzimuthNodes));
  double sum = 0.0;
  for (double w : r.weights) {
    CHECK(w > 0.0);
    sum += w;
  }
  CHECK(std::abs(sum - 1.0) < 1e-13);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double got = integrate_sphere(
          [i, j](const SpherePoint& p) { return p.sigma()(i) * p.sigma()(j); }, r);
      CHECK(std::abs(got - (i == j ? 1.0 / 3 : 0.0)) < 1e-12);
    }
  }
  const auto x2y2 = [](const SpherePoint& p) {
    return std::pow(p.sigma()(0) * p.sigma()(1), 2);
  };
  CHECK(std::abs(integrate_sphere(x2y2, r) - 1.0 / 15) < 1e-14);
  CHECK(std::abs(integrate_sphere([](const SpherePoint& p) { return p.sigma()(0); }, r)) < 1e-15);
  for (double t : {0.1, 1.0, 4.0}) {
    const auto h = [t](const SpherePoint& p) { return std::pow(p.z() * p.z() + t, 2); };
    CHECK(std::abs(integrate_sphere(h, r) - (t * t + 2 * t / 3 + 0.2)) < 1e-13);
  }
}

TEST_CASE("product rule exactness degree") {
  const int nz = 6;
  const int naz = 10;
  const SphereQuadrature r = product_sphere_rule(nz, naz);
  CHECK(r.exact_degree == std::min(2 * nz - 1, naz - 1));
  for (int a = 0; a <= r.exact_degree; ++a) {
    for (int b = 0; a + b <= r.exact_degree; ++b) {
      for (int c = 0; a + b + c <= r.exact_degree; ++c) {
        const double got = integrate_sphere(
            [a, b, c](const SpherePoint& p) {
              return std::pow(p.sigma()(0), a) * std::pow(p.sigma()(1), b) *
                     std::pow(p.sigma()(2), c);
            },
            r);
        CHECK(std::abs(got - monomial_moment({a, b, c})) < 1e-14);
      }
    }
  }
  CHECK_THROWS_AS(product_sphere_rule(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(product_sphere_rule(4, 3), std::invalid_argument);
}

TEST_CASE("axisymmetric integrands agree between the two rule types") {
  const auto g = [](double z) { return std::exp(0.7 * z * z) * (1.0 + z * z * z * z); };
  const double a = integrate_axisym(g, default_z_rule(3));
  const double b = integrate_sphere([&](const SpherePoint& p) { return g(p.z()); },
                                    default_sphere_rule());
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("product rule is antipodally symmetric") {
  const SphereQuadrature& r = default_sphere_rule();
  const auto g = [](const SpherePoint& p) {
    const Vector& s = p.sigma();
    return std::exp(s(0) * s(1) + 0.3 * s(2) * s(2)) + s(0) * s(0) * s(1) * s(2);
  };
  const double direct = integrate_sphere(g, r);
  const double flipped = integrate_sphere([&](const SpherePoint& p) { return g(p.antipode()); }, r);
  CHECK(std::abs(direct - flipped) < 1e-14);
  CHECK_THROWS_AS(
      integrate_sphere([](const SpherePoint& p) { return std::log(p.sigma()(0) - 2.0); }, r),
      NonFiniteValue);
}
