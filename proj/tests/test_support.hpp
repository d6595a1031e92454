#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "gamma2/linalg.hpp"
#include "gamma2/rng.hpp"
#include "gamma2/sphere_geometry.hpp"

namespace testing {

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Fourth-order central differences of a scalar function.
inline double fd1(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline double fd2(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

inline gamma2::Vector unit(int dim, int i) {
  gamma2::Vector v = gamma2::Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

/// Odd double factorial over rising product: E[z^(2k)] on S^{d-1}.
inline double sphere_moment(int d, int k) {
  double m = 1.0;
  for (int j = 0; j < k; ++j) m *= (2.0 * j + 1.0) / (d + 2.0 * j);
  return m;
}

}  // namespace testing
