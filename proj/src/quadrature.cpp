#include "gamma2/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gamma2/errors.hpp"
#include "gamma2/kernels.hpp"

namespace gamma2 {
namespace {

struct GegenbauerValue {
  double value;
  double derivative;
};

// C_n^lambda(x) by the three-term recurrence, and its derivative from
// (1 - x^2) C_n' = -n x C_n + (n + 2 lambda - 1) C_{n-1}.
GegenbauerValue gegenbauer(int n, double lambda, double x) {
  double prev = 1.0;
  double cur = 2.0 * lambda * x;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * x * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  const double deriv = (-n * x * cur + (n + 2.0 * lambda - 1.0) * prev) / (1.0 - x * x);
  return {cur, deriv};
}

ZQuadrature chebyshev_rule(int n) {
  ZQuadrature rule;
  rule.dim = 2;
  rule.nodes.resize(n);
  rule.weights.assign(n, 1.0 / n);
  for (int i = 0; i < n; ++i) {
    // Ascending order; mirror so the node set is exactly antisymmetric.
    const int j = n - 1 - i;
    if (i < j) {
      const double x = std::cos(std::numbers::pi * (2.0 * i + 1.0) / (2.0 * n));
      rule.nodes[j] = x;
      rule.nodes[i] = -x;
    } else if (i == j) {
      rule.nodes[i] = 0.0;
    }
  }
  return rule;
}

ZQuadrature gegenbauer_rule(int n, int d) {
  const double lambda = 0.5 * (d - 2);

  // Golub-Welsch eigenvalues seed Newton on the recurrence.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) {
    sub(k - 1) = std::sqrt(k * (k + 2.0 * lambda - 1.0) /
                           (4.0 * (k + lambda) * (k + lambda - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guess = solver.eigenvalues();  // ascending

  ZQuadrature rule;
  rule.dim = d;
  rule.nodes.assign(n, 0.0);
  std::vector<double> raw(n, 0.0);
  for (int i = n / 2; i < n; ++i) {
    double x = guess(i);
    GegenbauerValue c{};
    if (2 * i + 1 == n) {
      x = 0.0;
      c = gegenbauer(n, lambda, x);
    } else {
      for (int iter = 0; iter < 100; ++iter) {
        c = gegenbauer(n, lambda, x);
        const double dx = c.value / c.derivative;
        x -= dx;
        if (std::abs(dx) <= 1e-15) break;
      }
      c = gegenbauer(n, lambda, x);
    }
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    const double w = 1.0 / ((1.0 - x * x) * c.derivative * c.derivative);
    raw[i] = w;
    raw[n - 1 - i] = w;
  }
  const double total = pairwise_sum(raw);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = raw[i] / total;
  return rule;
}

}  // namespace

ZQuadrature gauss_z_rule(int n, int d) {
  if (n < 2) throw std::invalid_argument("gauss_z_rule: need n >= 2, got " + std::to_string(n));
  if (d < 2 || d > kMaxDim) {
    throw std::invalid_argument("gauss_z_rule: unsupported dimension " + std::to_string(d));
  }
  return d == 2 ? chebyshev_rule(n) : gegenbauer_rule(n, d);
}

SphereQuadrature product_sphere_rule(int n_z, int n_az) {
  if (n_z < 2 || n_az < 4) {
    throw std::invalid_argument("product_sphere_rule: need n_z >= 2 and n_az >= 4");
  }
  const ZQuadrature zr = gauss_z_rule(n_z, 3);
  SphereQuadrature rule;
  rule.dim = 3;
  rule.exact_degree = std::min(2 * n_z - 1, n_az - 1);
  rule.points.reserve(static_cast<std::size_t>(n_z) * n_az);
  rule.weights.reserve(static_cast<std::size_t>(n_z) * n_az);
  std::vector<double> cs(n_az), sn(n_az);
  for (int j = 0; j < n_az; ++j) {
    const double phi = 2.0 * std::numbers::pi * (j + 0.5) / n_az;
    cs[j] = std::cos(phi);
    sn[j] = std::sin(phi);
  }
  if (n_az % 2 == 0) {
    // Rotation by pi maps the azimuthal grid onto itself; make that exact.
    for (int j = n_az / 2; j < n_az; ++j) {
      cs[j] = -cs[j - n_az / 2];
      sn[j] = -sn[j - n_az / 2];
    }
  }
  for (int i = 0; i < n_z; ++i) {
    const double z = zr.nodes[i];
    const double r = std::sqrt((1.0 - z) * (1.0 + z));
    for (int j = 0; j < n_az; ++j) {
      Vector s(3);
      s << r * cs[j], r * sn[j], z;
      rule.points.push_back(SpherePoint::normalized(s));
      rule.weights.push_back(zr.weights[i] / n_az);
    }
  }
  return rule;
}

const ZQuadrature& default_z_rule(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ZQuadrature>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<ZQuadrature>(gauss_z_rule(kDefaultAxisymNodes, d));
  return *slot;
}

const SphereQuadrature& default_sphere_rule() {
  static const SphereQuadrature rule =
      product_sphere_rule(kDefaultProductZNodes, kDefaultProductAzimuthNodes);
  return rule;
}

double integrate_axisym(const std::function<double(double)>& g, const ZQuadrature& rule) {
  std::vector<double> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = g(rule.nodes[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate_axisym: non-finite integrand at node " << i << " (z = " << rule.nodes[i]
          << ")";
      throw NonFiniteValue(msg.str());
    }
    values[i] = v;
  }
  return weighted_sum(rule.weights, values);
}

double integrate_sphere(const std::function<double(const SpherePoint&)>& g,
                        const SphereQuadrature& rule) {
  std::vector<double> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = g(rule.points[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate_sphere: non-finite integrand at node " << i << " (sigma = ["
          << rule.points[i].sigma().transpose() << "])";
      throw NonFiniteValue(msg.str());
    }
    values[i] = v;
  }
  return weighted_sum(rule.weights, values);
}

}  // namespace gamma2
