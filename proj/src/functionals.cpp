#include "gamma2/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gamma2/errors.hpp"

namespace gamma2 {
namespace {

struct Jets {
  AmbientJet f;
  AmbientJet log_f;
  AmbientJet sqrt_f;
};

struct AxiJets {
  ProfileJet f;
  ProfileJet log_f;
  ProfileJet sqrt_f;
};

AxiJets axi_jets(const ProfileJet& raw, DensityMode mode) {
  AxiJets j;
  if (mode == DensityMode::log_density) {
    j.log_f = raw;
    j.f = exp_jet(raw);
  } else {
    j.f = raw;
    j.log_f = log_jet(raw);
  }
  j.sqrt_f = sqrt_jet(j.f);
  return j;
}

Jets ambient_jets(const AmbientJet& raw, DensityMode mode) {
  Jets j;
  if (mode == DensityMode::log_density) {
    j.log_f = raw;
    j.f = exp_jet(raw);
  } else {
    j.f = raw;
    j.log_f = log_jet(raw);
  }
  j.sqrt_f = sqrt_jet(j.f);
  return j;
}

NodeTerms assemble(double f, double log_f, double B, double A, double hess_sq,
                   double grad_f_sq, double grad_sqrt_sq, double lap_sqrt, double sqrt_f,
                   int d) {
  NodeTerms t;
  t.f = f;
  t.f_log_f = f * log_f;
  t.fisher_log = f * B;
  t.fisher_gradient = grad_f_sq / f;
  t.fisher_sqrt = 4.0 * grad_sqrt_sq;
  t.gamma2_direct = f * (hess_sq + (d - 2) * B);
  t.gamma2_bochner = f * (A + B) * (A + 0.5 * B);
  t.lap_sqrt_sq = lap_sqrt * lap_sqrt;
  t.h2_form = 0.25 * f * (A + 0.5 * B) * (A + 0.5 * B);
  t.cd_gap = hess_sq - A * A / (d - 1);
  t.sqrt_f = sqrt_f;
  return t;
}

NodeTerms terms_from_axi(const ProfileJet& raw, DensityMode mode, double z, int d) {
  const AxiJets j = axi_jets(raw, mode);
  return assemble(j.f.phi, j.log_f.phi, axi_gradient_sq(j.log_f, z),
                  axi_laplacian(j.log_f, z, d), axi_hessian_norm_sq(j.log_f, z, d),
                  axi_gradient_sq(j.f, z), axi_gradient_sq(j.sqrt_f, z),
                  axi_laplacian(j.sqrt_f, z, d), j.sqrt_f.phi, d);
}

NodeTerms terms_from_ambient(const AmbientJet& raw, DensityMode mode, const SpherePoint& p) {
  const Jets j = ambient_jets(raw, mode);
  const Vector grad_log = spherical_gradient(j.log_f, p);
  const Matrix hess_log = spherical_hessian(j.log_f, p);
  const Vector grad_f = spherical_gradient(j.f, p);
  const Vector grad_sqrt = spherical_gradient(j.sqrt_f, p);
  return assemble(j.f.value, j.log_f.value, grad_log.squaredNorm(), hess_log.trace(),
                  hess_log.squaredNorm(), grad_f.squaredNorm(), grad_sqrt.squaredNorm(),
                  laplace_beltrami(j.sqrt_f, p), j.sqrt_f.value, p.dim());
}

void check_rule(const SymmetricPositiveFunction& f, const RuleView& rule) {
  if (f.dim() != rule.dim()) {
    throw std::invalid_argument("function dimension " + std::to_string(f.dim()) +
                                " does not match rule dimension " + std::to_string(rule.dim()));
  }
  if (rule.is_z_rule() && !f.is_axisymmetric()) {
    throw std::invalid_argument("a z-rule can only integrate axisymmetric functions");
  }
  if (rule.size() == 0) throw std::invalid_argument("empty quadrature rule");
}

void check_positivity(std::span<const NodeTerms> terms) {
  double lo = terms[0].f;
  double hi = terms[0].f;
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!(terms[i].f >= lo)) {
      lo = terms[i].f;
      argmin = i;
    }
    hi = std::max(hi, terms[i].f);
  }
  if (!(lo > 0.0) || !(lo >= kPositivityFloor * hi) || !std::isfinite(hi)) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "positivity floor violated: min f = " << lo << " at node " << argmin
        << ", max f = " << hi;
    throw PositivityError(msg.str());
  }
}

void check_finite(std::span<const NodeTerms> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const NodeTerms& t = terms[i];
    const double all[] = {t.f_log_f,       t.fisher_log, t.fisher_gradient, t.fisher_sqrt,
                          t.gamma2_direct, t.gamma2_bochner, t.lap_sqrt_sq, t.h2_form,
                          t.cd_gap};
    for (double v : all) {
      if (!std::isfinite(v)) {
        throw NonFiniteValue("non-finite functional integrand at node " + std::to_string(i));
      }
    }
  }
}

template <class Field>
double reduce(std::span<const double> weights, std::span<const NodeTerms> terms, Field field) {
  std::vector<double> v(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) v[i] = field(terms[i]);
  return weighted_sum(weights, v);
}

std::optional<double> ratio_or_empty(double num, double den, double threshold) {
  if (!(den > threshold)) return std::nullopt;
  return num / den;
}

// m ((1 + delta) log(1 + delta) - delta) with delta = f/m - 1: the pointwise
// integrand of h - m log m, nonnegative and free of cancellation near f = m.
double relative_entropy_density(double f, double m) {
  const double delta = (f - m) / m;
  if (std::abs(delta) >= 1e-2) return m * ((1.0 + delta) * std::log1p(delta) - delta);
  // sum_{k >= 2} (-delta)^k / (k (k - 1))
  double term = delta * delta;
  double sum = 0.0;
  for (int k = 2; k < 14; ++k) {
    sum += term / (k * (k - 1.0));
    term *= -delta;
  }
  return m * sum;
}

struct Sums {
  double mass = 0.0;
  double fisher = 0.0;
  double entropy = 0.0;
  double relative_entropy = 0.0;
  double gamma2_direct = 0.0;
  double gamma2_bochner = 0.0;
  double hsq = 0.0;
  double sqrt_variance = 0.0;
};

FunctionalReport report_from_sums(const Sums& s) {
  FunctionalReport r;
  r.mass = s.mass;
  r.fisher = s.fisher;
  r.entropy = s.entropy;
  r.gamma2_direct = s.gamma2_direct;
  r.gamma2_bochner = s.gamma2_bochner;
  r.hsq = s.hsq;
  r.gamma2_ratio = ratio_or_empty(s.gamma2_direct, s.fisher, 1e-12 * s.mass);
  r.log_sobolev_ratio = ratio_or_empty(s.fisher, 2.0 * s.relative_entropy, 1e-14 * s.mass);
  // Poincare quotient of g = sqrt f: int |grad g|^2 = fisher / 4.
  r.poincare_ratio_sqrtf = ratio_or_empty(0.25 * s.fisher, s.sqrt_variance, 1e-14 * s.mass);
  return r;
}

}  // namespace

SymmetricPositiveFunction::SymmetricPositiveFunction(AxisymmetricProfile profile, DensityMode mode)
    : rep_(std::move(profile)), mode_(mode) {}

SymmetricPositiveFunction::SymmetricPositiveFunction(AmbientFunction ambient, DensityMode mode)
    : rep_(std::move(ambient)), mode_(mode) {}

int SymmetricPositiveFunction::dim() const noexcept {
  return std::visit([](const auto& r) { return r.dim(); }, rep_);
}

double SymmetricPositiveFunction::value(const SpherePoint& p) const {
  if (p.dim() != dim()) throw std::invalid_argument("value: dimension mismatch");
  const double raw = profile() ? profile()->phi(p.z()) : (*ambient())(p.sigma()).value;
  return mode_ == DensityMode::log_density ? std::exp(raw) : raw;
}

double SymmetricPositiveFunction::value_at_z(double z) const {
  if (!profile()) throw std::invalid_argument("value_at_z: not an axisymmetric function");
  const double raw = profile()->phi(z);
  return mode_ == DensityMode::log_density ? std::exp(raw) : raw;
}

NodeTerms node_terms(const SymmetricPositiveFunction& f, double z) {
  if (!f.profile()) throw std::invalid_argument("node_terms(z): not an axisymmetric function");
  return terms_from_axi(f.profile()->jet(z), f.mode(), z, f.dim());
}

NodeTerms node_terms(const SymmetricPositiveFunction& f, const SpherePoint& p) {
  if (p.dim() != f.dim()) throw std::invalid_argument("node_terms: dimension mismatch");
  if (const auto* prof = f.profile()) return terms_from_axi(prof->jet(p.z()), f.mode(), p.z(), f.dim());
  return terms_from_ambient((*f.ambient())(p.sigma()), f.mode(), p);
}

std::vector<NodeTerms> evaluate_nodes(const SymmetricPositiveFunction& f, RuleView rule,
                                      Execution exec) {
  check_rule(f, rule);
  std::vector<NodeTerms> terms(rule.size());
  if (rule.is_z_rule()) {
    for_each_index(rule.size(), exec, [&](std::size_t i) { terms[i] = node_terms(f, rule.z(i)); });
  } else {
    for_each_index(rule.size(), exec,
                   [&](std::size_t i) { terms[i] = node_terms(f, rule.point(i)); });
  }
  check_positivity(terms);
  check_finite(terms);
  return terms;
}

FunctionalReport evaluate_functionals(const SymmetricPositiveFunction& f, RuleView rule,
                                      Execution exec) {
  const auto terms = evaluate_nodes(f, rule, exec);
  const auto w = rule.weights();
  Sums s;
  s.mass = reduce(w, terms, [](const NodeTerms& t) { return t.f; });
  s.fisher = reduce(w, terms, [](const NodeTerms& t) { return t.fisher_log; });
  s.entropy = reduce(w, terms, [](const NodeTerms& t) { return t.f_log_f; });
  s.gamma2_direct = reduce(w, terms, [](const NodeTerms& t) { return t.gamma2_direct; });
  s.gamma2_bochner = reduce(w, terms, [](const NodeTerms& t) { return t.gamma2_bochner; });
  s.hsq = reduce(w, terms, [](const NodeTerms& t) { return t.lap_sqrt_sq; });
  const double m = s.mass;
  s.relative_entropy =
      reduce(w, terms, [m](const NodeTerms& t) { return relative_entropy_density(t.f, m); });
  const double mean_sqrt = reduce(w, terms, [](const NodeTerms& t) { return t.sqrt_f; });
  s.sqrt_variance = reduce(w, terms, [mean_sqrt](const NodeTerms& t) {
    return (t.sqrt_f - mean_sqrt) * (t.sqrt_f - mean_sqrt);
  });
  return report_from_sums(s);
}

double mass(const SymmetricPositiveFunction& f, RuleView rule) {
  return evaluate_functionals(f, rule).mass;
}

FisherForms fisher_information(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto terms = evaluate_nodes(f, rule);
  const auto w = rule.weights();
  return {reduce(w, terms, [](const NodeTerms& t) { return t.fisher_log; }),
          reduce(w, terms, [](const NodeTerms& t) { return t.fisher_gradient; }),
          reduce(w, terms, [](const NodeTerms& t) { return t.fisher_sqrt; })};
}

double entropy(const SymmetricPositiveFunction& f, RuleView rule) {
  return evaluate_functionals(f, rule).entropy;
}

Gamma2Forms gamma2_functional(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto r = evaluate_functionals(f, rule);
  return {r.gamma2_direct, r.gamma2_bochner};
}

std::pair<double, double> h2_norm_forms(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto terms = evaluate_nodes(f, rule);
  const auto w = rule.weights();
  return {reduce(w, terms, [](const NodeTerms& t) { return t.lap_sqrt_sq; }),
          reduce(w, terms, [](const NodeTerms& t) { return t.h2_form; })};
}

double gamma2_ratio(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto r = evaluate_functionals(f, rule);
  if (!r.gamma2_ratio) throw UndefinedRatio("undefined ratio: Fisher information vanishes");
  return *r.gamma2_ratio;
}

double log_sobolev_ratio(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto r = evaluate_functionals(f, rule);
  if (!r.log_sobolev_ratio) throw UndefinedRatio("undefined ratio: relative entropy vanishes");
  return *r.log_sobolev_ratio;
}

namespace {

double poincare_from_values(std::span<const double> w, std::span<const double> g,
                            std::span<const double> grad_sq) {
  const double num = weighted_sum(w, grad_sq);
  const double mean = weighted_sum(w, g);
  std::vector<double> g2(g.size()), dev2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g2[i] = g[i] * g[i];
    dev2[i] = (g[i] - mean) * (g[i] - mean);
  }
  const double second = weighted_sum(w, g2);
  const double var = weighted_sum(w, dev2);
  if (!(var > 1e-14 * second)) throw UndefinedRatio("undefined ratio: constant function");
  return num / var;
}

}  // namespace

double poincare_ratio(const AxisymmetricProfile& g, RuleView rule) {
  if (g.dim() != rule.dim()) throw std::invalid_argument("poincare_ratio: dimension mismatch");
  std::vector<double> vals(rule.size()), grad_sq(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z = rule.z(i);
    const ProfileJet j = g.jet(z);
    vals[i] = j.phi;
    grad_sq[i] = axi_gradient_sq(j, z);
  }
  return poincare_from_values(rule.weights(), vals, grad_sq);
}

double poincare_ratio(const AmbientFunction& g, const SphereQuadrature& rule) {
  if (g.dim() != rule.dim) throw std::invalid_argument("poincare_ratio: dimension mismatch");
  std::vector<double> vals(rule.size()), grad_sq(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const AmbientJet j = g(rule.points[i].sigma());
    vals[i] = j.value;
    grad_sq[i] = spherical_gradient(j, rule.points[i]).squaredNorm();
  }
  return poincare_from_values(rule.weights, vals, grad_sq);
}

double min_cd_gap(const SymmetricPositiveFunction& f, RuleView rule) {
  const auto terms = evaluate_nodes(f, rule);
  double lo = terms[0].cd_gap;
  for (const auto& t : terms) lo = std::min(lo, t.cd_gap);
  return lo;
}

namespace reference {

FunctionalReport evaluate_functionals(const SymmetricPositiveFunction& f, RuleView rule) {
  check_rule(f, rule);
  const int d = f.dim();
  std::vector<NodeTerms> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (const auto* prof = f.profile()) {
      // Extend phi(z) to R^d as F(x) = phi(x_d) and use the projection route.
      const double z = rule.z(i);
      Vector s = Vector::Zero(d);
      s(0) = std::sqrt((1.0 - z) * (1.0 + z));
      s(d - 1) = z;
      const SpherePoint p = rule.is_z_rule() ? SpherePoint::normalized(s) : rule.point(i);
      const ProfileJet pj = prof->jet(p.z());
      AmbientJet raw;
      raw.value = pj.phi;
      raw.gradient = Vector::Zero(d);
      raw.gradient(d - 1) = pj.dphi;
      raw.hessian = Matrix::Zero(d, d);
      raw.hessian(d - 1, d - 1) = pj.ddphi;
      terms[i] = terms_from_ambient(raw, f.mode(), p);
    } else {
      const SpherePoint& p = rule.point(i);
      terms[i] = terms_from_ambient((*f.ambient())(p.sigma()), f.mode(), p);
    }
  }
  check_positivity(terms);
  check_finite(terms);
  const auto w = rule.weights();
  Sums s;
  double mean_sqrt = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s.mass += w[i] * terms[i].f;
    s.fisher += w[i] * terms[i].fisher_log;
    s.entropy += w[i] * terms[i].f_log_f;
    s.gamma2_direct += w[i] * terms[i].gamma2_direct;
    s.gamma2_bochner += w[i] * terms[i].gamma2_bochner;
    s.hsq += w[i] * terms[i].lap_sqrt_sq;
    mean_sqrt += w[i] * terms[i].sqrt_f;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s.relative_entropy += w[i] * relative_entropy_density(terms[i].f, s.mass);
    s.sqrt_variance += w[i] * (terms[i].sqrt_f - mean_sqrt) * (terms[i].sqrt_f - mean_sqrt);
  }
  return report_from_sums(s);
}

}  // namespace reference

}  // namespace gamma2
