#include "gamma2/heatflow.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gamma2/errors.hpp"
#include "gamma2/legendre.hpp"
#include "gamma2/rng.hpp"

namespace gamma2 {

LegendreSpectrum::LegendreSpectrum(std::vector<double> even_coefficients)
    : coeffs_(std::move(even_coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("LegendreSpectrum: no coefficients");
  for (double a : coeffs_) {
    if (!std::isfinite(a)) throw std::invalid_argument("LegendreSpectrum: non-finite coefficient");
  }
}

double LegendreSpectrum::coefficient(int k) const noexcept {
  if (k < 0 || k % 2 != 0 || k > max_degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k / 2)];
}

ProfileJet LegendreSpectrum::jet(double z) const {
  const auto p = legendre_jets(max_degree(), z);
  ProfileJet out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const LegendreJet& lj = p[2 * j];
    out.phi += coeffs_[j] * lj.p;
    out.dphi += coeffs_[j] * lj.dp;
    out.ddphi += coeffs_[j] * lj.ddp;
  }
  return out;
}

AxisymmetricProfile LegendreSpectrum::profile() const {
  LegendreSpectrum copy = *this;
  return AxisymmetricProfile(3, [copy](double z) { return copy.jet(z); });
}

SymmetricPositiveFunction LegendreSpectrum::function() const {
  return SymmetricPositiveFunction(profile());
}

LegendreSpectrum decompose(const AxisymmetricProfile& prof, int K, const ZQuadrature& rule) {
  if (K < 2 || K % 2 != 0) throw std::invalid_argument("decompose: K must be even and >= 2");
  if (rule.dim != 3 || prof.dim() != 3) throw std::invalid_argument("decompose: d = 3 only");
  if (rule.exact_degree() < 2 * K) {
    throw std::invalid_argument("decompose: rule exact to degree " +
                                std::to_string(rule.exact_degree()) + " < 2K = " +
                                std::to_string(2 * K));
  }
  const std::size_t n = rule.size();
  std::vector<double> values(n);
  std::vector<std::vector<LegendreJet>> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = prof.phi(rule.nodes[i]);
    basis[i] = legendre_jets(K, rule.nodes[i]);
  }
  std::vector<double> coeffs(static_cast<std::size_t>(K / 2 + 1));
  std::vector<double> integrand(n);
  for (int k = 0; k <= K; k += 2) {
    for (std::size_t i = 0; i < n; ++i) integrand[i] = values[i] * basis[i][k].p;
    coeffs[static_cast<std::size_t>(k / 2)] = (2.0 * k + 1.0) * weighted_sum(rule.weights, integrand);
  }
  LegendreSpectrum spec(std::move(coeffs));

  double scale = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(values[i]));
    err = std::max(err, std::abs(spec.jet(rule.nodes[i]).phi - values[i]));
  }
  if (err > kReconstructionTolerance * std::max(scale, 1e-300)) {
    std::ostringstream msg;
    msg << "decompose: profile not resolved by degree " << K << " (reconstruction error " << err
        << ")";
    throw std::domain_error(msg.str());
  }
  return spec;
}

LegendreSpectrum evolve(const LegendreSpectrum& spec, double t, const ZQuadrature& check) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be >= 0");
  std::vector<double> out(spec.even_coefficients().begin(), spec.even_coefficients().end());
  for (std::size_t j = 1; j < out.size(); ++j) {
    const double k = 2.0 * static_cast<double>(j);
    out[j] *= std::exp(-k * (k + 1.0) * t);
  }
  LegendreSpectrum evolved(std::move(out));
  const double a0 = evolved.coefficient(0);
  for (double z : check.nodes) {
    if (!(evolved.jet(z).phi > kFlowPositivityFloor * a0)) {
      throw PositivityError("evolve: heat-flow solution not positive at z = " + std::to_string(z) +
                            ", t = " + std::to_string(t));
    }
  }
  return evolved;
}

LegendreSpectrum random_spectrum(std::uint64_t seed, int K, double total_amplitude) {
  if (K < 2 || K % 2 != 0) throw std::invalid_argument("random_spectrum: K must be even and >= 2");
  if (!(total_amplitude >= 0.0 && total_amplitude < 1.0)) {
    throw std::invalid_argument("random_spectrum: total amplitude must be in [0, 1)");
  }
  const CounterRng rng = CounterRng(seed).split(0x4ea7);
  std::vector<double> c(static_cast<std::size_t>(K / 2 + 1));
  c[0] = 1.0;
  double l1 = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    c[j] = rng.uniform(0, j, -1.0, 1.0);
    l1 += std::abs(c[j]);
  }
  // |P_k| <= 1 on [-1, 1], so sum |a_k| < a_0 keeps f positive.
  if (l1 > 0.0) {
    for (std::size_t j = 1; j < c.size(); ++j) c[j] *= total_amplitude / l1;
  }
  return LegendreSpectrum(std::move(c));
}

FlowTrace trace_flow(const LegendreSpectrum& spec, std::span<const double> times,
                     const ZQuadrature& rule, Execution exec) {
  if (times.empty()) throw std::invalid_argument("trace_flow: no times");
  if (times.front() != 0.0) throw std::invalid_argument("trace_flow: times must start at 0");
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("trace_flow: times must be ascending");
  }
  FlowTrace trace;
  for (double t : times) {
    const LegendreSpectrum s = evolve(spec, t, rule);
    const FunctionalReport r = evaluate_functionals(s.function(), rule, exec);
    trace.times.push_back(t);
    trace.mass.push_back(r.mass);
    trace.entropy.push_back(r.entropy);
    trace.fisher.push_back(r.fisher);
    trace.gamma2.push_back(r.gamma2_direct);
  }
  return trace;
}

DissipationResidual check_dissipation(const LegendreSpectrum& spec, double t, double dt,
                                      const ZQuadrature& rule) {
  if (!(dt > 0.0)) throw std::invalid_argument("check_dissipation: dt must be positive");
  if (!(t >= dt)) throw std::invalid_argument("check_dissipation: need t >= dt");
  const auto at = [&](double s) {
    return evaluate_functionals(evolve(spec, s, rule).function(), rule);
  };
  const FunctionalReport plus = at(t + dt);
  const FunctionalReport minus = at(t - dt);
  const FunctionalReport now = at(t);
  DissipationResidual r;
  r.residual_h = std::abs((plus.entropy - minus.entropy) / (2.0 * dt) + now.fisher);
  r.residual_i = std::abs((plus.fisher - minus.fisher) / (2.0 * dt) + 2.0 * now.gamma2_direct);
  return r;
}

DissipationConvergence dissipation_convergence(const LegendreSpectrum& spec, double t, double dt,
                                               const ZQuadrature& rule) {
  DissipationConvergence c;
  c.coarse = check_dissipation(spec, t, dt, rule);
  c.fine = check_dissipation(spec, t, 0.5 * dt, rule);
  c.ratio_h = c.coarse.residual_h / c.fine.residual_h;
  c.ratio_i = c.coarse.residual_i / c.fine.residual_i;
  return c;
}

double integrated_inequality(const LegendreSpectrum& spec, double T, double Lambda,
                             const ZQuadrature& rule) {
  if (!(Lambda > 0.0)) throw std::invalid_argument("integrated_inequality: Lambda must be > 0");
  if (!(T > 0.0)) throw std::invalid_argument("integrated_inequality: T must be > 0");
  const FunctionalReport start = evaluate_functionals(spec.function(), rule);
  const FunctionalReport end = evaluate_functionals(evolve(spec, T, rule).function(), rule);
  if (end.fisher > kFlowFisherThreshold * spec.coefficient(0)) {
    throw std::domain_error("integrated_inequality: T = " + std::to_string(T) +
                            " too small, i(T) = " + std::to_string(end.fisher));
  }
  return 0.5 * (start.fisher - end.fisher) - Lambda * (start.entropy - end.entropy);
}

}  // namespace gamma2
