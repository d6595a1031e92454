#pragma once

// Heat flow d/dt f = lap_s f on S^2 for axisymmetric symmetric data,
// solved exactly in the even Legendre basis: a_k(t) = a_k(0) exp(-k(k+1)t).
//
// Along the flow d/dt h = -i and d/dt i = -2 int f Gamma_2(log f, log f), so
// a Gamma_2 bound Gamma_2 >= Lambda i integrates to
//   (i(0) - i(T)) / 2 >= Lambda (h(0) - h(T)).
// Entropies are not normalized: h tends to m log m with m = a_0.

#include <cstdint>
#include <span>
#include <vector>

#include "gamma2/functionals.hpp"
#include "gamma2/quadrature.hpp"

namespace gamma2 {

/// Largest |reconstruction - profile| accepted by decompose, relative to max |profile|.
inline constexpr double kReconstructionTolerance = 1e-9;
/// Node values at or below this fraction of a_0 abort the flow.
inline constexpr double kFlowPositivityFloor = 1e-12;
/// Fisher information at the final time of integrated_inequality must be below this.
inline constexpr double kFlowFisherThreshold = 1e-8;

class LegendreSpectrum {
 public:
  /// Coefficients of P_0, P_2, ..., P_K. Must be nonempty and finite.
  explicit LegendreSpectrum(std::vector<double> even_coefficients);

  int max_degree() const noexcept { return 2 * (static_cast<int>(coeffs_.size()) - 1); }
  /// a_k; zero for odd k and k > K.
  double coefficient(int k) const noexcept;
  std::span<const double> even_coefficients() const noexcept { return coeffs_; }

  ProfileJet jet(double z) const;
  AxisymmetricProfile profile() const;
  SymmetricPositiveFunction function() const;

 private:
  std::vector<double> coeffs_;
};

/// Projects a profile onto P_0, P_2, ..., P_K. The rule must be a d = 3 rule
/// exact to degree 2K. Throws std::domain_error if the reconstruction misses
/// the profile at a node by more than kReconstructionTolerance.
LegendreSpectrum decompose(const AxisymmetricProfile& prof, int K, const ZQuadrature& rule);

/// Exact heat-flow solution at time t. Throws PositivityError if the evolved
/// function drops to kFlowPositivityFloor * a_0 at a node of `check`.
LegendreSpectrum evolve(const LegendreSpectrum& spec, double t,
                        const ZQuadrature& check = default_z_rule(3));

/// a_0 = 1 and the remaining even coefficients up to degree K drawn from a
/// seeded generator and scaled so that sum |a_k| = total_amplitude < 1.
LegendreSpectrum random_spectrum(std::uint64_t seed, int K, double total_amplitude);

struct FlowTrace {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> entropy;
  std::vector<double> fisher;
  std::vector<double> gamma2;
};

/// Functionals at each time; times must be ascending and start at 0.
FlowTrace trace_flow(const LegendreSpectrum& spec, std::span<const double> times,
                     const ZQuadrature& rule, Execution exec = Execution::parallel);

struct DissipationResidual {
  double residual_h = 0.0;  // |dh/dt + i| by central differences
  double residual_i = 0.0;  // |di/dt + 2 Gamma_2|
};

DissipationResidual check_dissipation(const LegendreSpectrum& spec, double t, double dt,
                                      const ZQuadrature& rule);

struct DissipationConvergence {
  DissipationResidual coarse;  // step dt
  DissipationResidual fine;    // step dt / 2
  double ratio_h = 0.0;        // coarse / fine, about 4 for second order
  double ratio_i = 0.0;
};

DissipationConvergence dissipation_convergence(const LegendreSpectrum& spec, double t, double dt,
                                               const ZQuadrature& rule);

/// (i(0) - i(T)) / 2 - Lambda (h(0) - h(T)). Throws std::domain_error if
/// i(T) > kFlowFisherThreshold * a_0.
double integrated_inequality(const LegendreSpectrum& spec, double T, double Lambda,
                             const ZQuadrature& rule);

}  // namespace gamma2
