#pragma once

// Fisher information, entropy, the Gamma_2 functional and the three
// Rayleigh-type ratios for positive antipodally-symmetric functions on
// S^{d-1}. Nothing is normalized to unit mass; every ratio is invariant
// under f -> c f.
//
// With A = lap_s log f and B = |grad_s log f|^2 the Gamma_2 functional has a
// direct form
//     int f (|hess_s log f|^2 + (d - 2) B)
// and, after integrating the Bochner identity by parts, the form
//     int f (A + B)(A + B / 2).
// The two agree only as integrals, which makes their difference a useful
// accuracy probe for a quadrature rule.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gamma2/kernels.hpp"
#include "gamma2/quadrature.hpp"
#include "gamma2/sphere_geometry.hpp"

namespace gamma2 {

/// How the stored representation relates to the density f.
enum class DensityMode {
  density,      // f = representation
  log_density,  // f = exp(representation)
};

/// Nodes below this fraction of the largest node value are rejected.
inline constexpr double kPositivityFloor = 1e-10;

class SymmetricPositiveFunction {
 public:
  explicit SymmetricPositiveFunction(AxisymmetricProfile profile,
                                     DensityMode mode = DensityMode::density);
  SymmetricPositiveFunction(AmbientFunction ambient, DensityMode mode);

  int dim() const noexcept;
  DensityMode mode() const noexcept { return mode_; }
  bool is_axisymmetric() const noexcept {
    return std::holds_alternative<AxisymmetricProfile>(rep_);
  }
  const AxisymmetricProfile* profile() const noexcept {
    return std::get_if<AxisymmetricProfile>(&rep_);
  }
  const AmbientFunction* ambient() const noexcept { return std::get_if<AmbientFunction>(&rep_); }

  double value(const SpherePoint& p) const;
  /// Axisymmetric representations only.
  double value_at_z(double z) const;

 private:
  std::variant<AxisymmetricProfile, AmbientFunction> rep_;
  DensityMode mode_;
};

/// Node set of either rule type, with uniform access for the kernels.
class RuleView {
 public:
  RuleView(const ZQuadrature& rule) : z_(&rule) {}         // NOLINT(implicit)
  RuleView(const SphereQuadrature& rule) : s_(&rule) {}    // NOLINT(implicit)

  bool is_z_rule() const noexcept { return z_ != nullptr; }
  std::size_t size() const noexcept { return z_ ? z_->size() : s_->size(); }
  int dim() const noexcept { return z_ ? z_->dim : s_->dim; }
  std::span<const double> weights() const noexcept {
    return z_ ? std::span<const double>(z_->weights) : std::span<const double>(s_->weights);
  }
  double z(std::size_t i) const noexcept { return z_ ? z_->nodes[i] : s_->points[i].z(); }
  const SpherePoint& point(std::size_t i) const { return s_->points.at(i); }

 private:
  const ZQuadrature* z_ = nullptr;
  const SphereQuadrature* s_ = nullptr;
};

/// Integrands of every functional at one node.
struct NodeTerms {
  double f = 0.0;
  double f_log_f = 0.0;
  double fisher_log = 0.0;      // f |grad log f|^2
  double fisher_gradient = 0.0; // |grad f|^2 / f
  double fisher_sqrt = 0.0;     // 4 |grad sqrt f|^2
  double gamma2_direct = 0.0;   // f (|hess log f|^2 + (d - 2) |grad log f|^2)
  double gamma2_bochner = 0.0;  // f (A + B)(A + B/2)
  double lap_sqrt_sq = 0.0;     // (lap sqrt f)^2
  double h2_form = 0.0;         // f (A + B/2)^2 / 4
  double cd_gap = 0.0;          // |hess log f|^2 - A^2 / (d - 1)
  double sqrt_f = 0.0;
};

NodeTerms node_terms(const SymmetricPositiveFunction& f, double z);
NodeTerms node_terms(const SymmetricPositiveFunction& f, const SpherePoint& p);

/// Per-node integrands over a rule. Throws PositivityError if the positivity
/// floor fails and std::invalid_argument if f cannot be evaluated on the rule
/// (ambient representation on a z-rule, or a dimension mismatch).
std::vector<NodeTerms> evaluate_nodes(const SymmetricPositiveFunction& f, RuleView rule,
                                      Execution exec = Execution::parallel);

struct FunctionalReport {
  double mass = 0.0;
  double fisher = 0.0;
  double entropy = 0.0;
  double gamma2_direct = 0.0;
  double gamma2_bochner = 0.0;
  double hsq = 0.0;
  // Absent when the corresponding denominator vanishes (constant f).
  std::optional<double> gamma2_ratio;
  std::optional<double> log_sobolev_ratio;
  std::optional<double> poincare_ratio_sqrtf;
};

/// Every functional from a single pass over the nodes.
FunctionalReport evaluate_functionals(const SymmetricPositiveFunction& f, RuleView rule,
                                      Execution exec = Execution::parallel);

struct FisherForms {
  double log_form = 0.0;       // int f |grad log f|^2 (canonical)
  double gradient_form = 0.0;  // int |grad f|^2 / f
  double sqrt_form = 0.0;      // 4 int |grad sqrt f|^2
  double value() const noexcept { return log_form; }
};

struct Gamma2Forms {
  double direct = 0.0;
  double bochner = 0.0;
};

double mass(const SymmetricPositiveFunction& f, RuleView rule);
FisherForms fisher_information(const SymmetricPositiveFunction& f, RuleView rule);
double entropy(const SymmetricPositiveFunction& f, RuleView rule);
Gamma2Forms gamma2_functional(const SymmetricPositiveFunction& f, RuleView rule);
/// int (lap_s sqrt f)^2 and its algebraic rewrite int f (A + B/2)^2 / 4.
std::pair<double, double> h2_norm_forms(const SymmetricPositiveFunction& f, RuleView rule);

/// gamma2_direct / fisher. Throws UndefinedRatio when fisher <= 1e-12 * mass.
double gamma2_ratio(const SymmetricPositiveFunction& f, RuleView rule);
/// fisher / (2 (h - m log m)). Throws UndefinedRatio when the bracket <= 1e-14 * mass.
/// The bracket is integrated as int m ((1 + delta) log(1 + delta) - delta) with
/// delta = f/m - 1, so it stays accurate when f is close to its mean.
double log_sobolev_ratio(const SymmetricPositiveFunction& f, RuleView rule);

/// int |grad g|^2 / (int g^2 - (int g)^2) for an arbitrary (not necessarily
/// positive) symmetric g. Throws UndefinedRatio for constant g.
double poincare_ratio(const AxisymmetricProfile& g, RuleView rule);
double poincare_ratio(const AmbientFunction& g, const SphereQuadrature& rule);

/// Minimum over nodes of |hess_s log f|^2 - (lap_s log f)^2 / (d - 1).
double min_cd_gap(const SymmetricPositiveFunction& f, RuleView rule);

namespace reference {

/// Serial reference: naive left-to-right sums, and every representation
/// routed through the ambient projection formulas (axisymmetric profiles are
/// extended as F(x) = phi(x_d)). Kept for cross-checking the kernels.
FunctionalReport evaluate_functionals(const SymmetricPositiveFunction& f, RuleView rule);

}  // namespace reference

}  // namespace gamma2
