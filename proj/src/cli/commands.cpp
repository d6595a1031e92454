#include "gamma2/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamma2/bounds.hpp"
#include "gamma2/errors.hpp"
#include "gamma2/families.hpp"
#include "gamma2/functionals.hpp"
#include "gamma2/heatflow.hpp"
#include "gamma2/search.hpp"
#include "gamma2/serialize.hpp"
#include "gamma2/verify.hpp"

namespace gamma2 {

namespace {

// Raised for invalid option values that CLI11 itself cannot see.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a computed check fails; the output is still written.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kDissipationTime = 0.1;
constexpr double kDissipationStep = 1e-4;
constexpr double kSlackTolerance = 1e-8;
constexpr double kDefaultFlowAmplitude = 0.5;
constexpr int kRandomSpectrumDegree = 6;

struct RunConfig {
  int d = 3;
  std::optional<double> t;
  double t_min = 0.05;
  double t_max = 100.0;
  int t_steps = 50;
  int quad_n = 0;  // 0 selects the default rule
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::optional<double> amplitude;
  std::string format = "csv";
  std::string out;
  std::string config;
  std::string family = "quartic";
  double c = 1.0;
  std::string mode = "log_density";
  std::string target;
  double final_time = 5.0;
  int steps = 50;
  double lambda = 5.5;
  bool perturb_tau = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "Write output to this file");
  sub->add_option("--config", cfg.config, "JSON file of option values (flags override)");
}

void add_family_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "quartic | scaled_quartic | constant | even_poly");
  sub->add_option("--t", cfg.t, "Quartic family parameter");
  sub->add_option("--c", cfg.c, "Constant family value");
  sub->add_option("--d", cfg.d, "Ambient dimension (functions live on S^{d-1})");
  sub->add_option("--seed", cfg.seed, "Seed for even_poly samples");
  sub->add_option("--amplitude", cfg.amplitude, "Coefficient amplitude for even_poly");
  sub->add_option("--mode", cfg.mode, "even_poly representation")
      ->check(CLI::IsMember({"log_density", "density"}));
  sub->add_option("--quad-n", cfg.quad_n, "Quadrature size (z nodes; product rule uses n x 2n)");
}

std::string option_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw UsageError("config: unsupported value " + v.dump());
}

// Values from the config file fill options that were not given as flags.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "config: cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  require(j.is_object(), "config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    std::string name = key;
    for (char& ch : name) {
      if (ch == '_') ch = '-';
    }
    require(name != "config", "config: nested config is not allowed");
    CLI::Option* opt = sub->get_option_no_throw("--" + name);
    require(opt != nullptr, "config: unknown key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    opt->add_result(option_text(value));
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config: " + key + ": " + e.what());
    }
  }
}

FamilyDescriptor descriptor(const RunConfig& cfg) {
  FamilyDescriptor d;
  d.family = cfg.family;
  require(cfg.d >= 2 && cfg.d <= kMaxDim,
          "--d must be in [2, " + std::to_string(kMaxDim) + "]");
  if (cfg.family == "quartic" || cfg.family == "scaled_quartic") {
    require(cfg.d == 3, "the quartic families live on S^2 (--d 3)");
    d.t = cfg.t.value_or(1.0);
    require(d.t > 0.0 && std::isfinite(d.t), "--t must be positive");
  } else if (cfg.family == "constant") {
    d.c = cfg.c;
    d.sample.dim = cfg.d;
    require(d.c > 0.0 && std::isfinite(d.c), "--c must be positive");
  } else if (cfg.family == "even_poly") {
    d.sample.seed = cfg.seed;
    d.sample.amplitude = cfg.amplitude.value_or(1.0);
    d.sample.mode = cfg.mode == "density" ? SampleMode::density : SampleMode::log_density;
    d.sample.dim = cfg.d;
    require(d.sample.amplitude >= 0.0 && std::isfinite(d.sample.amplitude),
            "--amplitude must be >= 0");
  } else {
    throw UsageError("unknown family '" + cfg.family + "'");
  }
  return d;
}

FunctionalReport evaluate_with_rule(const SymmetricPositiveFunction& f, const RunConfig& cfg) {
  if (f.is_axisymmetric()) {
    if (cfg.quad_n == 0) return evaluate_functionals(f, default_z_rule(f.dim()));
    require(cfg.quad_n >= 2, "--quad-n must be >= 2");
    return evaluate_functionals(f, gauss_z_rule(cfg.quad_n, f.dim()));
  }
  require(f.dim() == 3, "non-axisymmetric functions are integrated on S^2 only (--d 3)");
  if (cfg.quad_n == 0) return evaluate_functionals(f, default_sphere_rule());
  require(cfg.quad_n >= 2, "--quad-n must be >= 2");
  return evaluate_functionals(f, product_sphere_rule(cfg.quad_n, 2 * cfg.quad_n));
}

std::string family_parameter(const FamilyDescriptor& d) {
  if (d.family == "constant") return format_number(d.c);
  if (d.family == "even_poly") return std::to_string(d.sample.seed);
  return format_number(d.t);
}

std::string cmd_bounds(const RunConfig& cfg) {
  require(cfg.d >= 2, "--d must be >= 2");
  const BoundReport r = bound_report(cfg.d);
  if (cfg.format == "json") return to_json(r).dump(2) + "\n";
  return csv_line(bound_report_header()) + csv_line(bound_report_fields(r));
}

std::string cmd_minimize(const RunConfig& cfg) {
  require(!cfg.target.empty(), "minimize: a target (lambda3 or alpha3) is required");
  const ScalarMinResult r =
      cfg.target == "lambda3" ? minimize_upper_lambda3() : minimize_upper_alpha3();
  if (cfg.format == "json") {
    Json j = to_json(r);
    j["target"] = cfg.target;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"target"};
  std::vector<std::string> row = {cfg.target};
  for (auto& h : scalar_min_header()) header.push_back(h);
  for (auto& v : scalar_min_fields(r)) row.push_back(v);
  return csv_line(header) + csv_line(row);
}

std::string cmd_ratio(const RunConfig& cfg) {
  const FamilyDescriptor desc = descriptor(cfg);
  const FunctionalReport r = evaluate_with_rule(build_family(desc), cfg);
  if (!r.gamma2_ratio) throw UndefinedRatio("undefined ratio: gamma2_ratio (zero Fisher information)");
  if (cfg.format == "json") {
    Json j = to_json(r);
    j["family"] = to_json(desc);
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"family", "parameter"};
  std::vector<std::string> row = {desc.family, family_parameter(desc)};
  for (auto& h : functional_report_header()) header.push_back(h);
  for (auto& v : functional_report_fields(r)) row.push_back(v);
  return csv_line(header) + csv_line(row);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  require(lo > 0.0 && hi >= lo && std::isfinite(hi), "need 0 < --t-min <= --t-max");
  require(n >= 1, "--t-steps must be >= 1");
  require(n >= 2 || lo == hi, "--t-steps 1 needs --t-min == --t-max");
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ts[static_cast<std::size_t>(i)] =
        n == 1 ? lo : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  }
  if (n > 1) ts.back() = hi;
  return ts;
}

std::string cmd_sweep(const RunConfig& cfg) {
  require(cfg.family == "quartic" || cfg.family == "scaled_quartic",
          "sweep: --family must be quartic or scaled_quartic");
  const std::vector<double> ts = log_grid(cfg.t_min, cfg.t_max, cfg.t_steps);
  Json rows = Json::array();
  std::vector<std::string> header = {"t"};
  for (auto& h : functional_report_header()) header.push_back(h);
  header.push_back("closed_form_gamma2_ratio");
  header.push_back("closed_form_log_sobolev_ratio");
  std::string csv = csv_line(header);
  for (double t : ts) {
    RunConfig one = cfg;
    one.t = t;
    const FunctionalReport r = evaluate_with_rule(build_family(descriptor(one)), one);
    const double u = upper_U(t);
    const double a = upper_alpha_expr(t);
    std::vector<std::string> row = {format_number(t)};
    for (auto& v : functional_report_fields(r)) row.push_back(v);
    row.push_back(format_number(u));
    row.push_back(format_number(a));
    csv += csv_line(row);
    Json j = to_json(r);
    j["t"] = t;
    j["closed_form_gamma2_ratio"] = u;
    j["closed_form_log_sobolev_ratio"] = a;
    rows.push_back(j);
  }
  if (cfg.format == "json") return rows.dump(2) + "\n";
  return csv;
}

LegendreSpectrum initial_spectrum(const RunConfig& cfg) {
  const ZQuadrature& rule = default_z_rule(3);
  require(cfg.d == 3, "heatflow runs on S^2 only (--d 3)");
  if (cfg.family == "quartic" || cfg.family == "scaled_quartic") {
    const double t = cfg.t.value_or(0.69214);
    require(t > 0.0 && std::isfinite(t), "--t must be positive");
    const QuarticFamily q(t);
    const double m = q.mass();
    const AxisymmetricProfile prof(3, [q, m](double z) {
      const ProfileJet j = q.jet(z);
      return ProfileJet{j.phi / m, j.dphi / m, j.ddphi / m};
    });
    return decompose(prof, 4, rule);
  }
  if (cfg.family == "constant") return LegendreSpectrum({1.0, 0.0});
  if (cfg.family == "random_spectrum") {
    const double amp = cfg.amplitude.value_or(kDefaultFlowAmplitude);
    require(amp >= 0.0 && amp < 1.0, "--amplitude must be in [0, 1) for random_spectrum");
    return random_spectrum(cfg.seed, kRandomSpectrumDegree, amp);
  }
  throw UsageError("heatflow: --family must be quartic, constant or random_spectrum");
}

std::string cmd_heatflow(const RunConfig& cfg) {
  require(cfg.final_time > 0.0 && std::isfinite(cfg.final_time), "--final-time must be positive");
  require(cfg.steps >= 1, "--steps must be >= 1");
  require(cfg.lambda > 0.0 && std::isfinite(cfg.lambda), "--lambda must be positive");
  const ZQuadrature& rule = cfg.quad_n == 0 ? default_z_rule(3) : gauss_z_rule(cfg.quad_n, 3);
  const LegendreSpectrum spec = initial_spectrum(cfg);

  std::vector<double> times(static_cast<std::size_t>(cfg.steps) + 1);
  for (int i = 0; i <= cfg.steps; ++i) {
    times[static_cast<std::size_t>(i)] = cfg.final_time * i / cfg.steps;
  }
  times.back() = cfg.final_time;
  const FlowTrace trace = trace_flow(spec, times, rule);

  Json footer;
  const double t_check = std::min(kDissipationTime, 0.5 * cfg.final_time);
  if (t_check >= kDissipationStep) {
    const DissipationConvergence c = dissipation_convergence(spec, t_check, kDissipationStep, rule);
    footer["dissipation"] = {{"t", t_check},
                             {"dt", kDissipationStep},
                             {"coarse", to_json(c.coarse)},
                             {"fine", to_json(c.fine)},
                             {"ratio_h", c.ratio_h},
                             {"ratio_i", c.ratio_i}};
  }
  footer["lambda"] = cfg.lambda;
  bool slack_ok = true;
  try {
    const double slack = integrated_inequality(spec, cfg.final_time, cfg.lambda, rule);
    footer["slack"] = slack;
    slack_ok = slack >= -kSlackTolerance;
  } catch (const std::domain_error& e) {
    footer["slack"] = nullptr;
    footer["slack_error"] = e.what();
  }
  footer["slack_ok"] = slack_ok;

  std::string text;
  if (cfg.format == "json") {
    Json j = footer;
    j["trace"] = to_json(trace);
    j["initial_spectrum"] = std::vector<double>(spec.even_coefficients().begin(),
                                                spec.even_coefficients().end());
    text = j.dump(2) + "\n";
  } else {
    text = flow_trace_csv(trace) + "# " + footer.dump() + "\n";
  }
  if (!slack_ok) throw CheckFailure(text);
  return text;
}

std::string cmd_search(const RunConfig& cfg) {
  SearchOptions o;
  o.seed = cfg.seed;
  o.count = cfg.count;
  o.amplitude = cfg.amplitude.value_or(o.amplitude);
  require(o.amplitude > 0.0 && std::isfinite(o.amplitude), "--amplitude must be positive");
  const SearchSummary s = random_search(o);
  if (cfg.format == "json") return to_json(s).dump(2) + "\n";
  return csv_line(search_summary_header()) + csv_line(search_summary_fields(s));
}

std::string cmd_verify(const RunConfig& cfg) {
  VerificationOptions o;
  o.seed = cfg.seed;
  if (cfg.perturb_tau) o.perturb_tau = 1e-3;
  const VerificationSummary s = run_verification_suite(o);
  const std::string text =
      cfg.format == "json" ? to_json(s).dump(2) + "\n" : verification_csv(s);
  if (!s.all_passed()) throw CheckFailure(text);
  return text;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write '" + cfg.out + "'");
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Gamma_2, log-Sobolev and Poincare constants for symmetric functions on spheres"};
  app.require_subcommand(1);

  std::map<std::string, CLI::App*> subs;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for S^{d-1}");
  bounds->add_option("--d", cfg.d, "Ambient dimension");
  subs["bounds"] = bounds;

  auto* minimize = app.add_subcommand("minimize", "Minimize a quartic-family upper bound");
  minimize->add_option("target,--target", cfg.target, "lambda3 | alpha3")
      ->check(CLI::IsMember({"lambda3", "alpha3"}));
  subs["minimize"] = minimize;

  auto* ratio = app.add_subcommand("ratio", "Functionals and ratios of one test function");
  add_family_options(ratio, cfg);
  subs["ratio"] = ratio;

  auto* sweep = app.add_subcommand("sweep", "Quartic family over a log-spaced t grid");
  sweep->add_option("--family", cfg.family, "quartic | scaled_quartic");
  sweep->add_option("--d", cfg.d, "Ambient dimension (must be 3)");
  sweep->add_option("--t-min", cfg.t_min, "Smallest t");
  sweep->add_option("--t-max", cfg.t_max, "Largest t");
  sweep->add_option("--t-steps", cfg.t_steps, "Number of grid points");
  sweep->add_option("--quad-n", cfg.quad_n, "z-rule size");
  subs["sweep"] = sweep;

  auto* heat = app.add_subcommand("heatflow", "Heat flow on S^2 from unit-mass initial data");
  heat->add_option("--family", cfg.family, "quartic | constant | random_spectrum");
  heat->add_option("--t", cfg.t, "Quartic parameter of the initial data");
  heat->add_option("--d", cfg.d, "Ambient dimension (must be 3)");
  heat->add_option("--seed", cfg.seed, "Seed for random_spectrum");
  heat->add_option("--amplitude", cfg.amplitude, "Sum of |a_k|, k > 0, for random_spectrum");
  heat->add_option("--final-time", cfg.final_time, "Final time T");
  heat->add_option("--steps", cfg.steps, "Number of time steps");
  heat->add_option("--lambda", cfg.lambda, "Constant in the integrated inequality");
  heat->add_option("--quad-n", cfg.quad_n, "z-rule size");
  subs["heatflow"] = heat;

  auto* search = app.add_subcommand("search", "Random search for small Gamma_2 ratios on S^2");
  search->add_option("--seed", cfg.seed, "Seed");
  search->add_option("--count", cfg.count, "Number of samples");
  search->add_option("--amplitude", cfg.amplitude, "Largest coefficient amplitude");
  subs["search"] = search;

  auto* verify = app.add_subcommand("verify", "Run the identity and inequality checks");
  verify->add_option("--seed", cfg.seed, "Seed");
  verify->add_flag("--perturb-tau", cfg.perturb_tau, "Shift tau by 1e-3 (negative control)");
  subs["verify"] = verify;

  for (auto& [name, sub] : subs) add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::string name;
  CLI::App* chosen = nullptr;
  for (auto& [n, sub] : subs) {
    if (sub->parsed()) {
      name = n;
      chosen = sub;
    }
  }

  try {
    if (!cfg.config.empty()) apply_config(chosen, cfg.config);
    std::string text;
    if (name == "bounds") text = cmd_bounds(cfg);
    if (name == "minimize") text = cmd_minimize(cfg);
    if (name == "ratio") text = cmd_ratio(cfg);
    if (name == "sweep") text = cmd_sweep(cfg);
    if (name == "heatflow") text = cmd_heatflow(cfg);
    if (name == "search") text = cmd_search(cfg);
    if (name == "verify") text = cmd_verify(cfg);
    emit(cfg, text, out);
    return kExitOk;
  } catch (const CheckFailure& e) {
    emit(cfg, e.what(), out);
    err << "error: check failed\n";
    return kExitCheckFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace gamma2
