#include "gamma2/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace gamma2 {

namespace {

Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

const char* mode_name(SampleMode m) {
  return m == SampleMode::log_density ? "log_density" : "density";
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

Json to_json(const FunctionalReport& r) {
  return {{"mass", r.mass},
          {"fisher", r.fisher},
          {"entropy", r.entropy},
          {"gamma2_direct", r.gamma2_direct},
          {"gamma2_bochner", r.gamma2_bochner},
          {"hsq", r.hsq},
          {"gamma2_ratio", optional_json(r.gamma2_ratio)},
          {"log_sobolev_ratio", optional_json(r.log_sobolev_ratio)},
          {"poincare_ratio_sqrtf", optional_json(r.poincare_ratio_sqrtf)}};
}

Json to_json(const BoundReport& r) {
  return {{"d", r.d},
          {"lambda_d", r.lambda_d},
          {"lambda_lower", r.lambda_lower},
          {"cd_lower", r.cd_lower},
          {"bakry_emery", r.bakry_emery},
          {"rothaus", r.rothaus},
          {"lichnerowicz", r.lichnerowicz},
          {"upper_lambda3", optional_json(r.upper_lambda3)},
          {"upper_alpha3", optional_json(r.upper_alpha3)}};
}

Json to_json(const ScalarMinResult& r) {
  return {{"t_star", r.t_star},
          {"value", r.value},
          {"evaluations", r.evaluations},
          {"bracket_lo", r.bracket_lo},
          {"bracket_hi", r.bracket_hi}};
}

Json to_json(const FlowTrace& r) {
  return {{"time", r.times},
          {"mass", r.mass},
          {"entropy", r.entropy},
          {"fisher", r.fisher},
          {"gamma2", r.gamma2}};
}

Json to_json(const DissipationResidual& r) {
  return {{"residual_h", r.residual_h}, {"residual_i", r.residual_i}};
}

Json to_json(const FamilyDescriptor& d) {
  Json j = {{"family", d.family}};
  if (d.family == "quartic" || d.family == "scaled_quartic") j["t"] = d.t;
  if (d.family == "constant") {
    j["c"] = d.c;
    j["dim"] = d.sample.dim;
  }
  if (d.family == "even_poly") {
    j["seed"] = d.sample.seed;
    j["amplitude"] = d.sample.amplitude;
    j["mode"] = mode_name(d.sample.mode);
    j["dim"] = d.sample.dim;
    j["max_degree"] = d.sample.max_degree;
  }
  return j;
}

FamilyDescriptor family_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("family: expected a JSON object");
  FamilyDescriptor d;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "family") {
        d.family = value.get<std::string>();
      } else if (key == "t") {
        d.t = value.get<double>();
      } else if (key == "c") {
        d.c = value.get<double>();
      } else if (key == "seed") {
        d.sample.seed = value.get<std::uint64_t>();
      } else if (key == "amplitude") {
        d.sample.amplitude = value.get<double>();
      } else if (key == "dim") {
        d.sample.dim = value.get<int>();
      } else if (key == "max_degree") {
        d.sample.max_degree = value.get<int>();
      } else if (key == "mode") {
        const auto m = value.get<std::string>();
        if (m == "log_density") {
          d.sample.mode = SampleMode::log_density;
        } else if (m == "density") {
          d.sample.mode = SampleMode::density;
        } else {
          throw std::invalid_argument("family: unknown mode '" + m + "'");
        }
      } else {
        throw std::invalid_argument("family: unknown key '" + key + "'");
      }
    }
  } catch (const Json::type_error& e) {
    throw std::invalid_argument(std::string("family: ") + e.what());
  }
  return d;
}

Json to_json(const SearchSummary& s) {
  return {{"count", s.count},
          {"evaluated", s.evaluated},
          {"rejected", s.rejected},
          {"unresolved", s.unresolved},
          {"below_six", s.below_six},
          {"min_ratio", optional_json(s.min_ratio)},
          {"max_ratio", optional_json(s.max_ratio)},
          {"argmin", s.argmin ? to_json(*s.argmin) : Json(nullptr)}};
}

Json to_json(const VerificationSummary& s) {
  Json j = Json::object();
  for (const CheckResult& c : s.checks) {
    j[c.name] = {{"count", c.count},
                 {"max_residual", c.max_residual},
                 {"tolerance", c.tolerance},
                 {"pass", c.pass}};
  }
  return j;
}

std::vector<std::string> functional_report_header() {
  return {"mass",           "fisher",       "entropy",           "gamma2_direct",
          "gamma2_bochner", "hsq",          "gamma2_ratio",      "log_sobolev_ratio",
          "poincare_ratio_sqrtf"};
}

std::vector<std::string> functional_report_fields(const FunctionalReport& r) {
  return {format_number(r.mass),           format_number(r.fisher),
          format_number(r.entropy),        format_number(r.gamma2_direct),
          format_number(r.gamma2_bochner), format_number(r.hsq),
          format_number(r.gamma2_ratio),   format_number(r.log_sobolev_ratio),
          format_number(r.poincare_ratio_sqrtf)};
}

std::vector<std::string> bound_report_header() {
  return {"d",       "lambda_d",     "lambda_lower",  "cd_lower",    "bakry_emery",
          "rothaus", "lichnerowicz", "upper_lambda3", "upper_alpha3"};
}

std::vector<std::string> bound_report_fields(const BoundReport& r) {
  return {std::to_string(r.d),          format_number(r.lambda_d),
          format_number(r.lambda_lower), format_number(r.cd_lower),
          format_number(r.bakry_emery), format_number(r.rothaus),
          format_number(r.lichnerowicz), format_number(r.upper_lambda3),
          format_number(r.upper_alpha3)};
}

std::vector<std::string> scalar_min_header() {
  return {"t_star", "value", "evaluations", "bracket_lo", "bracket_hi"};
}

std::vector<std::string> scalar_min_fields(const ScalarMinResult& r) {
  return {format_number(r.t_star), format_number(r.value), std::to_string(r.evaluations),
          format_number(r.bracket_lo), format_number(r.bracket_hi)};
}

std::string flow_trace_csv(const FlowTrace& trace) {
  std::string out = csv_line({"time", "mass", "entropy", "fisher", "gamma2"});
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out += csv_line({format_number(trace.times[i]), format_number(trace.mass[i]),
                     format_number(trace.entropy[i]), format_number(trace.fisher[i]),
                     format_number(trace.gamma2[i])});
  }
  return out;
}

std::vector<std::string> search_summary_header() {
  return {"count",     "evaluated", "rejected",  "unresolved", "below_six",
          "min_ratio", "max_ratio", "argmin_seed", "argmin_amplitude", "argmin_mode"};
}

std::vector<std::string> search_summary_fields(const SearchSummary& s) {
  std::vector<std::string> f = {std::to_string(s.count),      std::to_string(s.evaluated),
                                std::to_string(s.rejected),   std::to_string(s.unresolved),
                                std::to_string(s.below_six),  format_number(s.min_ratio),
                                format_number(s.max_ratio)};
  if (s.argmin) {
    f.push_back(std::to_string(s.argmin->sample.seed));
    f.push_back(format_number(s.argmin->sample.amplitude));
    f.push_back(mode_name(s.argmin->sample.mode));
  } else {
    f.insert(f.end(), 3, std::string());
  }
  return f;
}

std::string verification_csv(const VerificationSummary& s) {
  std::string out = csv_line({"check", "count", "max_residual", "tolerance", "pass"});
  for (const CheckResult& c : s.checks) {
    out += csv_line({c.name, std::to_string(c.count), format_number(c.max_residual),
                     format_number(c.tolerance), c.pass ? "true" : "false"});
  }
  return out;
}

}  // namespace gamma2
