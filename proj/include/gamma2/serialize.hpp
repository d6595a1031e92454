#pragma once

// JSON and CSV forms of every report type. CSV numbers carry 17 significant
// digits; absent optional values are empty CSV fields and JSON nulls.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gamma2/bounds.hpp"
#include "gamma2/families.hpp"
#include "gamma2/functionals.hpp"
#include "gamma2/heatflow.hpp"
#include "gamma2/search.hpp"
#include "gamma2/verify.hpp"

namespace gamma2 {

using Json = nlohmann::json;

std::string format_number(double x);
std::string format_number(const std::optional<double>& x);
/// Comma-joined fields with a trailing newline.
std::string csv_line(const std::vector<std::string>& fields);

Json to_json(const FunctionalReport& r);
Json to_json(const BoundReport& r);
Json to_json(const ScalarMinResult& r);
Json to_json(const FlowTrace& r);
Json to_json(const DissipationResidual& r);
Json to_json(const FamilyDescriptor& d);
Json to_json(const SearchSummary& s);
/// {check_name: {count, max_residual, tolerance, pass}}
Json to_json(const VerificationSummary& s);

/// Throws std::invalid_argument on unknown keys or wrong types.
FamilyDescriptor family_from_json(const Json& j);

std::vector<std::string> functional_report_header();
std::vector<std::string> functional_report_fields(const FunctionalReport& r);

/// d,lambda_d,lambda_lower,cd_lower,bakry_emery,rothaus,lichnerowicz,upper_lambda3,upper_alpha3
std::vector<std::string> bound_report_header();
std::vector<std::string> bound_report_fields(const BoundReport& r);

std::vector<std::string> scalar_min_header();
std::vector<std::string> scalar_min_fields(const ScalarMinResult& r);

/// Header time,mass,entropy,fisher,gamma2 and one row per time.
std::string flow_trace_csv(const FlowTrace& trace);

std::vector<std::string> search_summary_header();
std::vector<std::string> search_summary_fields(const SearchSummary& s);

/// Header check,count,max_residual,tolerance,pass and one row per check.
std::string verification_csv(const VerificationSummary& s);

}  // namespace gamma2
