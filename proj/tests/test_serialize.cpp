#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "gamma2/serialize.hpp"

using namespace gamma2;

TEST_CASE("numbers are printed with 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(32.0 / 15) == "2.1333333333333333");
  CHECK(std::stod(format_number(M_PI)) == M_PI);
  CHECK(format_number(std::optional<double>{}) == "");
  CHECK(format_number(std::optional<double>{2.5}) == "2.5");
}

TEST_CASE("csv lines") {
  CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
  CHECK(csv_line({}) == "\n");
  CHECK(bound_report_header().front() == "d");
  CHECK(bound_report_header().size() == bound_report_fields(bound_report(5)).size());
  CHECK(functional_report_header().size() == functional_report_fields(FunctionalReport{}).size());
  CHECK(scalar_min_header().size() == scalar_min_fields(ScalarMinResult{}).size());
  CHECK(search_summary_header().size() == search_summary_fields(SearchSummary{}).size());
  const auto f = bound_report_fields(bound_report(4));
  CHECK(f[0] == "4");
  CHECK(f.back() == "");
}

TEST_CASE("flow trace csv") {
  FlowTrace t;
  t.times = {0.0, 0.5};
  t.mass = {1.0, 1.0};
  t.entropy = {0.25, 0.125};
  t.fisher = {2.0, 1.0};
  t.gamma2 = {12.0, 6.0};
  std::istringstream in(flow_trace_csv(t));
  std::string line;
  std::getline(in, line);
  CHECK(line == "time,mass,entropy,fisher,gamma2");
  std::getline(in, line);
  CHECK(line == "0,1,0.25,2,12");
  std::getline(in, line);
  CHECK(line == "0.5,1,0.125,1,6");
  const Json j = to_json(t);
  CHECK(j.at("fisher").size() == 2);
}

TEST_CASE("json") {
  const Json b = to_json(bound_report(3));
  CHECK(b.at("lambda_lower").get<double>() == 5.5);
  CHECK(b.at("upper_lambda3").is_number());
  CHECK(to_json(bound_report(4)).at("upper_lambda3").is_null());

  FunctionalReport r;
  r.fisher = 2.0;
  r.gamma2_ratio = 6.0;
  const Json jr = to_json(r);
  CHECK(jr.at("gamma2_ratio").get<double>() == 6.0);
  CHECK(jr.at("log_sobolev_ratio").is_null());

  // Round trip through text keeps every bit.
  const Json again = Json::parse(to_json(bound_report(7)).dump());
  CHECK(again.at("rothaus").get<double>() == bound_report(7).rothaus);

  VerificationSummary v;
  v.checks.push_back({"x", 3, 1e-20, 1e-12, true});
  const Json jv = to_json(v);
  CHECK(jv.at("x").at("count").get<int>() == 3);
  CHECK(jv.at("x").at("pass").get<bool>());
  CHECK(!verification_csv(v).empty());
}

TEST_CASE("family descriptors round trip") {
  FamilyDescriptor d;
  d.family = "even_poly";
  d.sample.seed = 18446744073709551557ULL;
  d.sample.amplitude = 0.3;
  d.sample.mode = SampleMode::density;
  d.sample.max_degree = 2;
  const FamilyDescriptor e = family_from_json(Json::parse(to_json(d).dump()));
  CHECK(e.family == d.family);
  CHECK(e.sample.seed == d.sample.seed);
  CHECK(e.sample.amplitude == d.sample.amplitude);
  CHECK(e.sample.mode == d.sample.mode);
  CHECK(e.sample.max_degree == 2);
  CHECK_THROWS_AS(family_from_json(Json{{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json{{"mode", "weird"}}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json{{"t", "text"}}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json::array()), std::invalid_argument);
}
