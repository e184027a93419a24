#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "toroidal/toroidal.h"

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TOROIDAL_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Owns a result handle for the duration of a check.
struct Result {
  toroidal_result* r = nullptr;
  ~Result() { toroidal_result_free(r); }
  std::string text() const { return toroidal_result_text(r); }
  nlohmann::json json() const { return nlohmann::json::parse(text()); }
};

struct GermHandle {
  toroidal_germ* g = nullptr;
  ~GermHandle() { toroidal_germ_free(g); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(toroidal_version()).size() > 0);
  CHECK(std::string(toroidal_status_name(TOROIDAL_OK)) == "Ok");
  CHECK(std::string(toroidal_status_name(TOROIDAL_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(toroidal_status_name(TOROIDAL_STEP_BUDGET_EXCEEDED)) == "StepBudgetExceeded");
  CHECK(std::string(toroidal_status_name(TOROIDAL_INTERNAL_ERROR)) == "InternalError");
  CHECK(std::string(toroidal_status_name(42)) == "Unknown");
}

TEST_CASE("germ operations through handles") {
  GermHandle germ;
  Result err;
  REQUIRE(toroidal_germ_parse(fixture("tau_order2.json").c_str(), 8, &germ.g, &err.r) ==
          TOROIDAL_OK);
  CHECK(err.r == nullptr);

  Result tau;
  REQUIRE(toroidal_tau(germ.g, &tau.r) == TOROIDAL_OK);
  auto j = tau.json();
  CHECK(j["tau"] == 2);
  CHECK(j["provenance"]["version"] == toroidal_version());
  CHECK(j["provenance"]["trunc_degree"] == 8);

  Result cls;
  REQUIRE(toroidal_classify(germ.g, &cls.r) == TOROIDAL_OK);
  CHECK(cls.json()["form"] == "Eq16");

  Result charts;
  REQUIRE(toroidal_blowup_domain(germ.g, "2curve", nullptr, 0, &charts.r) == TOROIDAL_OK);
  CHECK(charts.json()["charts"].size() == 2);

  const char* consts[] = {"1/2"};
  Result translated;
  REQUIRE(toroidal_blowup_domain(germ.g, "3pt", consts, 1, &translated.r) == TOROIDAL_OK);
  CHECK(translated.json()["charts"].size() > 3);

  Result bad_center;
  CHECK(toroidal_blowup_domain(germ.g, "sphere", nullptr, 0, &bad_center.r) ==
        TOROIDAL_PARSE_ERROR);
  CHECK(bad_center.text().find("ParseError") == 0);

  Result target;
  REQUIRE(toroidal_blowup_target(germ.g, 2, &target.r) == TOROIDAL_OK);
  for (const auto& c : target.json()["charts"]) CHECK(c.contains("lifts"));

  Result no_lambda;
  CHECK(toroidal_lambda(germ.g, &no_lambda.r) == TOROIDAL_OK);
}

TEST_CASE("identity germ") {
  GermHandle germ;
  REQUIRE(toroidal_germ_parse(fixture("identity.json").c_str(), 8, &germ.g, nullptr) ==
          TOROIDAL_OK);
  Result cls;
  REQUIRE(toroidal_classify(germ.g, &cls.r) == TOROIDAL_OK);
  CHECK(cls.json()["form"] == "Toroidal6");
  Result lambda;
  REQUIRE(toroidal_lambda(germ.g, &lambda.r) == TOROIDAL_OK);
  CHECK(lambda.json()["verdict"] == "toroidal");
  Result tau;
  CHECK(toroidal_tau(germ.g, &tau.r) == TOROIDAL_MALFORMED_GERM);
  CHECK(toroidal_result_status(tau.r) == TOROIDAL_MALFORMED_GERM);
}

TEST_CASE("parse failures") {
  GermHandle germ;
  Result err;
  CHECK(toroidal_germ_parse(fixture("malformed.json").c_str(), 8, &germ.g, &err.r) ==
        TOROIDAL_PARSE_ERROR);
  CHECK(germ.g == nullptr);
  CHECK(err.text().find("ParseError") == 0);

  Result null_text;
  CHECK(toroidal_germ_parse(nullptr, 8, &germ.g, &null_text.r) == TOROIDAL_INVALID_ARGUMENT);
  Result bad_trunc;
  CHECK(toroidal_germ_parse("{}", 0, &germ.g, &bad_trunc.r) == TOROIDAL_INVALID_ARGUMENT);
  Result null_germ;
  CHECK(toroidal_tau(nullptr, &null_germ.r) == TOROIDAL_INVALID_ARGUMENT);
}

TEST_CASE("relations through the C interface") {
  Result dot;
  REQUIRE(toroidal_resolve3(1, 1, -3, "1", 100, TOROIDAL_FORMAT_DOT, &dot.r) == TOROIDAL_OK);
  CHECK(dot.text().rfind("// provenance: ", 0) == 0);
  CHECK(dot.text().find("digraph resolve3") != std::string::npos);

  Result json;
  REQUIRE(toroidal_resolve3(5, -1, -1, "-2/3", 100, TOROIDAL_FORMAT_JSON, &json.r) == TOROIDAL_OK);
  auto j = json.json();
  for (const auto& e : j["certificate"]) CHECK(e["descends"] == true);

  Result invalid;
  CHECK(toroidal_resolve3(1, 1, 3, "1", 100, TOROIDAL_FORMAT_JSON, &invalid.r) ==
        TOROIDAL_INVALID_PRE_RELATION);
  Result budget;
  CHECK(toroidal_resolve3(1, 1, -12, "1", 2, TOROIDAL_FORMAT_JSON, &budget.r) ==
        TOROIDAL_STEP_BUDGET_EXCEEDED);
  Result zero_lambda;
  CHECK(toroidal_resolve3(1, 1, -3, "0", 10, TOROIDAL_FORMAT_JSON, &zero_lambda.r) ==
        TOROIDAL_INVALID_PRE_RELATION);
}

TEST_CASE("principalization through the C interface") {
  toroidal_fan* fan = nullptr;
  Result err;
  REQUIRE(toroidal_fan_parse(fixture("octant_pair.json").c_str(), &fan, &err.r) == TOROIDAL_OK);
  Result pair, mixed, unknown;
  REQUIRE(toroidal_principalize(fan, "pair", 0, &pair.r) == TOROIDAL_OK);
  auto j = pair.json();
  CHECK(j["locally_principal"] == true);
  CHECK(j["history"][0]["omega_bar"] == nlohmann::json::array({3, 2}));
  REQUIRE(toroidal_principalize(fan, "mixed", 0, &mixed.r) == TOROIDAL_OK);
  CHECK(mixed.json()["locally_principal"] == true);
  CHECK(toroidal_principalize(fan, "greedy", 0, &unknown.r) == TOROIDAL_INVALID_ARGUMENT);
  toroidal_fan_free(fan);
}

TEST_CASE("suite through the C interface") {
  const char* only[] = {"lattice"};
  Result a, b;
  REQUIRE(toroidal_suite(5, 8, only, 1, &a.r) == TOROIDAL_OK);
  REQUIRE(toroidal_suite(5, 8, only, 1, &b.r) == TOROIDAL_OK);
  CHECK(a.text() == b.text());
  auto j = a.json();
  CHECK(j["provenance"]["seed"] == 5);
  CHECK(j["criteria"].size() == 1);
  CHECK(j["summary"]["failed"] == 0);
  const char* bogus[] = {"nonsense"};
  Result bad;
  CHECK(toroidal_suite(5, 8, bogus, 1, &bad.r) == TOROIDAL_INVALID_ARGUMENT);
}
