#include <doctest.h>

#include <json.hpp>

#include "ncsuper/suites.hpp"

using namespace ncsuper;

TEST_CASE("suite selection") {
  CHECK_THROWS_AS(run_suites(SuiteConfig{}), std::invalid_argument);
  CHECK_THROWS_AS(run_suites(SuiteConfig{{"bogus"}, {}, {}}), std::invalid_argument);
  const SuiteReport r = run_suites(SuiteConfig{{"metric", "forms"}, {}, {}});
  CHECK(r.suites == std::vector<std::string>{"forms", "metric"});
  CHECK(r.failed() == 0);
}

TEST_CASE("json report schema") {
  const SuiteReport r = run_suites(SuiteConfig{{"matrices"}, {}, {}});
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j.at("version").is_string());
  CHECK(j.at("suites") == nlohmann::json::array({"matrices"}));
  REQUIRE(j.at("results").size() == r.results.size());
  for (const auto& item : j.at("results")) {
    CHECK(item.size() == 4);
    CHECK(item.at("check_id").is_string());
    CHECK(item.at("paper_anchor").is_string());
    CHECK((item.at("status") == "pass" || item.at("status") == "fail"));
    CHECK(item.at("residual").is_string());
  }
  CHECK(j.at("summary").at("pass") == r.passed());
  CHECK(j.at("summary").at("fail") == 0);
}

TEST_CASE("report is deterministic") {
  const SuiteConfig cfg{{"forms"}, {}, {}};
  CHECK(report_json(run_suites(cfg)) == report_json(run_suites(cfg)));
}

TEST_CASE("non-confluent presentation aborts") {
  const SuiteReport r = run_suites(SuiteConfig{{"all"}, {}, RuleCorruption{"superspace", 4}});
  CHECK(r.aborted);
  CHECK(r.failed() > 0);
}

TEST_CASE("text report") {
  const SuiteReport r = run_suites(SuiteConfig{{"metric"}, std::pair{Poly(1), Poly(0)}, {}});
  const std::string text = report_text(r);
  CHECK(text.find("FAIL metric.compatibility.xi1_xi1") != std::string::npos);
  CHECK(text.find("summary:") != std::string::npos);
}
