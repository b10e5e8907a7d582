#include "ncsuper/suites.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "ncsuper/forms.hpp"
#include "ncsuper/geometry.hpp"
#include "ncsuper/matrix_checks.hpp"

namespace ncsuper {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"presentations", "matrices", "covariance", "forms",
                                                 "connection",    "curvature", "metric"};
  return names;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; }));
}

namespace {

std::vector<std::string> expand(const std::vector<std::string>& requested) {
  if (requested.empty()) throw std::invalid_argument("no suite selected");
  std::vector<std::string> out;
  for (const std::string& s : requested) {
    if (s == "all") return suite_names();
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  }
  // canonical order, no duplicates
  for (const std::string& s : suite_names())
    if (std::find(requested.begin(), requested.end(), s) != requested.end()) out.push_back(s);
  return out;
}

CheckList run_one(const std::string& suite, const AlgebraSet& set, const SuiteConfig& config) {
  CheckList out;
  if (suite == "presentations") {
    append(out, verify_presentation_theorems(set));
    append(out, check_classical_superspace(set));
  } else if (suite == "matrices") {
    append(out, check_matrix_identities());
    append(out, check_supergroup(set));
  } else if (suite == "covariance") {
    append(out, check_covariance(set));
    append(out, check_rtt_family(set));
  } else if (suite == "forms") {
    append(out, check_form_identities(set));
  } else if (suite == "connection") {
    append(out, check_connection(set));
  } else if (suite == "curvature") {
    append(out, check_curvature(set));
  } else if (suite == "metric") {
    append(out, check_metric(set, config.pinned));
  }
  return out;
}

}  // namespace

SuiteReport run_suites(const SuiteConfig& config) {
  SuiteReport report;
  report.suites = expand(config.suites);
  const AlgebraSet set = config.corruption ? build_algebras(config.corruption) : standard_algebras();

  const CheckList confluence = check_confluence_all(set);
  const bool confluent = std::all_of(confluence.begin(), confluence.end(), [](const CheckResult& r) { return r.pass; });
  const bool wants_presentations =
      std::find(report.suites.begin(), report.suites.end(), "presentations") != report.suites.end();
  if (wants_presentations || !confluent) append(report.results, confluence);
  if (!confluent) {
    report.aborted = true;
    return report;
  }
  for (const std::string& s : report.suites) {
    try {
      append(report.results, run_one(s, set, config));
    } catch (const std::exception& e) {
      // a corrupted presentation can break an engine invariant mid-suite
      report.results.push_back(bool_check(s + ".error", "suite completed", false, e.what()));
    }
  }
  return report;
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const CheckResult& r : report.results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.check_id;
    if (!r.pass) os << "  [" << r.anchor << "]  residual: " << r.residual;
    os << '\n';
  }
  if (report.aborted) os << "aborted: a presentation is not confluent\n";
  os << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return os.str();
}

std::string report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["version"] = "1.0";
  j["suites"] = report.suites;
  j["results"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : report.results)
    j["results"].push_back({{"check_id", r.check_id},
                            {"paper_anchor", r.anchor},
                            {"status", r.pass ? "pass" : "fail"},
                            {"residual", r.residual}});
  j["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}};
  return j.dump(2) + "\n";
}

}  // namespace ncsuper
