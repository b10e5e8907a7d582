// Acceptance run: one line per criterion, exit status 0 only if all hold.
// Usage: acceptance <path to the ncsuper executable>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ncsuper/suites.hpp"

namespace {

using namespace ncsuper;

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;
};

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// verify --suite all exits 0, its JSON follows the schema and re-serializes identically,
// and a corrupted rule makes the CLI exit 1.
bool cli_contract(const std::string& exe, std::string& detail) {
  const auto dir = std::filesystem::temp_directory_path() / ("ncsuper_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto report = dir / "report.json";
  bool ok = true;
  const int code = run("'" + exe + "' verify --suite all --format json -o '" + report.string() + "' > /dev/null");
  if (code != 0) {
    detail += "verify exit " + std::to_string(code) + "; ";
    ok = false;
  }
  try {
    const std::string text = slurp(report);
    const auto j = nlohmann::ordered_json::parse(text);
    const bool schema = j.size() == 4 && j.at("version").is_string() && j.at("suites").is_array() &&
                        j.at("results").is_array() && j.at("summary").at("pass").is_number_unsigned() &&
                        j.at("summary").at("fail") == 0 && j.at("summary").size() == 2;
    bool rows = true;
    std::size_t passed = 0;
    for (const auto& r : j.at("results")) {
      rows = rows && r.size() == 4 && r.at("check_id").is_string() && r.at("paper_anchor").is_string() &&
             r.at("residual").is_string() && (r.at("status") == "pass" || r.at("status") == "fail");
      passed += r.at("status") == "pass" ? 1 : 0;
    }
    if (!schema || !rows || passed != j.at("summary").at("pass")) {
      detail += "schema mismatch; ";
      ok = false;
    }
    if (j.dump(2) + "\n" != text) {
      detail += "JSON does not round-trip; ";
      ok = false;
    }
  } catch (const std::exception& e) {
    detail += std::string("report unreadable: ") + e.what() + "; ";
    ok = false;
  }
  for (const char* algebra : {"superspace", "calculus", "group", "combined"}) {
    const int c = run("'" + exe + "' verify --suite all --corrupt-rule " + algebra + ":0 > /dev/null");
    if (c != 1) {
      detail += std::string("corrupted ") + algebra + " exit " + std::to_string(c) + "; ";
      ok = false;
    }
  }
  if (run("'" + exe + "' verify > /dev/null 2>&1") != 2) {
    detail += "missing --suite is not a usage error; ";
    ok = false;
  }
  std::filesystem::remove_all(dir);

  // every single-rule corruption of every presentation is caught
  std::size_t total = 0, caught = 0;
  for (const auto& p : standard_algebras().all())
    for (std::size_t k = 0; k < p->rules().size(); ++k) {
      ++total;
      const SuiteReport r = run_suites(SuiteConfig{{"all"}, {}, RuleCorruption{p->name(), k}});
      if (r.failed() > 0)
        ++caught;
      else
        detail += "undetected corruption " + p->name() + ":" + std::to_string(k) + "; ";
    }
  if (caught != total) ok = false;
  detail += std::to_string(caught) + "/" + std::to_string(total) + " corruptions detected";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <ncsuper executable>\n";
    return 2;
  }
  const SuiteReport report = run_suites(SuiteConfig{{"all"}, {}, {}});

  const std::vector<Criterion> criteria = {
      {1, "confluence of every presentation", {"presentations.confluence."}},
      {2, "R, B, Rcheck and J identities", {"matrices.r_", "matrices.b_", "matrices.rcheck_", "matrices.j_",
                                             "matrices.supertranspose.", "presentations.superspace.exchange.",
                                             "presentations.calculus.exchange.", "presentations.forms.exchange.",
                                             "presentations.wedge.exchange."}},
      {3, "supergroup: RTT, orthosymplectic, antipode, derived relations", {"supergroup.", "presentations.group."}},
      {4, "covariance of the calculus, invariants, RTT-type identities", {"covariance."}},
      {5, "forms: sigma, pi, invariants, d^2 = 0", {"forms."}},
      {6, "connection: torsion, D rho, Leibniz routes", {"connection."}},
      {7, "curvature: closed form, components, linearity", {"curvature."}},
      {8, "metric: values, compatibility parts, verdict", {"metric."}},
      {9, "classical limit", {"presentations.classical.", "matrices.classical.", "forms.classical_sigma.",
                              "curvature.classical."}},
  };

  bool all_ok = true;
  std::vector<bool> covered(report.results.size(), false);
  for (const Criterion& c : criteria) {
    std::size_t n = 0, failed = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      const CheckResult& r = report.results[i];
      bool match = false;
      for (const std::string& p : c.prefixes) match = match || starts_with(r.check_id, p);
      if (!match) continue;
      covered[i] = true;
      ++n;
      if (!r.pass && failed++ == 0) first_failure = r.check_id + ": " + r.residual;
    }
    const bool ok = n > 0 && failed == 0;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.title << "  (" << n - failed << "/"
              << n << " checks, exact zero residual)";
    if (!first_failure.empty()) std::cout << "  first failure: " << first_failure;
    std::cout << '\n';
  }

  std::string detail;
  const bool cli_ok = cli_contract(argv[1], detail);
  all_ok = all_ok && cli_ok;
  std::cout << (cli_ok ? "PASS" : "FAIL") << "  criterion 10  CLI contract  (" << detail << ")\n";

  std::size_t uncovered = 0, uncovered_failed = 0;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) {
      ++uncovered;
      if (!report.results[i].pass) ++uncovered_failed;
    }
  std::cout << "other checks: " << uncovered - uncovered_failed << "/" << uncovered << " pass; report total "
            << report.passed() << "/" << report.results.size() << '\n';
  all_ok = all_ok && uncovered_failed == 0 && !report.aborted;
  return all_ok ? 0 : 1;
}
