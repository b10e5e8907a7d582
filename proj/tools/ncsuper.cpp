// Command-line front end: verify, normalize, curvature, sigma.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ncsuper/forms.hpp"
#include "ncsuper/geometry.hpp"
#include "ncsuper/suites.hpp"

namespace {

using namespace ncsuper;

constexpr int kFail = 1;
constexpr int kConfig = 2;

Poly parse_poly(const std::string& text) {
  const Forms f(standard_algebras());
  const Tensor t = f.parse(text);
  if (!t.layout().empty() || (!t.is_zero() && !t.value().is_scalar()))
    throw std::invalid_argument("'" + text + "' is not a polynomial in h, c0, c1, c2");
  return t.value().scalar_part();
}

RuleCorruption parse_corruption(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--corrupt-rule expects algebra:index");
  return {spec.substr(0, colon), static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)))};
}

int run_verify(const std::vector<std::string>& suites, const std::string& format, const std::string& output,
               const std::string& c0, const std::string& c1, const std::string& corrupt) {
  SuiteConfig config;
  config.suites = suites;
  if (!c0.empty() || !c1.empty())
    config.pinned = std::pair{c0.empty() ? Poly(0) : parse_poly(c0), c1.empty() ? Poly(0) : parse_poly(c1)};
  if (!corrupt.empty()) config.corruption = parse_corruption(corrupt);
  const SuiteReport report = run_suites(config);
  const std::string text = format == "json" ? report_json(report) : report_text(report);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream os(output);
    if (!(os << text) || !os.flush()) {
      std::cerr << "error: cannot write " << output << '\n';
      return kConfig;
    }
    std::cout << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.failed() == 0 ? 0 : kFail;
}

int run_normalize(const std::string& expr, const std::string& algebra) {
  const AlgebraSet& set = standard_algebras();
  if (algebra == "forms") {
    const Forms f(set);
    std::cout << f.format(f.parse(expr)) << '\n';
    return 0;
  }
  const auto id = algebra_from_name(algebra);
  if (!id) throw std::invalid_argument("unknown algebra '" + algebra + "'");
  const Presentation& p = set.get(*id);
  const bool group_letters = *id == AlgebraId::group || *id == AlgebraId::combined;
  std::cout << p.format(p.parse(expr, group_letters ? group_macros(p) : Presentation::Macros{})) << '\n';
  return 0;
}

int run_curvature(int a, const std::string& c0, const std::string& c1) {
  const Forms f(standard_algebras());
  ConnectionParams params = ConnectionParams::torsionless();
  if (!c0.empty()) params.c0 = parse_poly(c0);
  if (!c1.empty()) {
    params.c1 = parse_poly(c1);
    params.c2 = Poly(-1) * params.c1;
  }
  const Geometry g(f, params);
  std::cout << f.format(g.curvature(f.basis(static_cast<std::size_t>(a - 1)))) << '\n';
  return 0;
}

int run_sigma(const std::string& expr, std::size_t pos) {
  const Forms f(standard_algebras());
  std::cout << f.format(f.sigma(f.parse(expr), pos)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the super-Jordanian OSp_h(2/1) quantum superspace"};
  app.require_subcommand(1);

  std::vector<std::string> suites;
  std::string format = "text", output, c0, c1, corrupt;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "presentations, matrices, covariance, forms, connection, curvature, metric, all")
      ->required();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output,-o", output, "Report path (stdout when omitted)");
  verify->add_option("--c0", c0, "Pin c0 for the metric compatibility check");
  verify->add_option("--c1", c1, "Pin c1 for the metric compatibility check");
  verify->add_option("--corrupt-rule", corrupt)->group("");

  std::string expr, algebra;
  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize->add_option("expr", expr)->required();
  normalize->add_option("--algebra", algebra, "superspace, calculus, group, combined or forms")->required();

  int a = 1;
  auto* curvature = app.add_subcommand("curvature", "Print pi12 D^2 Xi^a for a torsionless connection");
  curvature->add_option("--a", a, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  curvature->add_option("--c0", c0, "Value of c0 (symbolic by default)");
  curvature->add_option("--c1", c1, "Value of c1 (symbolic by default)");

  std::size_t pos = 0;
  auto* sigma = app.add_subcommand("sigma", "Apply sigma to adjacent one-form slots");
  sigma->add_option("expr", expr)->required();
  sigma->add_option("--pos", pos, "First slot (0-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfig;
  }

  try {
    if (*verify) return run_verify(suites, format, output, c0, c1, corrupt);
    if (*normalize) return run_normalize(expr, algebra);
    if (*curvature) return run_curvature(a, c0, c1);
    if (*sigma) return run_sigma(expr, pos);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kConfig;
}
