#include <doctest.h>

#include "ncsuper/geometry.hpp"

using namespace ncsuper;

namespace {
const Forms& forms() {
  static const Forms f(standard_algebras());
  return f;
}

void require_all_pass(const CheckList& checks) {
  REQUIRE_FALSE(checks.empty());
  for (const CheckResult& r : checks) {
    INFO(r.check_id << ": " << r.residual);
    CHECK(r.pass);
  }
}
}  // namespace

TEST_CASE("covariant derivative") {
  const Forms& f = forms();
  const Geometry g(f, ConnectionParams::torsionless());
  CHECK(g.D(f.basis(1)) == f.parse("c0*x*rho ox rho - c1*(eta ox rho + rho ox eta)"));
  const Geometry zero(f, ConnectionParams{Poly(0), Poly(0), Poly(0)});
  for (std::size_t a = 0; a < 3; ++a) CHECK(zero.D(f.basis(a)).is_zero());
  CHECK_FALSE(zero.D(f.rho()).is_zero());
  CHECK(zero.D_tensor(f.basis_pair(0, 2)).is_zero());
  CHECK(g.D_tensor(f.basis(2)) == g.D(f.basis(2)));
  CHECK_THROWS_AS(g.D(f.lambda()), FormError);
}

TEST_CASE("D on a tensor pair at c0 = 0") {
  const Forms& f = forms();
  const Geometry g(f, ConnectionParams::torsionless(Poly(0)));
  const Tensor expected = f.parse("c1*(xi1 ox rho ox xi1 - 2*rho ox xi1 ox xi1)");
  const Tensor swapped = f.sigma(f.parse("c1*xi1 ox xi1 ox rho"), 0);
  CHECK(g.D_tensor(f.basis_pair(0, 0)) == f.add(expected, swapped));
}

TEST_CASE("torsion") {
  const Forms& f = forms();
  const Geometry g(f, ConnectionParams::torsionless());
  for (std::size_t a = 0; a < 3; ++a) CHECK(g.torsion(f.basis(a)).is_zero());
}

TEST_CASE("metric evaluation") {
  const Forms& f = forms();
  const Geometry g(f, ConnectionParams{});
  CHECK(f.format(g.metric_eval(f.basis_pair(0, 0))) == "-(1/2)*h");
  CHECK(g.metric_eval(f.tensor(f.rho(), f.basis(1))) == f.coordinate(1));
  CHECK(g.metric_eval(f.parse("xi1 ox eta ox eta")) == f.basis(0));
  CHECK_THROWS_AS(g.metric_eval(f.rho()), FormError);
}

TEST_CASE("curvature at zero parameters") {
  const Forms& f = forms();
  const Geometry zero(f, ConnectionParams::torsionless(Poly(0), Poly(0)));
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(zero.curvature(f.basis(a)).is_zero());
    for (const Tensor& w : zero.curvature_components(a)) CHECK(w.is_zero());
  }
}

TEST_CASE("connection suite") { require_all_pass(check_connection(standard_algebras())); }
TEST_CASE("curvature suite") { require_all_pass(check_curvature(standard_algebras())); }
TEST_CASE("metric suite") { require_all_pass(check_metric(standard_algebras())); }

TEST_CASE("pinned parameters expose incompatibility") {
  const CheckList checks = check_metric(standard_algebras(), std::pair{Poly(1), Poly(0)});
  std::size_t failing = 0;
  for (const CheckResult& r : checks)
    if (!r.pass) {
      ++failing;
      CHECK(r.check_id.rfind("metric.compatibility.", 0) == 0);
    }
  CHECK(failing > 0);
  for (const CheckResult& r : check_metric(standard_algebras(), std::pair{Poly(0), Poly(0)})) CHECK(r.pass);
}
