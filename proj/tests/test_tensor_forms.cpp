#include <doctest.h>

#include "ncsuper/expr.hpp"
#include "ncsuper/forms.hpp"

using namespace ncsuper;

namespace {
const Forms& forms() {
  static const Forms f(standard_algebras());
  return f;
}
}  // namespace

TEST_CASE("parse and format") {
  const Forms& f = forms();
  CHECK(f.format(f.phi()) == "x*x - 2*theta1*theta2");
  CHECK(f.parse("rho ox rho") == f.varpi());
  CHECK(f.parse("theta2^2").is_zero());
  CHECK(f.parse("rho").layout() == std::vector<unsigned>{1});
  CHECK(f.parse("xi1 /\\ eta ox xi2").layout() == (std::vector<unsigned>{2, 1}));
  CHECK(f.format(Tensor()) == "0");
  for (const Tensor& t : {f.rho(), f.lambda(), f.varpi(), f.phi(), f.parse("h*theta1*xi1 /\\ xi2 ox eta")})
    CHECK(f.parse(f.format(t)) == t);
}

TEST_CASE("grammar misuse") {
  const Forms& f = forms();
  CHECK_THROWS_AS(f.parse("xi1 * eta"), ParseError);
  CHECK_THROWS_AS(f.parse("x ox eta"), ParseError);
  CHECK_THROWS_AS(f.parse("xi1 + xi1 ox eta"), ParseError);
  CHECK_THROWS_AS(f.parse("xi1 /\\ eta /\\ xi2"), ParseError);
  CHECK_THROWS_AS(f.parse("zeta"), ParseError);
}

TEST_CASE("canonical form") {
  const Forms& f = forms();
  CHECK(f.parse("xi2*theta1") == f.parse("theta1*xi2 - h*theta2*xi2"));
  CHECK(f.parse("eta /\\ eta") == f.parse("-(1/2)*h*xi2 /\\ xi2"));
  CHECK(f.parse("xi2 /\\ xi2 ox xi1").layout() == (std::vector<unsigned>{2, 1}));
  CHECK_THROWS_AS(f.canonicalize({1, 1}, f.basis(0).value()), FormError);
}

TEST_CASE("sigma") {
  const Forms& f = forms();
  CHECK(f.sigma(f.parse("eta ox xi2")) == f.parse("xi2 ox eta"));
  CHECK(f.sigma(f.varpi()) == f.scale(Poly(-1), f.varpi()));
  CHECK_THROWS_AS(f.sigma(f.parse("xi1 /\\ eta ox xi2")), FormError);
  const Tensor three = f.parse("xi1 ox eta ox xi2");
  CHECK(f.sigma(f.sigma(three, 1), 1) == three);
}

TEST_CASE("pi, wedge, d") {
  const Forms& f = forms();
  CHECK(f.pi(f.lambda()).is_zero());
  CHECK(f.wedge(f.rho(), f.rho()).is_zero());
  CHECK(f.d(f.coordinate(1)) == f.basis(1));
  CHECK(f.d(f.rho()) == f.chi());
  CHECK(f.d(f.d(f.phi())).is_zero());
  CHECK_THROWS_AS(f.d(f.lambda()), FormError);
}

TEST_CASE("form identities") {
  for (const CheckResult& r : check_form_identities(standard_algebras())) {
    INFO(r.check_id << ": " << r.residual);
    CHECK(r.pass);
  }
}
