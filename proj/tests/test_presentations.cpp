#include <doctest.h>

#include "ncsuper/presentations.hpp"

using namespace ncsuper;

namespace {
void require_all_pass(const CheckList& checks) {
  REQUIRE_FALSE(checks.empty());
  for (const CheckResult& r : checks) {
    INFO(r.check_id << ": " << r.residual);
    CHECK(r.pass);
  }
}
}  // namespace

TEST_CASE("public presentations build and are confluent") {
  for (AlgebraId id : {AlgebraId::superspace, AlgebraId::calculus, AlgebraId::group, AlgebraId::combined}) {
    const auto p = build_presentation(id);
    CHECK(p->name() == algebra_name(id));
    CHECK(algebra_from_name(algebra_name(id)) == id);
  }
  CHECK_FALSE(algebra_from_name("forms").has_value());
  CHECK(standard_algebras().superspace->rules().size() == 5);
  CHECK(standard_algebras().calculus->rules().size() == 41);
}

TEST_CASE("theorems") { require_all_pass(verify_presentation_theorems(standard_algebras())); }

TEST_CASE("confluence of every presentation") { require_all_pass(check_confluence_all(standard_algebras())); }

TEST_CASE("covariance") { require_all_pass(check_covariance(standard_algebras())); }

TEST_CASE("classical superspace") { require_all_pass(check_classical_superspace(standard_algebras())); }

TEST_CASE("coaction of a coordinate") {
  const AlgebraSet& s = standard_algebras();
  const Coaction coact(*s.calculus, *s.combined);
  const Element image = coact.image_of(s.calculus->table().at("theta1"));
  CHECK(image == s.combined->parse("a*theta1 + alpha*x + b*theta2"));
  CHECK(counit(*s.combined, image) == s.combined->parse("theta1"));
}

TEST_CASE("corruption") {
  CHECK_THROWS_AS(build_algebras(RuleCorruption{"nope", 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_algebras(RuleCorruption{"superspace", 99}), std::invalid_argument);
  const AlgebraSet bad = build_algebras(RuleCorruption{"superspace", 4});
  const bool unchanged = bad.superspace->rules()[4].rhs == standard_algebras().superspace->rules()[4].rhs;
  CHECK_FALSE(unchanged);
  CHECK(bad.superspace->rules()[4].rhs == corrupted_rhs(standard_algebras().superspace->rules()[4]));
}
