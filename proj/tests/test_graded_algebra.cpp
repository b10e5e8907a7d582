#include <doctest.h>

#include <random>

#include "ncsuper/expr.hpp"
#include "ncsuper/presentations.hpp"

using namespace ncsuper;

namespace {
const Presentation& superspace() { return *standard_algebras().superspace; }
const Presentation& group() { return *standard_algebras().group; }
}  // namespace

TEST_CASE("word parity") {
  const Presentation& p = superspace();
  CHECK(p.word_parity({p.table().at("theta1"), p.table().at("x")}) == 1);
  CHECK(p.word_parity({}) == 0);
  CHECK(group().word_parity({group().table().at("alpha"), group().table().at("delta")}) == 0);
  CHECK_THROWS(p.table().at("zeta"));
}

TEST_CASE("normal forms") {
  const Presentation& p = superspace();
  CHECK(p.format(p.parse("x*theta1")) == "h*x*theta2 + theta1*x");
  CHECK(p.parse("theta2*theta2").is_zero());
  CHECK(p.parse("theta1*theta1") == p.parse("-(1/2)*h*x*x + h*theta1*theta2"));
  const Presentation& g = group();
  CHECK(g.parse("b*a") == g.parse("a*b - h + h*a*a"));
  CHECK(g.parse("alpha*alpha") == g.parse("(1/2)*h*a*a - (1/2)*h"));
  CHECK(g.parse("1*e", group_macros(g)) == group_e(g));
}

TEST_CASE("format round trip") {
  const Presentation& g = group();
  for (const char* text : {"0", "1", "-(1/2)*h", "a*b*alpha - (h^2 + c0)*delta*d", "e*beta*gamma"}) {
    const Element e = g.parse(text, group_macros(g));
    CHECK(g.parse(g.format(e)) == e);
  }
  CHECK(g.format(Element()) == "0");
}

TEST_CASE("parse errors carry positions") {
  const Presentation& p = superspace();
  try {
    p.parse("x * (theta1 + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(p.parse("x*y"), ParseError);
  CHECK_THROWS(p.parse("x^-1"));
}

TEST_CASE("normalize is idempotent and multiply associative") {
  const Presentation& g = group();
  const std::vector<std::string> letters = {"a", "b", "c", "d", "alpha", "delta"};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  const auto random = [&] {
    Element e;
    for (int k = 0; k < 3; ++k) e += g.parse(letters[pick(rng)] + "*" + letters[pick(rng)]);
    return e;
  };
  for (int trial = 0; trial < 15; ++trial) {
    const Element a = random(), b = random(), c = random();
    CHECK(g.normalize(a) == a);
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

TEST_CASE("rules strictly decrease and keep parity") {
  for (const auto& p : standard_algebras().all())
    for (const RewriteRule& r : p->rules())
      for (const auto& [w, c] : r.rhs.terms()) {
        CHECK(p->word_less(w, r.lhs));
        CHECK(p->word_parity(w) == p->word_parity(r.lhs));
      }
}

TEST_CASE("confluence") {
  CHECK(superspace().check_confluence().ok());
  const Presentation empty("free", GeneratorTable({{"u", 0, 1}, {"v", 1, 1}}), {});
  CHECK(empty.check_confluence().ok());
  CHECK(empty.check_confluence().overlaps.empty());

  // theta2^2 -> 1 instead of 0
  const Presentation& p = superspace();
  const Letter t2 = p.table().at("theta2");
  const RewriteRule* rule = p.rule_for(t2, t2);
  REQUIRE(rule != nullptr);
  const std::size_t index = static_cast<std::size_t>(rule - p.rules().data());
  const Presentation bad = p.with_rule_rhs(index, Element(1));
  CHECK_FALSE(bad.check_confluence().ok());
}

TEST_CASE("step budget") {
  const std::size_t saved = step_budget();
  set_step_budget(2);
  CHECK_THROWS_AS(group().parse("d*c*b*a*delta*alpha*d*c*b"), StepBudgetExceeded);
  set_step_budget(saved);
  CHECK_NOTHROW(group().parse("d*c*b*a*delta*alpha*d*c*b"));
}
