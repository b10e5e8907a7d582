#include <doctest.h>

#include <random>

#include "ncsuper/poly.hpp"

using namespace ncsuper;

namespace {
Poly h() { return Poly::symbol(Symbol::h); }
Poly c0() { return Poly::symbol(Symbol::c0); }
Poly c1() { return Poly::symbol(Symbol::c1); }
Poly c2() { return Poly::symbol(Symbol::c2); }

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 2);
  Poly p;
  for (int k = 0; k < 4; ++k)
    p += Poly::monomial(Rational(coeff(rng), 1 + exp(rng)),
                        {static_cast<std::uint16_t>(exp(rng)), static_cast<std::uint16_t>(exp(rng)),
                         static_cast<std::uint16_t>(exp(rng)), 0});
  return p;
}
}  // namespace

TEST_CASE("arithmetic") {
  CHECK((h() + 1) * (h() - 1) == h() * h() - 1);
  CHECK((h() * 0).is_zero());
  CHECK((c0() * h()).pow(2) == c0() * c0() * h() * h());
  CHECK(-(h() - h()) == Poly());
  CHECK(Poly(Rational(1, 2)) + Poly(Rational(1, 2)) == Poly(1));
}

TEST_CASE("substitution") {
  const Poly p = Poly(Rational(1, 2)) * h() * h() + 1;
  CHECK(p.substitute(std::map<Symbol, Poly>{{Symbol::h, Poly(0)}}) == Poly(1));
  CHECK((c1() + c2()).substitute(std::map<Symbol, Poly>{{Symbol::c2, -c1()}}).is_zero());
  CHECK(p.substitute(std::map<Symbol, Poly>{}) == p);
  CHECK((c0() * c0()).substitute(std::map<std::string, Poly>{{"c0", h() + 1}}) == (h() + 1) * (h() + 1));
  CHECK_THROWS_AS(p.substitute(std::map<std::string, Poly>{{"hh", Poly(1)}}), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(Poly().to_string() == "0");
  CHECK((Poly(Rational(-1, 2)) * h()).to_string() == "-(1/2)*h");
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(7);
  const std::map<Symbol, Poly> bind = {{Symbol::h, c0() + 2}, {Symbol::c1, Poly(Rational(1, 3))}};
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
  }
}
