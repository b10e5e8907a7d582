#include <doctest.h>

#include "ncsuper/matrix_checks.hpp"

using namespace ncsuper;

namespace {
Poly h() { return Poly::symbol(Symbol::h); }

void require_all_pass(const CheckList& checks) {
  REQUIRE_FALSE(checks.empty());
  for (const CheckResult& r : checks) {
    INFO(r.check_id << ": " << r.residual);
    CHECK(r.pass);
  }
}
}  // namespace

TEST_CASE("constants") {
  const AlgebraSet& s = standard_algebras();
  const GradedMatrix j = build_constant("J", s);
  CHECK(j(2, 2) == Element(Poly(Rational(-1, 2)) * h()));
  CHECK(j(0, 2) == Element(1));
  CHECK(build_constant("Jinv", s)(0, 0) == Element(Poly(Rational(-1, 2)) * h()));
  CHECK(build_constant("R", s).rows() == 9);
  CHECK(multiply(build_constant("B", s), build_constant("Binv", s)) == GradedMatrix::identity(pair_parity()));
  CHECK(build_constant("T", s)(1, 1) == group_e(*s.group));
  CHECK(build_constant("ST", s).cols() == 3);
  CHECK(build_constant("tau", s).rows() == 3);
  CHECK(build_constant("Rcheck", s).rows() == 9);
  CHECK_THROWS_AS(build_constant("Q", s), std::invalid_argument);
}

TEST_CASE("supertranspose") {
  const GradedMatrix id = GradedMatrix::identity(vector_parity());
  CHECK(supertranspose(id) == id);
  GradedMatrix m = GradedMatrix::square(vector_parity());
  m(0, 1) = Element(1);  // even row, odd column
  const GradedMatrix st = supertranspose(m);
  CHECK(st(1, 0) == Element(-1));
  CHECK(supertranspose(st)(0, 1) == Element(-1));
}

TEST_CASE("scalar inverse") {
  const GradedMatrix j = j_matrix();
  CHECK(scalar_inverse(j) == j_inverse());
  GradedMatrix singular = GradedMatrix::square(vector_parity());
  CHECK_THROWS(scalar_inverse(singular));
}

TEST_CASE("parities") {
  CHECK(index_parity(0) == 0);
  CHECK(index_parity(1) == 1);
  CHECK(index_parity(2) == 0);
  CHECK(pair_parity()[pair(1, 0)] == 1);
  CHECK(pair_parity()[pair(1, 1)] == 0);
}

TEST_CASE("matrix identities") { require_all_pass(check_matrix_identities()); }
TEST_CASE("supergroup identities") { require_all_pass(check_supergroup(standard_algebras())); }
TEST_CASE("RTT-type identities with B") { require_all_pass(check_rtt_family(standard_algebras())); }
