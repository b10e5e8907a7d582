#include "ncsuper/matrix_checks.hpp"

#include <functional>
#include <stdexcept>

namespace ncsuper {

namespace {

Poly h_poly() { return Poly::symbol(Symbol::h); }

Poly sign(unsigned exponent) { return Poly((exponent & 1U) ? -1 : 1); }

unsigned hat(std::size_t i) { return index_parity(i); }

std::string idx(std::initializer_list<std::size_t> ids) {
  std::string s;
  for (std::size_t i : ids) s += std::to_string(i + 1);
  return s;
}

std::string matrix_residual(const GradedMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") nonzero";
  return {};
}

CheckResult matrix_check(std::string id, std::string anchor, const GradedMatrix& lhs, const GradedMatrix& rhs) {
  const GradedMatrix diff = lhs - rhs;
  return bool_check(std::move(id), std::move(anchor), diff.is_zero(), matrix_residual(diff));
}

const Poly& scalar_entry(const GradedMatrix& m, std::size_t r, std::size_t c, std::vector<Poly>& cache) {
  if (cache.empty()) {
    cache.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) cache[i * m.cols() + j] = m(i, j).scalar_part();
  }
  return cache[r * m.cols() + c];
}

// Componentwise equality of two four-index sums over a presentation.
using Component = std::function<Element(std::size_t, std::size_t, std::size_t, std::size_t)>;

void four_index(CheckList& out, const Presentation& p, const std::string& prefix, const std::string& anchor,
                const Component& lhs, const Component& rhs) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d)
          out.push_back(zero_check(prefix + "." + idx({a, b, c, d}), anchor, p,
                                   p.normalize(lhs(a, b, c, d) - rhs(a, b, c, d))));
}

}  // namespace

GradedMatrix build_constant(std::string_view name, const AlgebraSet& set) {
  const Poly h = h_poly();
  if (name == "R") return r_matrix(h);
  if (name == "B") return b_matrix(h);
  if (name == "Binv") return scalar_inverse(b_matrix(h));
  if (name == "J") return j_matrix();
  if (name == "Jinv") return j_inverse();
  if (name == "Rcheck") return r_check(h);
  if (name == "T") return t_matrix(*set.group);
  if (name == "ST") return antipode_matrix(*set.group);
  if (name == "tau") return tau_matrix(*set.group);
  throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

CheckList check_matrix_identities() {
  CheckList out;
  const Poly h = h_poly();
  const Poly mh = Poly(-1) * h;
  const GradedMatrix r = r_matrix(h);
  const GradedMatrix b = b_matrix(h);
  const GradedMatrix bm = b_matrix(mh);
  const GradedMatrix binv = scalar_inverse(b);
  const GradedMatrix rc = r_check(h);
  const GradedMatrix id9 = GradedMatrix::identity(pair_parity());

  out.push_back(matrix_check("matrices.r_inverse", "R(h) R(-h) = 1", multiply(r, r_matrix(mh)), id9));

  {
    const GradedMatrix b12 = embed_pair(b, 0, 1), b13 = embed_pair(b, 0, 2), b23 = embed_pair(b, 1, 2);
    out.push_back(matrix_check("matrices.b_ybe", "B12 B13 B23 = B23 B13 B12", multiply(multiply(b12, b13), b23),
                               multiply(multiply(b23, b13), b12)));
  }
  out.push_back(matrix_check("matrices.rcheck_squared", "Rcheck^2 = 1", multiply(rc, rc), id9));
  {
    const GradedMatrix r12 = embed_pair(rc, 0, 1), r23 = embed_pair(rc, 1, 2);
    out.push_back(matrix_check("matrices.rcheck_braid", "Rcheck12 Rcheck23 Rcheck12 = Rcheck23 Rcheck12 Rcheck23",
                               multiply(multiply(r12, r23), r12), multiply(multiply(r23, r12), r23)));
  }

  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
          const std::size_t row = pair(k, l), col = pair(x, y);
          const Element rk = r(row, col);
          const Element via_inv = sign(1 + hat(k) + (1 + hat(x)) * hat(y)) * binv(row, col);
          const Element via_minus = sign(1 + hat(k) + hat(y) + hat(k) * hat(l)) * bm(row, col);
          const Element inv_sign = sign(hat(k) * hat(l) + hat(x) * hat(y)) * bm(row, col);
          const std::string id = idx({k, l, x, y});
          const bool ok = rk == via_inv && rk == via_minus;
          out.push_back(bool_check("matrices.r_to_b." + id, "R^{kl}_{xy} = (-1)^{1+k+(1+x)y} (B^-1)^{kl}_{xy}", ok,
                                   "R and signed B^-1 differ"));
          out.push_back(bool_check("matrices.b_inverse_sign." + id, "(B^-1)^{kl}_{xy} = (-1)^{kl+xy} B(-h)^{kl}_{xy}",
                                   binv(row, col) == inv_sign, "entries differ"));
        }

  const GradedMatrix j = j_matrix();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c)
      out.push_back(bool_check("matrices.j_parity." + idx({a, c}), "(-1)^{a+b} J_ab = J_ab",
                               sign(hat(a) + hat(c)) * j(a, c) == j(a, c), "odd entry"));
  out.push_back(matrix_check("matrices.j_inverse", "J J^-1 = 1", multiply(j, j_inverse()),
                             GradedMatrix::identity(vector_parity())));
  out.push_back(matrix_check("matrices.j_inverse_computed", "J^-1 from Gauss-Jordan", scalar_inverse(j), j_inverse()));

  // classical limit
  const std::map<Symbol, Poly> h0 = {{Symbol::h, Poly(0)}};
  out.push_back(matrix_check("matrices.classical.r", "R(0) = 1", r.substitute(h0), id9));
  {
    GradedMatrix b0 = GradedMatrix::square(pair_parity());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        b0(pair(i, k), pair(i, k)) = Element(sign((1 + hat(i)) * (1 + hat(k))));
    out.push_back(matrix_check("matrices.classical.b", "B(0) = diag((-1)^{X^i X^j})", b.substitute(h0), b0));
    GradedMatrix flip = GradedMatrix::square(pair_parity());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) flip(pair(i, k), pair(k, i)) = Element(sign(hat(i) * hat(k)));
    out.push_back(matrix_check("matrices.classical.rcheck", "Rcheck(0) is the graded flip", rc.substitute(h0), flip));
  }

  // supertranspose on scalars
  {
    const GradedMatrix id3 = GradedMatrix::identity(vector_parity());
    out.push_back(matrix_check("matrices.supertranspose.identity", "1^st = 1", supertranspose(id3), id3));
    out.push_back(matrix_check("matrices.supertranspose.product", "(M N)^st = N^st M^st (scalar entries)",
                               supertranspose(multiply(j, j_inverse())),
                               multiply(supertranspose(j_inverse()), supertranspose(j))));
  }
  return out;
}

CheckList check_supergroup(const AlgebraSet& set) {
  CheckList out;
  const Presentation& g = *set.group;
  const GradedMatrix t = t_matrix(g);
  const GradedMatrix tst = supertranspose(t);
  const GradedMatrix j = j_matrix();
  const GradedMatrix ji = j_inverse();
  const GradedMatrix r = r_matrix(h_poly());
  std::vector<Poly> rcache;
  const auto R = [&](std::size_t k, std::size_t l, std::size_t x, std::size_t y) -> const Poly& {
    return scalar_entry(r, pair(k, l), pair(x, y), rcache);
  };

  four_index(
      out, g, "supergroup.rtt", "sum (-1)^{y(x+i)} R^{kl}_{xy} t^x_i t^y_j = sum (-1)^{y(k+x)} t^l_y t^k_x R^{xy}_{ij}",
      [&](std::size_t k, std::size_t l, std::size_t i, std::size_t jj) {
        Element s;
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y)
            if (!R(k, l, x, y).is_zero())
              s += (sign(hat(y) * (hat(x) + hat(i))) * R(k, l, x, y)) * free_product(t(x, i), t(y, jj));
        return s;
      },
      [&](std::size_t k, std::size_t l, std::size_t i, std::size_t jj) {
        Element s;
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y)
            if (!R(x, y, i, jj).is_zero())
              s += (sign(hat(y) * (hat(k) + hat(x))) * R(x, y, i, jj)) * free_product(t(l, y), t(k, x));
        return s;
      });

  const auto entries = [&](const std::string& prefix, const std::string& anchor, const GradedMatrix& lhs,
                           const GradedMatrix& rhs) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = 0; c < 3; ++c)
        out.push_back(zero_check(prefix + "." + idx({a, c}), anchor, g, g.normalize(lhs(a, c) - rhs(a, c))));
  };
  entries("supergroup.osp.tst_j_t", "T^st J T = J", multiply(multiply(tst, j, &g), t, &g), j);
  entries("supergroup.osp.t_jinv_tst", "T J^-1 T^st = J^-1", multiply(multiply(t, ji, &g), tst, &g), ji);

  const GradedMatrix s = antipode_matrix(g);
  const GradedMatrix id3 = GradedMatrix::identity(vector_parity());
  entries("supergroup.antipode.t_s", "T S(T) = 1", multiply(t, s, &g), id3);
  entries("supergroup.antipode.s_t", "S(T) T = 1", multiply(s, t, &g), id3);
  entries("supergroup.antipode.formula", "S(T) = J^-1 T^st J", s, multiply(multiply(ji, tst, &g), j, &g));

  const GradedMatrix tau = tau_matrix(g);
  entries("supergroup.tau.left", "tau T^st = 1", multiply(tau, tst, &g), id3);
  entries("supergroup.tau.right", "T^st tau = 1", multiply(tst, tau, &g), id3);
  return out;
}

CheckList check_rtt_family(const AlgebraSet& set) {
  CheckList out;
  const Presentation& g = *set.group;
  const GradedMatrix t = t_matrix(g);
  const GradedMatrix tau = tau_matrix(g);
  const GradedMatrix b = b_matrix(h_poly());
  const GradedMatrix binv = scalar_inverse(b);
  std::vector<Poly> bc, bic;
  const auto B = [&](std::size_t k, std::size_t l, std::size_t x, std::size_t y) -> const Poly& {
    return scalar_entry(b, pair(k, l), pair(x, y), bc);
  };
  const auto Bi = [&](std::size_t k, std::size_t l, std::size_t x, std::size_t y) -> const Poly& {
    return scalar_entry(binv, pair(k, l), pair(x, y), bic);
  };
  // sum over i, j of sign * coefficient * u * v
  using Term = std::function<void(std::size_t, std::size_t, Poly&, const Element*&, const Element*&)>;
  const auto sum = [](const Term& term) {
    Element s;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Poly coeff;
        const Element* u = nullptr;
        const Element* v = nullptr;
        term(i, j, coeff, u, v);
        if (!coeff.is_zero()) s += coeff * free_product(*u, *v);
      }
    return s;
  };

  four_index(
      out, g, "covariance.rtt1", "t t B = B t t",
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(bb) + hat(j) + hat(i) * hat(j) + hat(bb) * hat(i)) * B(i, j, c, d);
          u = &t(a, i);
          v = &t(bb, j);
        });
      },
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(c) + hat(i) + hat(c) * hat(d) + hat(d) * hat(i)) * B(a, bb, i, j);
          u = &t(j, d);
          v = &t(i, c);
        });
      });

  four_index(
      out, g, "covariance.rtt2", "tau tau B = B tau tau",
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(i) + hat(a) + hat(i) * hat(j) + hat(i) * hat(bb)) * B(c, d, i, j);
          u = &tau(a, i);
          v = &tau(bb, j);
        });
      },
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(d) + hat(j) + hat(d) * hat(i) + hat(c) * hat(d)) * B(i, j, a, bb);
          u = &tau(j, d);
          v = &tau(i, c);
        });
      });

  four_index(
      out, g, "covariance.rtt3", "tau t B = B t tau",
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(i) + hat(bb) * hat(i) + hat(c) * hat(i) + hat(d) * hat(j)) * B(j, d, c, i);
          u = &tau(a, i);
          v = &t(bb, j);
        });
      },
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(c) + hat(i) + hat(j) + hat(i) * hat(c)) * B(bb, i, j, a);
          u = &t(j, c);
          v = &tau(i, d);
        });
      });

  four_index(
      out, g, "covariance.rtt4", "B^-1 t tau = tau t B^-1",
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(c) + hat(i) + hat(j) + hat(c) * hat(i)) * Bi(i, bb, a, j);
          u = &t(j, c);
          v = &tau(i, d);
        });
      },
      [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
        return sum([&](std::size_t i, std::size_t j, Poly& k, const Element*& u, const Element*& v) {
          k = sign(hat(i) + hat(bb) * hat(i) + hat(c) * hat(i) + hat(j) * hat(d)) * Bi(d, j, i, c);
          u = &tau(a, i);
          v = &t(bb, j);
        });
      });
  return out;
}

}  // namespace ncsuper
