#include "ncsuper/matrix.hpp"

#include <array>

namespace ncsuper {

GradedMatrix::GradedMatrix(std::vector<Parity> row_parity, std::vector<Parity> col_parity)
    : row_parity_(std::move(row_parity)),
      col_parity_(std::move(col_parity)),
      entries_(row_parity_.size() * col_parity_.size()) {}

GradedMatrix GradedMatrix::identity(const std::vector<Parity>& parity) {
  GradedMatrix m = square(parity);
  for (std::size_t i = 0; i < parity.size(); ++i) m(i, i) = Element(1);
  return m;
}

bool GradedMatrix::is_zero() const {
  for (const Element& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::substitute(const std::map<Symbol, Poly>& bindings) const {
  return map([&](const Element& e) { return e.substitute(bindings); });
}

GradedMatrix GradedMatrix::map(const std::function<Element(const Element&)>& f) const {
  GradedMatrix out(row_parity_, col_parity_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
  return out;
}

namespace {

void require_same_shape(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b);
  GradedMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b);
  GradedMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

GradedMatrix operator*(const Poly& s, GradedMatrix m) {
  for (Element& e : m.entries_) e *= s;
  return m;
}

GradedMatrix multiply(const GradedMatrix& m, const GradedMatrix& n, const Presentation* p) {
  if (m.cols() != n.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
  GradedMatrix out(m.row_parity(), n.col_parity());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) {
      Element sum;
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const Element& a = m(i, k);
        const Element& b = n(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        sum += free_product(a, b);
      }
      out(i, j) = p != nullptr ? p->normalize(sum) : sum;
    }
  return out;
}

GradedMatrix supertranspose(const GradedMatrix& m) {
  GradedMatrix out(m.col_parity(), m.row_parity());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const Parity ci = m.col_parity()[i];
      const Parity rj = m.row_parity()[j];
      out(i, j) = (ci & (ci ^ rj)) ? -m(j, i) : m(j, i);
    }
  return out;
}

GradedMatrix scalar_inverse(const GradedMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_scalar()) throw std::invalid_argument("inverse needs scalar entries");
      a[i][j] = m(i, j).scalar_part();
    }
    a[i][n + i] = Poly(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a[r][col].is_zero() && a[r][col].is_constant()) {
        piv = r;
        break;
      }
    if (piv == n) throw std::invalid_argument("no unit pivot in column " + std::to_string(col));
    std::swap(a[col], a[piv]);
    const Poly inv(Rational(1) / a[col][col].constant_term());
    for (Poly& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Poly f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  GradedMatrix out(m.col_parity(), m.row_parity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Element(a[i][n + j]);
  return out;
}

const std::vector<Parity>& vector_parity() {
  static const std::vector<Parity> p = {0, 1, 0};
  return p;
}

const std::vector<Parity>& pair_parity() {
  static const std::vector<Parity> p = [] {
    std::vector<Parity> out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out.push_back(index_parity(i) ^ index_parity(j));
    return out;
  }();
  return p;
}

namespace {

struct Entry {
  std::size_t row;  // 1-based, as printed
  std::size_t col;
  int h_power;
  Rational coeff;
};

GradedMatrix from_entries(const Poly& h, const std::vector<Entry>& entries) {
  GradedMatrix m = GradedMatrix::square(pair_parity());
  for (const Entry& e : entries) m(e.row - 1, e.col - 1) = Element(Poly(e.coeff) * h.pow(e.h_power));
  return m;
}

}  // namespace

GradedMatrix r_matrix(const Poly& h) {
  return from_entries(h, {{1, 1, 0, 1},  {1, 3, 1, -1}, {1, 5, 1, 1}, {1, 7, 1, 1}, {1, 9, 2, Rational(1, 2)},
                          {2, 2, 0, 1},  {2, 6, 1, -1}, {3, 3, 0, 1}, {3, 9, 1, -1}, {4, 4, 0, 1},
                          {4, 8, 1, 1},  {5, 5, 0, 1},  {5, 9, 1, -1}, {6, 6, 0, 1}, {7, 7, 0, 1},
                          {7, 9, 1, 1},  {8, 8, 0, 1},  {9, 9, 0, 1}});
}

GradedMatrix b_matrix(const Poly& h) {
  return from_entries(h, {{1, 1, 0, -1}, {1, 3, 1, -1}, {1, 5, 1, -1}, {1, 7, 1, 1}, {1, 9, 2, Rational(-1, 2)},
                          {2, 2, 0, 1},  {2, 6, 1, -1}, {3, 3, 0, -1}, {3, 9, 1, -1}, {4, 4, 0, 1},
                          {4, 8, 1, 1},  {5, 5, 0, 1},  {5, 9, 1, -1}, {6, 6, 0, 1}, {7, 7, 0, -1},
                          {7, 9, 1, 1},  {8, 8, 0, 1},  {9, 9, 0, -1}});
}

GradedMatrix j_matrix() {
  GradedMatrix m = GradedMatrix::square(vector_parity());
  m(0, 2) = Element(1);
  m(1, 1) = Element(1);
  m(2, 0) = Element(-1);
  m(2, 2) = Element(Poly(Rational(-1, 2)) * Poly::symbol(Symbol::h));
  return m;
}

GradedMatrix j_inverse() {
  GradedMatrix m = GradedMatrix::square(vector_parity());
  m(0, 0) = Element(Poly(Rational(-1, 2)) * Poly::symbol(Symbol::h));
  m(0, 2) = Element(-1);
  m(1, 1) = Element(1);
  m(2, 0) = Element(1);
  return m;
}

GradedMatrix r_check(const Poly& h) {
  const GradedMatrix r = r_matrix(h);
  GradedMatrix out = GradedMatrix::square(pair_parity());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const Element& v = r(pair(l, k), pair(i, j));
          out(pair(k, l), pair(i, j)) = (index_parity(i) & index_parity(j)) ? -v : v;
        }
  return out;
}

GradedMatrix embed_pair(const GradedMatrix& m9, std::size_t first, std::size_t second) {
  if (first >= 3 || second >= 3 || first == second) throw std::invalid_argument("bad slot pair");
  std::size_t other = 0;
  while (other == first || other == second) ++other;
  std::vector<Parity> parity;
  for (std::size_t a = 0; a < 27; ++a) parity.push_back(index_parity(a / 9) ^ index_parity(a / 3 % 3) ^ index_parity(a % 3));
  GradedMatrix out = GradedMatrix::square(parity);
  for (std::size_t row = 0; row < 27; ++row)
    for (std::size_t col = 0; col < 27; ++col) {
      const std::array<std::size_t, 3> r = {row / 9, row / 3 % 3, row % 3};
      const std::array<std::size_t, 3> c = {col / 9, col / 3 % 3, col % 3};
      if (r[other] != c[other]) continue;
      out(row, col) = m9(pair(r[first], r[second]), pair(c[first], c[second]));
    }
  return out;
}

}  // namespace ncsuper
