#pragma once

#include <cstddef>
#include <vector>

#include "ncsuper/algebra.hpp"

namespace ncsuper {

/// Rectangular matrix of algebra elements with graded row and column indices.
/// Scalar matrices simply hold empty-word entries.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(std::vector<Parity> row_parity, std::vector<Parity> col_parity);

  static GradedMatrix square(const std::vector<Parity>& parity) { return {parity, parity}; }
  static GradedMatrix identity(const std::vector<Parity>& parity);

  std::size_t rows() const { return row_parity_.size(); }
  std::size_t cols() const { return col_parity_.size(); }
  const std::vector<Parity>& row_parity() const { return row_parity_; }
  const std::vector<Parity>& col_parity() const { return col_parity_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

  bool is_zero() const;
  GradedMatrix substitute(const std::map<Symbol, Poly>& bindings) const;
  GradedMatrix map(const std::function<Element(const Element&)>& f) const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.row_parity_ == b.row_parity_ && a.col_parity_ == b.col_parity_ && a.entries_ == b.entries_;
  }
  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator*(const Poly& s, GradedMatrix m);

 private:
  std::vector<Parity> row_parity_;
  std::vector<Parity> col_parity_;
  std::vector<Element> entries_;
};

/// Plain sum over the inner index. With a presentation the entries are
/// normalized in it; without one, products are concatenations (fine for scalars).
GradedMatrix multiply(const GradedMatrix& m, const GradedMatrix& n, const Presentation* p = nullptr);

/// (M^st)_ij = (-1)^{c_i (c_i + r_j)} M_ji with c, r the column and row parities of M.
GradedMatrix supertranspose(const GradedMatrix& m);

/// Inverse of a scalar square matrix; every pivot must be a nonzero rational.
GradedMatrix scalar_inverse(const GradedMatrix& m);

/// Index parities: 1, 3 even and 2 odd (0-based: 0, 2 even, 1 odd).
inline Parity index_parity(std::size_t i) { return i == 1 ? 1 : 0; }
const std::vector<Parity>& vector_parity();
/// Parities of the flattened pair index 3i + j.
const std::vector<Parity>& pair_parity();
inline std::size_t pair(std::size_t i, std::size_t j) { return 3 * i + j; }

GradedMatrix r_matrix(const Poly& h);
GradedMatrix b_matrix(const Poly& h);
GradedMatrix j_matrix();
GradedMatrix j_inverse();
/// Rcheck^{kl}_{ij} = (-1)^{ij} R^{lk}_{ij}.
GradedMatrix r_check(const Poly& h);

/// 27x27 copy of a 9x9 two-index operator acting on the tensor slots
/// (first, second) of three; the remaining slot is the identity.
GradedMatrix embed_pair(const GradedMatrix& m9, std::size_t first, std::size_t second);

}  // namespace ncsuper
