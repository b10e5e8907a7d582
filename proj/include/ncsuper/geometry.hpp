#pragma once

#include <array>
#include <optional>

#include "ncsuper/check.hpp"
#include "ncsuper/forms.hpp"

namespace ncsuper {

/// D Xi^a = c0 X^a rho (x) rho + c1 (-1)^a Xi^a (x) rho + c2 rho (x) Xi^a.
struct ConnectionParams {
  Poly c0 = Poly::symbol(Symbol::c0);
  Poly c1 = Poly::symbol(Symbol::c1);
  Poly c2 = Poly::symbol(Symbol::c2);

  /// c2 = -c1.
  static ConnectionParams torsionless(Poly c0 = Poly::symbol(Symbol::c0), Poly c1 = Poly::symbol(Symbol::c1)) {
    return {c0, c1, Poly(-1) * c1};
  }
};

class Geometry {
 public:
  Geometry(const Forms& forms, ConnectionParams params) : f_(forms), p_(std::move(params)) {}

  const Forms& forms() const { return f_; }
  const ConnectionParams& params() const { return p_; }

  /// Covariant derivative of a one-form, through D(f Xi) = df (x) Xi + (-1)^f f D Xi.
  Tensor D(const Tensor& one_form) const;
  /// Extension to (x)^k Omega^1, k >= 1.
  Tensor D_tensor(const Tensor& t) const;
  Tensor torsion(const Tensor& one_form) const;
  /// pi_12 D^2.
  Tensor curvature(const Tensor& one_form) const;
  /// omega^a_b with curvature(Xi^a) = sum_b omega^a_b (x) Xi^b.
  std::array<Tensor, 3> curvature_components(std::size_t a) const;
  /// g on Omega^1 (x) Omega^1, or 1 (x) g on three slots.
  Tensor metric_eval(const Tensor& t) const;

 private:
  Tensor d_basis(std::size_t a) const;

  const Forms& f_;
  ConnectionParams p_;
};

CheckList check_connection(const AlgebraSet& set);
CheckList check_curvature(const AlgebraSet& set);
/// With `pinned` = (c0, c1) the literal compatibility d o g = (1 (x) g) o D is
/// also checked at those values.
CheckList check_metric(const AlgebraSet& set, const std::optional<std::pair<Poly, Poly>>& pinned = std::nullopt);

}  // namespace ncsuper
