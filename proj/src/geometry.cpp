#include "ncsuper/geometry.hpp"

#include <string>

namespace ncsuper {

namespace {

constexpr std::array<const char*, 3> kDiff = {"xi1", "eta", "xi2"};
constexpr std::array<const char*, 3> kCoord = {"theta1", "x", "theta2"};

Poly sign(unsigned e) { return Poly((e & 1U) ? -1 : 1); }
unsigned hat(std::size_t i) { return index_parity(i); }
unsigned coord_hat(std::size_t i) { return 1U ^ hat(i); }

bool all_one_slots(const Tensor& t) {
  for (unsigned s : t.layout())
    if (s != 1) return false;
  return !t.layout().empty();
}

std::optional<std::size_t> find_diff(const Presentation& forms, Letter l) {
  for (std::size_t i = 0; i < 3; ++i)
    if (forms.table()[l].name == kDiff[i]) return i;
  return std::nullopt;
}

std::size_t diff_of(const Presentation& forms, Letter l) {
  if (auto i = find_diff(forms, l)) return *i;
  throw FormError("not a one-form letter");
}

// Length of the coordinate prefix of a left-canonical word.
std::size_t prefix_length(const Presentation& forms, const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && !find_diff(forms, w[n])) ++n;
  return n;
}

}  // namespace

Tensor Geometry::d_basis(std::size_t a) const {
  const Tensor rho = f_.rho();
  Tensor out = f_.scale(p_.c0, f_.multiply(f_.coordinate(a), f_.varpi()));
  out = f_.add(out, f_.scale(p_.c1 * sign(hat(a)), f_.tensor(f_.basis(a), rho)));
  return f_.add(out, f_.scale(p_.c2, f_.tensor(rho, f_.basis(a))));
}

Tensor Geometry::D(const Tensor& one_form) const {
  if (one_form.is_zero()) return {};
  if (one_form.layout() != std::vector<unsigned>{1}) throw FormError("D acts on one-forms");
  const Presentation& forms = f_.algebra();
  std::array<std::optional<Tensor>, 3> basis_cache;
  Tensor out;
  for (const auto& [w, c] : one_form.value().terms()) {
    const std::size_t n = prefix_length(forms, w);
    const std::size_t a = diff_of(forms, w[n]);
    const Tensor fn({}, Element::word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)), c));
    if (!basis_cache[a]) basis_cache[a] = d_basis(a);
    out = f_.add(out, f_.tensor(f_.d(fn), f_.basis(a)));
    out = f_.add(out, f_.scale(sign(f_.parity(fn)), f_.multiply(fn, *basis_cache[a])));
  }
  return out;
}

Tensor Geometry::D_tensor(const Tensor& t) const {
  if (t.is_zero()) return {};
  if (!all_one_slots(t)) throw FormError("D acts on tensor products of one-forms");
  if (t.layout().size() == 1) return D(t);
  const Presentation& forms = f_.algebra();
  const std::vector<unsigned> rest_layout(t.layout().size() - 1, 1);
  Tensor out;
  for (const auto& [w, c] : t.value().terms()) {
    const std::size_t n = prefix_length(forms, w);
    const Tensor omega({1}, Element::word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n) + 1), c));
    const Tensor rest(rest_layout, Element::word(Word(w.begin() + static_cast<std::ptrdiff_t>(n) + 1, w.end())));
    out = f_.add(out, f_.tensor(D(omega), rest));
    const Tensor mixed = f_.tensor(omega, D_tensor(rest));
    out = f_.add(out, f_.scale(sign(f_.parity(omega)), f_.sigma(mixed, 0)));
  }
  return out;
}

Tensor Geometry::torsion(const Tensor& one_form) const { return f_.sub(f_.d(one_form), f_.pi(D(one_form))); }

Tensor Geometry::curvature(const Tensor& one_form) const { return f_.pi(D_tensor(D(one_form))); }

std::array<Tensor, 3> Geometry::curvature_components(std::size_t a) const {
  const Tensor curv = curvature(f_.basis(a));
  std::array<Element, 3> parts;
  const Presentation& forms = f_.algebra();
  for (const auto& [w, c] : curv.value().terms())
    parts[diff_of(forms, w.back())].add(Word(w.begin(), w.end() - 1), c);
  std::array<Tensor, 3> out;
  for (std::size_t b = 0; b < 3; ++b)
    if (!parts[b].is_zero()) out[b] = Tensor({2}, parts[b]);
  return out;
}

Tensor Geometry::metric_eval(const Tensor& t) const {
  if (t.is_zero()) return {};
  const bool two = t.layout() == std::vector<unsigned>{1, 1};
  const bool three = t.layout() == std::vector<unsigned>{1, 1, 1};
  if (!two && !three) throw FormError("metric needs two or three one-form slots");
  static const GradedMatrix g = j_inverse();
  const Presentation& forms = f_.algebra();
  Element out;
  for (const auto& [w, c] : t.value().terms()) {
    const std::size_t b = diff_of(forms, w[w.size() - 1]);
    const std::size_t a = diff_of(forms, w[w.size() - 2]);
    if (g(a, b).is_zero()) continue;
    out.add(Word(w.begin(), w.end() - 2), c * g(a, b).scalar_part());
  }
  return Tensor(two ? std::vector<unsigned>{} : std::vector<unsigned>{1}, std::move(out));
}

// ---------------------------------------------------------------------------
// Checks

namespace {

CheckResult tensor_check(const Forms& f, std::string id, std::string anchor, const Tensor& lhs, const Tensor& rhs) {
  const Tensor diff = f.sub(lhs, rhs);
  const bool ok = diff.is_zero();
  return {std::move(id), std::move(anchor), ok, ok ? std::string() : f.format(diff)};
}

std::string pair_label(std::size_t a, std::size_t b) { return std::string(kDiff[a]) + "_" + kDiff[b]; }

Poly sym(Symbol s) { return Poly::symbol(s); }

}  // namespace

CheckList check_connection(const AlgebraSet& set) {
  const Forms f(set);
  CheckList out;
  const Geometry general(f, ConnectionParams{});
  const Geometry tl(f, ConnectionParams::torsionless());
  const Tensor rho = f.rho();

  for (std::size_t a = 0; a < 3; ++a) {
    const Tensor expected = f.scale(Poly(-1) * (sym(Symbol::c1) + sym(Symbol::c2)), f.wedge(rho, f.basis(a)));
    out.push_back(tensor_check(f, std::string("connection.torsion.") + kDiff[a], "Theta(Xi^a) = -(c1 + c2) rho /\\ Xi^a",
                               general.torsion(f.basis(a)), expected));
    out.push_back(tensor_check(f, std::string("connection.torsionless.") + kDiff[a], "Theta(Xi^a) = 0 at c2 = -c1",
                               tl.torsion(f.basis(a)), Tensor()));
  }

  const std::array<const char*, 3> dxi3 = {
      "c0*theta1*rho ox rho + c1*(xi1 ox rho - rho ox xi1)",
      "c0*x*rho ox rho - c1*(eta ox rho + rho ox eta)",
      "c0*theta2*rho ox rho + c1*(xi2 ox rho - rho ox xi2)",
  };
  for (std::size_t a = 0; a < 3; ++a)
    out.push_back(tensor_check(f, std::string("connection.d_basis.") + kDiff[a], std::string("D ") + kDiff[a] + " = " + dxi3[a],
                               tl.D(f.basis(a)), f.parse(dxi3[a])));

  {
    const Tensor drho = tl.D(rho);
    out.push_back(tensor_check(f, "connection.d_rho", "D rho = Lambda + (c0 phi - 2 c1) rho ox rho", drho,
                               f.parse("Lambda + (c0*phi - 2*c1)*rho ox rho")));
    out.push_back(tensor_check(f, "connection.pi_d_rho", "pi(D rho) = 0", f.pi(drho), Tensor()));
  }

  const std::array<Tensor, 3> coeffs = {f.coordinate(0), f.coordinate(1), f.coordinate(2)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      const Tensor& fn = coeffs[i];
      const Tensor xi = f.basis(a);
      const std::string tag = std::string(kCoord[i]) + "." + kDiff[a];
      // D2: D(Xi f) = (-1)^Xi sigma(Xi (x) df) + (D Xi) f
      const Tensor via_d2 = f.add(f.scale(sign(hat(a)), f.sigma(f.tensor(xi, f.d(fn)))), f.multiply(general.D(xi), fn));
      out.push_back(tensor_check(f, "connection.leibniz_right." + tag, "D(Xi f) = (-1)^Xi sigma(Xi (x) df) + (D Xi) f",
                                 general.D(f.multiply(xi, fn)), via_d2));
      out.push_back(tensor_check(f, "connection.torsion_left_linear." + tag, "Theta(f Xi) = (-1)^f f Theta(Xi)",
                                 general.torsion(f.multiply(fn, xi)),
                                 f.scale(sign(f.parity(fn)), f.multiply(fn, general.torsion(xi)))));
      out.push_back(tensor_check(f, "connection.torsion_right_linear." + tag, "Theta(Xi f) = Theta(Xi) f",
                                 general.torsion(f.multiply(xi, fn)), f.multiply(general.torsion(xi), fn)));
      for (std::size_t b = 0; b < 3; ++b) {
        const Tensor pairt = f.basis_pair(a, b);
        const Tensor lhs = general.D_tensor(f.multiply(fn, pairt));
        const Tensor rhs = f.add(f.tensor(f.d(fn), pairt), f.scale(sign(f.parity(fn)), f.multiply(fn, general.D_tensor(pairt))));
        out.push_back(tensor_check(f, "connection.tensor_leibniz." + std::string(kCoord[i]) + "." + pair_label(a, b),
                                   "D(f Xi^a (x) Xi^b) = df (x) Xi^a (x) Xi^b + (-1)^f f D(Xi^a (x) Xi^b)", lhs, rhs));
      }
    }

  {
    const Geometry zero(f, ConnectionParams{Poly(0), Poly(0), Poly(0)});
    bool ok = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) ok = ok && zero.D_tensor(f.basis_pair(a, b)).is_zero() && zero.D(f.basis(a)).is_zero();
    out.push_back(bool_check("connection.zero_params", "D = 0 at c0 = c1 = c2 = 0", ok, "nonzero value"));
  }
  return out;
}

CheckList check_curvature(const AlgebraSet& set) {
  const Forms f(set);
  CheckList out;
  const Geometry tl(f, ConnectionParams::torsionless());
  const Tensor rho = f.rho();
  const Tensor lambda = f.lambda();
  const Tensor phi = f.phi();
  const GradedMatrix j = j_matrix();
  const Poly c0 = sym(Symbol::c0), c1 = sym(Symbol::c1);
  const Tensor k = f.add(f.function(Element(c0 - c1 * c1)), f.scale(c0 * c1, phi));  // c0 - c1^2 + c0 c1 phi

  std::array<Tensor, 3> curv;
  for (std::size_t a = 0; a < 3; ++a) {
    curv[a] = tl.curvature(f.basis(a));
    const Tensor first = f.multiply(k, f.wedge(f.basis(a), f.varpi()));
    const Tensor inner = f.add(f.scale(c0 * sign(hat(a)), f.multiply(f.coordinate(a), rho)), f.scale(c1, f.basis(a)));
    const Tensor expected = f.add(first, f.wedge(inner, lambda));
    out.push_back(tensor_check(f, std::string("curvature.closed_form.") + kDiff[a],
                               "pi12 D^2 Xi^a = (c0 - c1^2 + c0 c1 phi) Xi^a /\\ rho ox rho + (c0 (-1)^a X^a rho + c1 Xi^a) /\\ Lambda",
                               curv[a], expected));
  }

  for (std::size_t a = 0; a < 3; ++a) {
    const std::array<Tensor, 3> omega = tl.curvature_components(a);
    Tensor recombined;
    for (std::size_t b = 0; b < 3; ++b) {
      recombined = f.add(recombined, f.tensor(omega[b], f.basis(b)));
      Tensor expected;
      for (std::size_t kk = 0; kk < 3; ++kk) {
        if (j(kk, b).is_zero()) continue;
        const Poly jkb = j(kk, b).scalar_part();
        const Tensor left = f.sub(f.scale(c0 * sign(hat(a)), f.multiply(f.coordinate(a), f.basis(kk))),
                                  f.multiply(k, f.multiply(f.basis(a), f.coordinate(kk))));
        Tensor term = f.scale(sign(hat(kk)), f.wedge(left, rho));
        term = f.add(term, f.scale(c1, f.wedge(f.basis(a), f.basis(kk))));
        expected = f.add(expected, f.scale(jkb, term));
      }
      out.push_back(tensor_check(f, "curvature.component." + pair_label(a, b),
                                 "omega^a_b = sum_k J_kb { (-1)^k { c0 (-1)^a X^a Xi^k - (c0 - c1^2 + c0 c1 phi) Xi^a X^k } /\\ rho + c1 Xi^a /\\ Xi^k }",
                                 omega[b], expected));
    }
    out.push_back(tensor_check(f, std::string("curvature.recombination.") + kDiff[a],
                               "pi12 D^2 Xi^a = sum_b omega^a_b ox Xi^b", recombined, curv[a]));
  }

  const std::array<std::pair<const char*, Tensor>, 4> coeffs = {
      std::pair{"theta1", f.coordinate(0)}, std::pair{"x", f.coordinate(1)}, std::pair{"theta2", f.coordinate(2)},
      std::pair{"phi", phi}};
  for (const auto& [name, fn] : coeffs)
    for (std::size_t a = 0; a < 3; ++a)
      out.push_back(tensor_check(f, std::string("curvature.left_linear.") + name + "." + kDiff[a],
                                 "pi12 D^2 (f Xi) = f pi12 D^2 Xi", tl.curvature(f.multiply(fn, f.basis(a))),
                                 f.multiply(fn, curv[a])));
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t a = 0; a < 3; ++a)
      out.push_back(tensor_check(f, std::string("curvature.right_linear.") + kDiff[b] + "." + kCoord[a],
                                 "pi12 D^2 (Xi^b X^a) = (pi12 D^2 Xi^b) X^a",
                                 tl.curvature(f.multiply(f.basis(b), f.coordinate(a))),
                                 f.multiply(curv[b], f.coordinate(a))));

  {
    const std::map<Symbol, Poly> classical = {{Symbol::h, Poly(0)}, {Symbol::c0, Poly(0)}};
    for (std::size_t a = 0; a < 3; ++a) {
      const Tensor expected = f.add(f.scale(Poly(-1) * c1 * c1, f.wedge(f.basis(a), f.varpi())),
                                    f.scale(c1, f.wedge(f.basis(a), lambda)));
      out.push_back(tensor_check(f, std::string("curvature.classical.") + kDiff[a],
                                 "at h = 0, c0 = 0: pi12 D^2 Xi^a = -c1^2 Xi^a /\\ rho ox rho + c1 Xi^a /\\ Lambda",
                                 f.canonicalize(f.substitute(curv[a], classical)),
                                 f.canonicalize(f.substitute(expected, classical))));
    }
    const Geometry zero(f, ConnectionParams{Poly(0), Poly(0), Poly(0)});
    bool ok = true;
    for (std::size_t a = 0; a < 3; ++a) ok = ok && zero.curvature(f.basis(a)).is_zero();
    out.push_back(bool_check("curvature.zero_params", "curvature vanishes at c0 = c1 = 0", ok, "nonzero value"));
  }
  return out;
}

CheckList check_metric(const AlgebraSet& set, const std::optional<std::pair<Poly, Poly>>& pinned) {
  const Forms f(set);
  CheckList out;
  const Geometry geo(f, ConnectionParams::torsionless());
  const Tensor rho = f.rho();

  const std::array<const char*, 9> printed = {"-(1/2)*h", "0", "-1", "0", "1", "0", "1", "0", "0"};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      out.push_back(tensor_check(f, "metric.value." + pair_label(a, b), "g(Xi^a ox Xi^b) = (J^-1)_ab",
                                 geo.metric_eval(f.basis_pair(a, b)), f.parse(printed[3 * a + b])));
  {
    const GradedMatrix g = j_inverse();
    const auto e = [&](std::size_t r, std::size_t c) { return g(r, c).scalar_part(); };
    const Poly det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                     e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    out.push_back(bool_check("metric.nondegenerate", "det g != 0", !det.is_zero(), "determinant vanishes"));
  }
  for (std::size_t a = 0; a < 3; ++a) {
    out.push_back(tensor_check(f, std::string("metric.g_rho_xi.") + kDiff[a], "g(rho ox Xi^a) = X^a",
                               geo.metric_eval(f.tensor(rho, f.basis(a))), f.coordinate(a)));
    out.push_back(tensor_check(f, std::string("metric.g_xi_rho.") + kDiff[a], "g(Xi^a ox rho) = (-1)^{X^a} X^a",
                               geo.metric_eval(f.tensor(f.basis(a), rho)),
                               f.scale(sign(coord_hat(a)), f.coordinate(a))));
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      out.push_back(tensor_check(f, "metric.d_g." + pair_label(a, b), "d o g(Xi^a ox Xi^b) = 0",
                                 f.d(geo.metric_eval(f.basis_pair(a, b))), Tensor()));

  const Poly c0 = sym(Symbol::c0), c1 = sym(Symbol::c1);
  const Geometry only_c0(f, ConnectionParams::torsionless(c0, Poly(0)));
  const Geometry only_c1(f, ConnectionParams::torsionless(Poly(0), c1));
  const std::array<const char*, 9> table = {
      "0",
      "c1*(xi1*x + eta*theta1 - h*xi2*x)",
      "c1*(eta*x - (1/2)*h*xi2*theta2 + rho)",
      "-c1*(xi1*x + eta*theta1 + h*eta*theta2)",
      "-c1*(2*eta*x - h*xi2*theta2 + 2*rho)",
      "-c1*(eta*theta2 + xi2*x)",
      "-c1*(eta*x - (1/2)*h*xi2*theta2 + rho)",
      "c1*(eta*theta2 + xi2*x)",
      "0",
  };
  std::array<Tensor, 9> part0, part1;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const std::size_t ab = 3 * a + b;
      const Tensor pairt = f.basis_pair(a, b);
      part0[ab] = geo.metric_eval(only_c0.D_tensor(pairt));
      part1[ab] = geo.metric_eval(only_c1.D_tensor(pairt));
      const Tensor mu = f.scale(Poly(2) * c0 * sign(coord_hat(a)),
                                f.multiply(f.multiply(rho, f.coordinate(a)), f.coordinate(b)));
      out.push_back(tensor_check(f, "metric.c0_part." + pair_label(a, b), "(1 ox g) D(Xi^a ox Xi^b) = (-1)^{X^a} 2 c0 rho X^a X^b at c1 = 0",
                                 part0[ab], mu));
      out.push_back(tensor_check(f, "metric.c1_part." + pair_label(a, b),
                                 std::string("(1 ox g) D(Xi^a ox Xi^b) = ") + table[ab] + " at c0 = 0", part1[ab],
                                 f.parse(table[ab])));
      const Tensor total = geo.metric_eval(geo.D_tensor(pairt));
      out.push_back(tensor_check(f, "metric.split." + pair_label(a, b), "(1 ox g) o D is the sum of its c0 and c1 parts",
                                 total, f.add(part0[ab], part1[ab])));
    }

  {
    // c0 A + c1 B = 0 for every pair forces c0 = c1 = 0
    std::string forced;
    bool c0_forced = false, c1_forced = false;
    for (std::size_t ab = 0; ab < 9 && !(c0_forced && c1_forced); ++ab) {
      if (!c0_forced && part1[ab].is_zero() && !part0[ab].is_zero()) {
        c0_forced = true;
        forced += "c0 = 0 from " + pair_label(ab / 3, ab % 3) + "; ";
      }
      if (!c1_forced && part0[ab].is_zero() && !part1[ab].is_zero()) {
        c1_forced = true;
        forced += "c1 = 0 from " + pair_label(ab / 3, ab % 3) + "; ";
      }
    }
    if (c0_forced && !c1_forced)
      for (std::size_t ab = 0; ab < 9 && !c1_forced; ++ab) c1_forced = !part1[ab].is_zero();
    if (c1_forced && !c0_forced)
      for (std::size_t ab = 0; ab < 9 && !c0_forced; ++ab) c0_forced = !part0[ab].is_zero();
    out.push_back(bool_check("metric.incompatible_unless_trivial", "(1 ox g) o D = 0 only for c0 = c1 = 0",
                             c0_forced && c1_forced, forced.empty() ? "a nontrivial connection may be metric" : forced));
    const Geometry zero(f, ConnectionParams{Poly(0), Poly(0), Poly(0)});
    bool ok = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) ok = ok && geo.metric_eval(zero.D_tensor(f.basis_pair(a, b))).is_zero();
    out.push_back(bool_check("metric.compatible_at_zero", "(1 ox g) o D = 0 at c0 = c1 = 0", ok, "nonzero value"));
  }

  {
    // g o sigma against +g and -g; classified, not asserted
    bool sym_ok = true, skew_ok = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        const Tensor gs = geo.metric_eval(f.sigma(f.basis_pair(a, b)));
        const Tensor g = geo.metric_eval(f.basis_pair(a, b));
        sym_ok = sym_ok && f.sub(gs, g).is_zero();
        skew_ok = skew_ok && f.add(gs, g).is_zero();
      }
    const std::string kind = sym_ok ? "symmetric" : skew_ok ? "skew_symmetric" : "neither";
    out.push_back(bool_check("metric.sigma_symmetry." + kind, "g o sigma compared with +g and -g (classification only)", true));
  }

  if (pinned) {
    const Geometry at(f, ConnectionParams::torsionless(pinned->first, pinned->second));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        const Tensor pairt = f.basis_pair(a, b);
        out.push_back(tensor_check(f, "metric.compatibility." + pair_label(a, b), "d o g = (1 ox g) o D",
                                   geo.metric_eval(at.D_tensor(pairt)), f.d(geo.metric_eval(pairt))));
      }
  }
  return out;
}

}  // namespace ncsuper
