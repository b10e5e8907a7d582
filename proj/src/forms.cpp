#include "ncsuper/forms.hpp"

#include <array>
#include <numeric>
#include <random>

#include "ncsuper/expr.hpp"

namespace ncsuper {

unsigned Tensor::degree() const { return std::accumulate(layout_.begin(), layout_.end(), 0U); }

namespace {

constexpr std::array<const char*, 3> kCoordNames = {"theta1", "x", "theta2"};
constexpr std::array<const char*, 3> kDiffNames = {"xi1", "eta", "xi2"};

Poly h_poly() { return Poly::symbol(Symbol::h); }

}  // namespace

Forms::Forms(const AlgebraSet& set) : forms_(*set.forms), wedge_(*set.wedge) {
  for (const char* n : kCoordNames) coord_.push_back(forms_.table().at(n));
  for (const char* n : kDiffNames) diff_.push_back(forms_.table().at(n));
}

namespace {

// Index 0..2 of a one-form letter, or -1 for a coordinate.
int diff_index(const std::vector<Letter>& diff, Letter l) {
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] == l) return static_cast<int>(i);
  return -1;
}

}  // namespace

Tensor Forms::canonicalize(std::vector<unsigned> layout, const Element& raw) const {
  for (unsigned s : layout)
    if (s != 1 && s != 2) throw FormError("slot degree must be 1 or 2");
  const unsigned deg = std::accumulate(layout.begin(), layout.end(), 0U);
  const Element n = forms_.normalize(raw);
  Element out;
  for (const auto& [w, c] : n.terms()) {
    std::size_t split = 0;
    while (split < w.size() && diff_index(diff_, w[split]) < 0) ++split;
    if (w.size() - split != deg)
      throw FormError("term " + forms_.format_word(w) + " does not match a layout of degree " + std::to_string(deg));
    std::vector<std::pair<Word, Poly>> partial = {{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)), c}};
    std::size_t pos = split;
    for (unsigned s : layout) {
      if (s == 1) {
        for (auto& [pw, pc] : partial) pw.push_back(w[pos]);
      } else {
        const Element reduced = wedge_.normalize_word({w[pos], w[pos + 1]});
        std::vector<std::pair<Word, Poly>> next;
        for (const auto& [pw, pc] : partial)
          for (const auto& [rw, rc] : reduced.terms()) {
            Word nw = pw;
            nw.insert(nw.end(), rw.begin(), rw.end());
            next.emplace_back(std::move(nw), pc * rc);
          }
        partial = std::move(next);
      }
      pos += s;
    }
    for (const auto& [pw, pc] : partial) out.add(pw, pc);
  }
  return Tensor(std::move(layout), std::move(out));
}

Tensor Forms::function(const Element& f) const { return canonicalize({}, f); }

Tensor Forms::basis(std::size_t a) const { return Tensor({1}, Element::letter(diff_.at(a))); }

Tensor Forms::basis_pair(std::size_t a, std::size_t b) const {
  return Tensor({1, 1}, Element::word({diff_.at(a), diff_.at(b)}));
}

Tensor Forms::coordinate(std::size_t a) const { return Tensor({}, Element::letter(coord_.at(a))); }

Tensor Forms::add(const Tensor& a, const Tensor& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.layout() != b.layout()) throw FormError("cannot add tensors with different slot layouts");
  return Tensor(a.layout(), a.value() + b.value());
}

Tensor Forms::sub(const Tensor& a, const Tensor& b) const { return add(a, scale(Poly(-1), b)); }

Tensor Forms::scale(const Poly& s, const Tensor& t) const { return Tensor(t.layout(), s * t.value()); }

Tensor Forms::tensor(const Tensor& a, const Tensor& b) const {
  std::vector<unsigned> layout = a.layout();
  layout.insert(layout.end(), b.layout().begin(), b.layout().end());
  return canonicalize(std::move(layout), free_product(a.value(), b.value()));
}

Tensor Forms::wedge(const Tensor& a, const Tensor& b) const {
  if (a.layout().empty() || b.layout().empty()) throw FormError("wedge needs forms on both sides");
  const unsigned merged = a.layout().back() + b.layout().front();
  if (merged > 2) throw FormError("wedge products beyond degree 2 are not supported");
  std::vector<unsigned> layout(a.layout().begin(), a.layout().end() - 1);
  layout.push_back(merged);
  layout.insert(layout.end(), b.layout().begin() + 1, b.layout().end());
  return canonicalize(std::move(layout), free_product(a.value(), b.value()));
}

Tensor Forms::multiply(const Tensor& a, const Tensor& b) const {
  if (!a.layout().empty() && !b.layout().empty())
    throw FormError("'*' between two forms; use 'ox' or '/\\'");
  return tensor(a, b);
}

Tensor Forms::sigma(const Tensor& t, std::size_t pos) const {
  if (t.is_zero()) return {};
  const auto& layout = t.layout();
  if (pos + 1 >= layout.size()) throw FormError("sigma: slot out of range");
  if (layout[pos] != 1 || layout[pos + 1] != 1) throw FormError("sigma acts on one-form slots");
  static const GradedMatrix rcheck = r_check(h_poly());
  const std::size_t offset = std::accumulate(layout.begin(), layout.begin() + static_cast<std::ptrdiff_t>(pos), 0U);
  Element out;
  for (const auto& [w, c] : t.value().terms()) {
    std::size_t split = 0;
    while (diff_index(diff_, w[split]) < 0) ++split;
    const std::size_t at = split + offset;
    const auto k = static_cast<std::size_t>(diff_index(diff_, w[at]));
    const auto l = static_cast<std::size_t>(diff_index(diff_, w[at + 1]));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Element& r = rcheck(pair(k, l), pair(i, j));
        if (r.is_zero()) continue;
        Word nw = w;
        nw[at] = diff_[i];
        nw[at + 1] = diff_[j];
        out.add(nw, c * r.scalar_part());
      }
  }
  return Tensor(layout, std::move(out));
}

Tensor Forms::pi(const Tensor& t) const {
  if (t.is_zero()) return {};
  const auto& layout = t.layout();
  if (layout.size() < 2 || layout[0] != 1 || layout[1] != 1) throw FormError("pi needs two leading one-form slots");
  std::vector<unsigned> merged = {2};
  merged.insert(merged.end(), layout.begin() + 2, layout.end());
  return canonicalize(std::move(merged), t.value());
}

Tensor Forms::d(const Tensor& t) const {
  if (t.is_zero()) return {};
  std::vector<unsigned> layout;
  if (t.layout().empty())
    layout = {1};
  else if (t.layout() == std::vector<unsigned>{1})
    layout = {2};
  else
    throw FormError("d is implemented on functions and one-forms");
  Element raw;
  for (const auto& [w, c] : t.value().terms()) {
    Parity prefix = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int di = diff_index(diff_, w[k]);
      if (di >= 0) break;  // d(Xi) = 0
      std::size_t ci = 0;
      while (coord_[ci] != w[k]) ++ci;
      Word nw = w;
      nw[k] = diff_[ci];
      raw.add(nw, prefix ? -c : c);
      prefix ^= forms_.table()[w[k]].parity;
    }
  }
  return canonicalize(std::move(layout), raw);
}

Parity Forms::parity(const Tensor& t) const { return forms_.parity(t.value()); }

Tensor Forms::substitute(const Tensor& t, const std::map<Symbol, Poly>& bindings) const {
  return Tensor(t.layout(), t.value().substitute(bindings));
}

Tensor Forms::phi() const { return function(forms_.parse("x*x - 2*theta1*theta2")); }

Tensor Forms::rho() const {
  return canonicalize({1}, forms_.parse("theta1*xi2 + x*eta - theta2*xi1 - (1/2)*h*theta2*xi2"));
}

Tensor Forms::lambda() const {
  return canonicalize({1, 1}, forms_.parse("xi1*xi2 + eta*eta - xi2*xi1 - (1/2)*h*xi2*xi2"));
}

Tensor Forms::chi() const {
  const GradedMatrix j = j_matrix();
  Element raw;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (!j(a, b).is_zero()) raw += free_product(j(a, b), Element::word({diff_[a], diff_[b]}));
  return canonicalize({2}, raw);
}

Tensor Forms::varpi() const { return tensor(rho(), rho()); }

std::string Forms::format(const Tensor& t) const {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& terms = t.value().terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Word& w = it->first;
    std::size_t split = 0;
    while (split < w.size() && diff_index(diff_, w[split]) < 0) ++split;
    std::string text = forms_.format_word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)));
    std::size_t pos = split;
    for (std::size_t s = 0; s < t.layout().size(); ++s) {
      std::string slot = forms_.table()[w[pos]].name;
      if (t.layout()[s] == 2) slot += " /\\ " + forms_.table()[w[pos + 1]].name;
      pos += t.layout()[s];
      if (s == 0)
        text += (text.empty() ? "" : "*") + slot;
      else
        text += " ox " + slot;
    }
    out += format_term(it->second, text, first);
    first = false;
  }
  return out;
}

namespace {

struct TensorOps {
  const Forms& forms;

  template <class F>
  Tensor guarded(std::size_t pos, F&& f) {
    try {
      return f();
    } catch (const FormError& e) {
      throw ParseError(pos, e.what());
    }
  }

  Tensor number(const Rational& r, std::size_t) { return Tensor({}, Element(Poly(r))); }
  Tensor identifier(const std::string& name, std::size_t pos) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (name == kCoordNames[i]) return forms.coordinate(i);
      if (name == kDiffNames[i]) return forms.basis(i);
    }
    if (name == "rho") return forms.rho();
    if (name == "phi") return forms.phi();
    if (name == "Lambda") return forms.lambda();
    try {
      return Tensor({}, Element(Poly::symbol(symbol_from_name(name))));
    } catch (const std::invalid_argument&) {
      throw ParseError(pos, "unknown identifier '" + name + "'");
    }
  }
  Tensor negate(Tensor v) { return forms.scale(Poly(-1), v); }
  Tensor add(Tensor a, Tensor b) {
    return guarded(0, [&] { return forms.add(a, b); });
  }
  Tensor subtract(Tensor a, Tensor b) {
    return guarded(0, [&] { return forms.sub(a, b); });
  }
  Tensor multiply(Tensor a, Tensor b, std::size_t pos) {
    return guarded(pos, [&] { return forms.multiply(a, b); });
  }
  Tensor tensor(Tensor a, Tensor b, std::size_t pos) {
    return guarded(pos, [&] {
      if (a.layout().empty() || b.layout().empty()) throw FormError("'ox' needs forms on both sides");
      return forms.tensor(a, b);
    });
  }
  Tensor wedge(Tensor a, Tensor b, std::size_t pos) {
    return guarded(pos, [&] { return forms.wedge(a, b); });
  }
  Tensor power(Tensor v, unsigned n, std::size_t pos) {
    return guarded(pos, [&] {
      Tensor out({}, Element(1));
      for (unsigned i = 0; i < n; ++i) out = forms.multiply(out, v);
      return out;
    });
  }
};

}  // namespace

Tensor Forms::parse(std::string_view text) const {
  TensorOps ops{*this};
  return evaluate<Tensor>(*parse_expr(text), ops);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

std::string label(std::size_t a) { return kDiffNames[a]; }
std::string label(std::size_t a, std::size_t b) { return std::string(kDiffNames[a]) + "_" + kDiffNames[b]; }

CheckResult tensor_check(const Forms& f, std::string id, std::string anchor, const Tensor& lhs, const Tensor& rhs) {
  const Tensor diff = f.sub(lhs, rhs);
  const bool ok = diff.is_zero();
  return {std::move(id), std::move(anchor), ok, ok ? std::string() : f.format(diff)};
}

Parity coord_parity(std::size_t i) { return 1 ^ index_parity(i); }
Parity diff_parity(std::size_t i) { return index_parity(i); }

}  // namespace

CheckList check_form_identities(const AlgebraSet& set) {
  const Forms f(set);
  CheckList out;
  const Tensor rho = f.rho();
  const Tensor phi = f.phi();
  const Tensor lambda = f.lambda();
  const GradedMatrix b = b_matrix(h_poly());
  const GradedMatrix j = j_matrix();

  // sigma table
  const std::array<const char*, 9> sigma_table = {
      "xi1 ox xi1 - h*(xi1 ox xi2 + eta ox eta - xi2 ox xi1 - (1/2)*h*xi2 ox xi2)",
      "eta ox xi1 + h*xi2 ox eta",
      "xi2 ox xi1 + h*xi2 ox xi2",
      "xi1 ox eta - h*eta ox xi2",
      "-eta ox eta - h*xi2 ox xi2",
      "xi2 ox eta",
      "xi1 ox xi2 - h*xi2 ox xi2",
      "eta ox xi2",
      "xi2 ox xi2",
  };
  for (std::size_t k = 0; k < 9; ++k)
    out.push_back(tensor_check(f, "forms.sigma_table." + label(k / 3, k % 3), "sigma(Xi^a ox Xi^b) table",
                               f.sigma(f.basis_pair(k / 3, k % 3)), f.parse(sigma_table[k])));

  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      const Tensor t = f.basis_pair(a, c);
      out.push_back(tensor_check(f, "forms.sigma_squared." + label(a, c), "sigma^2 = 1", f.sigma(f.sigma(t)), t));
    }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t e = 0; e < 3; ++e) {
        const Tensor t = f.tensor(f.basis_pair(a, c), f.basis(e));
        const Tensor lhs = f.sigma(f.sigma(f.sigma(t, 0), 1), 0);
        const Tensor rhs = f.sigma(f.sigma(f.sigma(t, 1), 0), 1);
        out.push_back(tensor_check(f, "forms.sigma_braid." + label(a, c) + "_" + label(e),
                                   "sigma12 sigma23 sigma12 = sigma23 sigma12 sigma23", lhs, rhs));
      }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      const Tensor t = f.basis_pair(a, c);
      out.push_back(tensor_check(f, "forms.pi_sigma." + label(a, c), "pi o (sigma - 1) = 0", f.pi(f.sigma(t)), f.pi(t)));
    }

  // sigma exchange of the differentials: Xi^i ox Xi^j = sum (-1)^{X^i+Xi^l} B^{ij}_{kl} sigma(Xi^l ox Xi^k)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t jj = 0; jj < 3; ++jj) {
      Tensor rhs;
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          const Element& bij = b(pair(i, jj), pair(k, l));
          if (bij.is_zero()) continue;
          const Poly s = bij.scalar_part() * Poly((coord_parity(i) ^ diff_parity(l)) ? -1 : 1);
          rhs = f.add(rhs, f.scale(s, f.sigma(f.basis_pair(l, k))));
        }
      out.push_back(tensor_check(f, "forms.sigma_exchange." + label(i, jj),
                                 "Xi^i ox Xi^j = sum (-1)^{X^i+Xi^l} B^{ij}_{kl} sigma(Xi^l ox Xi^k)",
                                 f.basis_pair(i, jj), rhs));
    }

  // sigma is A-bilinear
  const std::array<std::pair<const char*, Tensor>, 4> coeffs = {
      std::pair{"theta1", f.coordinate(0)}, std::pair{"x", f.coordinate(1)}, std::pair{"theta2", f.coordinate(2)},
      std::pair{"phi", phi}};
  for (const auto& [name, fn] : coeffs)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = 0; c < 3; ++c) {
        const Tensor t = f.basis_pair(a, c);
        out.push_back(tensor_check(f, std::string("forms.sigma_left_linear.") + name + "." + label(a, c),
                                   "sigma(f t) = f sigma(t)", f.sigma(f.multiply(fn, t)), f.multiply(fn, f.sigma(t))));
        out.push_back(tensor_check(f, std::string("forms.sigma_right_linear.") + name + "." + label(a, c),
                                   "sigma(t f) = sigma(t) f", f.sigma(f.multiply(t, fn)), f.multiply(f.sigma(t), fn)));
      }

  // invariants
  {
    Tensor rho_j, lambda_j, rho_right;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = 0; c < 3; ++c) {
        if (j(a, c).is_zero()) continue;
        const Poly jac = j(a, c).scalar_part();
        rho_j = f.add(rho_j, f.scale(jac, f.multiply(f.coordinate(a), f.basis(c))));
        lambda_j = f.add(lambda_j, f.scale(jac, f.basis_pair(a, c)));
        rho_right = f.add(rho_right, f.scale(jac * Poly(coord_parity(c) ? -1 : 1), f.multiply(f.basis(a), f.coordinate(c))));
      }
    out.push_back(tensor_check(f, "forms.rho.matrix_form", "rho = sum J_ab X^a Xi^b", rho, rho_j));
    out.push_back(tensor_check(f, "forms.rho.right_form", "rho = sum (-1)^{X^b} J_ab Xi^a X^b", rho, rho_right));
    out.push_back(tensor_check(f, "forms.rho.right_form_printed",
                               "rho = xi2 theta1 + eta x - xi1 theta2 + (h/2) xi2 theta2", rho,
                               f.parse("xi2*theta1 + eta*x - xi1*theta2 + (1/2)*h*xi2*theta2")));
    out.push_back(tensor_check(f, "forms.lambda.matrix_form", "Lambda = sum J_ab Xi^a ox Xi^b", lambda, lambda_j));
  }
  {
    GradedMatrix x(vector_parity(), {1});
    for (std::size_t i = 0; i < 3; ++i) x(i, 0) = Element::letter(set.forms->table().at(kCoordNames[i]));
    const GradedMatrix xst = supertranspose(x);
    const GradedMatrix val = multiply(multiply(xst, j, set.forms.get()), x, set.forms.get());
    out.push_back(tensor_check(f, "forms.phi.matrix_form", "phi = X^st J X = x^2 - 2 theta1 theta2",
                               f.function(val(0, 0)), phi));
  }
  out.push_back(tensor_check(f, "forms.chi", "chi = sum J_ab Xi^a /\\ Xi^b = 0", f.chi(), Tensor()));
  out.push_back(tensor_check(f, "forms.rho_wedge_rho", "rho /\\ rho = 0", f.wedge(rho, rho), Tensor()));
  out.push_back(tensor_check(f, "forms.pi_lambda", "pi(Lambda) = 0", f.pi(lambda), Tensor()));

  for (std::size_t a = 0; a < 3; ++a) {
    const Tensor xa = f.coordinate(a);
    const Tensor xia = f.basis(a);
    out.push_back(tensor_check(f, "forms.X_phi." + std::string(kCoordNames[a]), "X^a phi = phi X^a",
                               f.multiply(xa, phi), f.multiply(phi, xa)));
    out.push_back(tensor_check(f, "forms.Xi_phi." + label(a), "Xi^a phi = phi Xi^a", f.multiply(xia, phi),
                               f.multiply(phi, xia)));
    const Poly sx(coord_parity(a) ? -1 : 1);
    const Poly sxi(diff_parity(a) ? -1 : 1);
    out.push_back(tensor_check(f, "forms.X_rho." + std::string(kCoordNames[a]), "X^a rho = (-1)^{X^a} rho X^a",
                               f.multiply(xa, rho), f.scale(sx, f.multiply(rho, xa))));
    out.push_back(tensor_check(f, "forms.Xi_rho." + label(a), "Xi^a /\\ rho = (-1)^{Xi^a} rho /\\ Xi^a",
                               f.wedge(xia, rho), f.scale(sxi, f.wedge(rho, xia))));
    out.push_back(tensor_check(f, "forms.X_lambda." + std::string(kCoordNames[a]), "[X^a, Lambda] = 0",
                               f.multiply(xa, lambda), f.multiply(lambda, xa)));
  }

  // sigma with rho
  for (std::size_t a = 0; a < 3; ++a) {
    const Poly s(diff_parity(a) ? -1 : 1);
    out.push_back(tensor_check(f, "forms.sigma_rho.left." + label(a), "sigma(Xi^a ox rho) = (-1)^{Xi^a} rho ox Xi^a",
                               f.sigma(f.tensor(f.basis(a), rho)), f.scale(s, f.tensor(rho, f.basis(a)))));
    out.push_back(tensor_check(f, "forms.sigma_rho.right." + label(a), "sigma(rho ox Xi^a) = (-1)^{Xi^a} Xi^a ox rho",
                               f.sigma(f.tensor(rho, f.basis(a))), f.scale(s, f.tensor(f.basis(a), rho))));
  }
  out.push_back(tensor_check(f, "forms.sigma_rho.rho_rho", "sigma(rho ox rho) = -rho ox rho", f.sigma(f.varpi()),
                             f.scale(Poly(-1), f.varpi())));

  // theta1^2 is central
  {
    const Tensor t1sq = f.multiply(f.coordinate(0), f.coordinate(0));
    for (std::size_t a : {1U, 2U})
      out.push_back(tensor_check(f, "forms.theta1_squared_central." + std::string(kCoordNames[a]), "[theta1^2, X^a] = 0",
                                 f.multiply(t1sq, f.coordinate(a)), f.multiply(f.coordinate(a), t1sq)));
  }

  // d
  for (std::size_t a = 0; a < 3; ++a) {
    out.push_back(tensor_check(f, "forms.d_coordinate." + std::string(kCoordNames[a]), "d X^a = Xi^a",
                               f.d(f.coordinate(a)), f.basis(a)));
    out.push_back(tensor_check(f, "forms.d_squared." + std::string(kCoordNames[a]), "d^2 = 0",
                               f.d(f.d(f.coordinate(a))), Tensor()));
  }
  {
    // every word of length <= 3, then seeded random combinations
    std::vector<Word> words = {{}};
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const Word& w : words)
        if (w.size() == len - 1)
          for (std::size_t i = 0; i < 3; ++i) {
            Word nw = w;
            nw.push_back(set.forms->table().at(kCoordNames[i]));
            next.push_back(nw);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    std::size_t failures = 0;
    std::string detail;
    for (const Word& w : words) {
      const Tensor dd = f.d(f.d(f.function(Element::word(w))));
      if (!dd.is_zero() && failures++ == 0) detail = set.forms->format_word(w) + ": " + f.format(dd);
    }
    out.push_back(bool_check("forms.d_squared.words", "d^2 = 0 on all words of length <= 3", failures == 0, detail));

    std::mt19937 rng(20260101);
    std::uniform_int_distribution<std::size_t> pick(1, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    failures = 0;
    detail.clear();
    for (int trial = 0; trial < 20; ++trial) {
      Element e;
      for (int k = 0; k < 4; ++k) e.add(words[pick(rng)], Poly(coeff(rng)) + Poly(coeff(rng)) * h_poly());
      const Tensor dd = f.d(f.d(f.function(e)));
      if (!dd.is_zero() && failures++ == 0) detail = f.format(dd);
    }
    out.push_back(bool_check("forms.d_squared.random", "d^2 = 0 on random combinations", failures == 0, detail));
  }
  for (std::size_t k = 0; k < superspace_relations().size(); ++k) {
    const Element rel = set.forms->free_relation(superspace_relations()[k]);
    out.push_back(tensor_check(f, "forms.d_relation." + std::to_string(k + 1), "d respects " + superspace_relations()[k],
                               f.d(Tensor({}, rel)), Tensor()));
  }

  // canonical form
  out.push_back(tensor_check(f, "forms.canonical.move_left", "xi2 theta1 ox eta = (theta1 xi2 - h theta2 xi2) ox eta",
                             f.parse("xi2*theta1 ox eta"), f.parse("theta1*xi2 ox eta - h*theta2*xi2 ox eta")));
  {
    const Tensor t = f.parse("eta*theta1*x ox xi1 /\\ xi2");
    out.push_back(tensor_check(f, "forms.canonical.idempotent", "canonicalize is idempotent", f.canonicalize(t), t));
  }

  // classical limit of sigma: graded flip
  const std::map<Symbol, Poly> h0 = {{Symbol::h, Poly(0)}};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) {
      const Poly s((diff_parity(a) & diff_parity(c)) ? -1 : 1);
      out.push_back(tensor_check(f, "forms.classical_sigma." + label(a, c), "sigma at h = 0 is the graded flip",
                                 f.substitute(f.sigma(f.basis_pair(a, c)), h0), f.scale(s, f.basis_pair(c, a))));
    }
  return out;
}

}  // namespace ncsuper
