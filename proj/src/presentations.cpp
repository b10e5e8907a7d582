#include "ncsuper/presentations.hpp"

#include <array>

namespace ncsuper {

namespace {

constexpr std::array<const char*, 3> kCoordinates = {"theta1", "x", "theta2"};
constexpr std::array<const char*, 3> kDifferentials = {"xi1", "eta", "xi2"};
constexpr std::array<const char*, 3> kDerivatives = {"d1", "dx", "d2"};
constexpr std::array<const char*, 6> kGroupLetters = {"a", "b", "c", "d", "alpha", "delta"};

// Weights are chosen so that every relation solves for the word the lists
// are written to eliminate (see tests/test_presentations.cpp).
std::vector<Generator> coordinate_generators() {
  return {{"theta1", 1, 2}, {"x", 0, 1}, {"theta2", 1, 1}};
}
std::vector<Generator> differential_generators() {
  return {{"xi1", 0, 3}, {"eta", 1, 2}, {"xi2", 0, 1}};
}
std::vector<Generator> derivative_generators() {
  return {{"d1", 1, 1}, {"dx", 0, 1}, {"d2", 1, 1}};
}
std::vector<Generator> group_generators() {
  return {{"a", 0, 2}, {"b", 0, 3}, {"c", 0, 1}, {"d", 0, 2}, {"alpha", 1, 2}, {"delta", 1, 1}};
}

std::vector<Generator> concat(std::initializer_list<std::vector<Generator>> parts) {
  std::vector<Generator> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::string> join(std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// y g -> (-1)^{|g||y|} g y for every group letter g and every other letter y.
Presentation with_group_swaps(const std::string& name, const GeneratorTable& table,
                              const std::vector<std::string>& relations) {
  const Presentation base = Presentation::from_relations(name, table, relations);
  std::vector<RewriteRule> rules = base.rules();
  const std::size_t n_group = kGroupLetters.size();
  for (std::size_t y = n_group; y < table.size(); ++y)
    for (std::size_t g = 0; g < n_group; ++g) {
      const auto gy = static_cast<Letter>(g);
      const auto yy = static_cast<Letter>(y);
      const Poly sign((table[gy].parity & table[yy].parity) ? -1 : 1);
      rules.push_back({{yy, gy}, Element::word({gy, yy}, sign), table[yy].name + "*" + table[gy].name + " swap"});
    }
  return Presentation(name, table, std::move(rules));
}

std::shared_ptr<const Presentation> share(Presentation p) { return std::make_shared<const Presentation>(std::move(p)); }

}  // namespace

std::string_view algebra_name(AlgebraId id) {
  switch (id) {
    case AlgebraId::superspace: return "superspace";
    case AlgebraId::calculus: return "calculus";
    case AlgebraId::group: return "group";
    case AlgebraId::combined: return "combined";
  }
  return "?";
}

std::optional<AlgebraId> algebra_from_name(std::string_view name) {
  for (AlgebraId id : {AlgebraId::superspace, AlgebraId::calculus, AlgebraId::group, AlgebraId::combined})
    if (algebra_name(id) == name) return id;
  return std::nullopt;
}

const std::vector<std::string>& superspace_relations() {
  static const std::vector<std::string> r = {
      "theta1*x - x*theta1 = -h*x*theta2",
      "theta1*theta2 + theta2*theta1 = 0",
      "theta2*x - x*theta2 = 0",
      "theta1^2 = -(1/2)*h*(x^2 - 2*theta1*theta2)",
      "theta2^2 = 0",
  };
  return r;
}

const std::vector<std::string>& differential_relations() {
  static const std::vector<std::string> r = {
      "xi1*eta - eta*xi1 = h*eta*xi2",
      "xi1*xi2 - xi2*xi1 = h*xi2*xi2",
      "eta*xi2 - xi2*eta = 0",
      "eta*eta = -(1/2)*h*xi2*xi2",
  };
  return r;
}

const std::vector<std::string>& cordiff_relations() {
  static const std::vector<std::string> r = {
      "theta1*xi1 - xi1*theta1 = h*(theta1*xi2 + x*eta - theta2*xi1 - (1/2)*h*theta2*xi2)",
      "theta1*eta + eta*theta1 = h*x*xi2",
      "theta1*xi2 - xi2*theta1 = h*theta2*xi2",
      "x*xi1 - xi1*x = -h*theta2*eta",
      "x*eta - eta*x = -h*theta2*xi2",
      "x*xi2 - xi2*x = 0",
      "theta2*xi1 - xi1*theta2 = -h*theta2*xi2",
      "theta2*eta + eta*theta2 = 0",
      "theta2*xi2 - xi2*theta2 = 0",
  };
  return r;
}

const std::vector<std::string>& dercor_relations() {
  static const std::vector<std::string> r = {
      "d1*theta1 = 1 - theta1*d1 + h*theta2*d1",
      "d1*x = x*d1",
      "d1*theta2 = -theta2*d1",
      "dx*theta1 = theta1*dx - h*x*d1",
      "dx*x = 1 + x*dx + h*theta2*d1",
      "dx*theta2 = theta2*dx",
      "d2*theta1 = -theta1*d2 - h*(theta1*d1 + x*dx + theta2*d2 + (1/2)*h*theta2*d1)",
      "d2*x = x*d2 - h*theta2*dx",
      "d2*theta2 = 1 - theta2*d2 + h*theta2*d1",
  };
  return r;
}

const std::vector<std::string>& derdiff_relations() {
  static const std::vector<std::string> r = {
      "d1*xi1 = xi1*d1 - h*xi2*d1",
      "d1*eta = -eta*d1",
      "d1*xi2 = xi2*d1",
      "dx*xi1 = xi1*dx - h*eta*d1",
      "dx*eta = eta*dx + h*xi2*d1",
      "dx*xi2 = xi2*dx",
      "d2*xi1 = xi1*d2 + h*(xi1*d1 + eta*dx + xi2*d2 + (1/2)*h*xi2*d1)",
      "d2*eta = -eta*d2 + h*xi2*dx",
      "d2*xi2 = xi2*d2 - h*xi2*d1",
  };
  return r;
}

const std::vector<std::string>& derder_relations() {
  static const std::vector<std::string> r = {
      "d1^2 = 0",
      "d1*dx = dx*d1",
      "d1*d2 = -d2*d1",
      "dx*d2 = d2*dx - h*d1*dx",
      "d2^2 = h*(d1*d2 - (1/2)*dx^2)",
  };
  return r;
}

const std::vector<std::string>& group_relations() {
  static const std::vector<std::string> r = {
      "a*b - b*a = h*(1 - a^2)",
      "a*c - c*a = h*c^2",
      "a*d - d*a = h*(c*d - c*a)",
      "a*alpha - alpha*a = 0",
      "a*delta - delta*a = h*c*delta",
      "b*c - c*b = h*(c*a + d*c)",
      "b*d - d*b = h*(d^2 - 1)",
      "b*alpha - alpha*b = h*alpha*a",
      "b*delta - delta*b = h*(d*delta + c*alpha)",
      "c*d - d*c = -h*c^2",
      "c*alpha - alpha*c = -h*c*delta",
      "c*delta - delta*c = 0",
      "d*alpha - alpha*d = h*(delta*a - delta*d)",
      "d*delta - delta*d = h*delta*c",
      "alpha*delta + delta*alpha = h*(a*c - delta^2)",
      "alpha^2 = (1/2)*h*(a^2 - 1)",
      "delta^2 = (1/2)*h*c^2",
      "a*d - b*c + alpha*delta + (1/2)*h*a*c = 1",
  };
  return r;
}

const std::vector<std::string>& group_derived_relations() {
  static const std::vector<std::string> r = {
      "a*e - e*a = h*gamma*delta",
      "b*e - e*b = h*(beta*delta + gamma*alpha)",
      "c*e - e*c = 0",
      "d*e - e*d = h*gamma*delta",
      "e*alpha - alpha*e = h*(e*delta + gamma*a)",
      "e*beta - beta*e = h*(d*delta + gamma*e)",
      "e*gamma - gamma*e = h*c*delta",
      "e*delta - delta*e = h*c*gamma",
      "a*beta - beta*a = h*(gamma*d - gamma*a)",
      "b*beta - beta*b = h*beta*d",
      "c*beta - beta*c = -h*c*gamma",
      "d*beta - beta*d = 0",
      "alpha*beta + beta*alpha = h*(e*a - e*d)",
      "beta*gamma + gamma*beta = -h*(d*c + gamma^2)",
      "beta*delta + delta*beta = h*c*e",
      "a*gamma - gamma*a = h*gamma*c",
      "b*gamma - gamma*b = h*(beta*c + gamma*a)",
      "c*gamma - gamma*c = 0",
      "d*gamma - gamma*d = h*c*gamma",
      "alpha*gamma + gamma*alpha = -h*c*e",
      "gamma*delta + delta*gamma = 0",
      "beta^2 = (1/2)*h*(1 - d^2)",
      "gamma^2 = -(1/2)*h*c^2",
  };
  return r;
}

const Presentation& AlgebraSet::get(AlgebraId id) const {
  switch (id) {
    case AlgebraId::superspace: return *superspace;
    case AlgebraId::calculus: return *calculus;
    case AlgebraId::group: return *group;
    case AlgebraId::combined: return *combined;
  }
  throw std::invalid_argument("unknown algebra id");
}

std::vector<std::shared_ptr<const Presentation>> AlgebraSet::all() const {
  return {superspace, calculus, group, combined, forms, wedge, group_forms};
}

const Presentation& AlgebraSet::by_name(std::string_view name) const {
  for (const auto& p : all())
    if (p->name() == name) return *p;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

Element corrupted_rhs(const RewriteRule& rule) { return rule.rhs.is_zero() ? Element(1) : -rule.rhs; }

AlgebraSet build_algebras(const std::optional<RuleCorruption>& corruption) {
  AlgebraSet s;
  const GeneratorTable super_table(coordinate_generators());
  const GeneratorTable calc_table(concat({differential_generators(), coordinate_generators(), derivative_generators()}));
  const GeneratorTable group_table(group_generators());
  const GeneratorTable forms_table(concat({coordinate_generators(), differential_generators()}));
  const GeneratorTable combined_table(concat({group_generators(), differential_generators(), coordinate_generators(),
                                              derivative_generators()}));
  const GeneratorTable group_forms_table(concat({group_generators(), coordinate_generators(), differential_generators()}));

  const auto calc_rel = join({&superspace_relations(), &differential_relations(), &cordiff_relations(),
                              &dercor_relations(), &derdiff_relations(), &derder_relations()});
  const auto forms_rel = join({&superspace_relations(), &cordiff_relations()});
  const auto wedge_rel = join({&superspace_relations(), &cordiff_relations(), &differential_relations()});
  const auto combined_rel = join({&group_relations(), &calc_rel});
  const auto group_forms_rel = join({&group_relations(), &forms_rel});

  s.superspace = share(Presentation::from_relations("superspace", super_table, superspace_relations()));
  s.calculus = share(Presentation::from_relations("calculus", calc_table, calc_rel));
  s.group = share(Presentation::from_relations("group", group_table, group_relations()));
  s.combined = share(with_group_swaps("combined", combined_table, combined_rel));
  s.forms = share(Presentation::from_relations("forms", forms_table, forms_rel));
  s.wedge = share(Presentation::from_relations("wedge", forms_table, wedge_rel));
  s.group_forms = share(with_group_swaps("group_forms", group_forms_table, group_forms_rel));

  if (corruption) {
    for (auto* slot : {&s.superspace, &s.calculus, &s.group, &s.combined, &s.forms, &s.wedge, &s.group_forms}) {
      if ((*slot)->name() != corruption->algebra) continue;
      const auto& rules = (*slot)->rules();
      if (corruption->rule >= rules.size())
        throw std::invalid_argument(corruption->algebra + " has only " + std::to_string(rules.size()) + " rules");
      *slot = share((*slot)->with_rule_rhs(corruption->rule, corrupted_rhs(rules[corruption->rule])));
      return s;
    }
    throw std::invalid_argument("unknown algebra '" + corruption->algebra + "'");
  }
  return s;
}

const AlgebraSet& standard_algebras() {
  static const AlgebraSet set = build_algebras();
  return set;
}

std::shared_ptr<const Presentation> build_presentation(AlgebraId id) {
  const AlgebraSet& set = standard_algebras();
  std::shared_ptr<const Presentation> p;
  switch (id) {
    case AlgebraId::superspace: p = set.superspace; break;
    case AlgebraId::calculus: p = set.calculus; break;
    case AlgebraId::group: p = set.group; break;
    case AlgebraId::combined: p = set.combined; break;
  }
  ConfluenceReport report = p->check_confluence();
  if (!report.ok())
    throw ConfluenceError(p->name() + ": " + std::to_string(report.failures()) + " overlap(s) fail to resolve",
                          std::move(report));
  return p;
}

Element group_gamma(const Presentation& p) { return p.parse("alpha*c - delta*a - h*delta*c"); }

Element group_e(const Presentation& p) { return p.parse("1 + alpha*delta - (1/2)*h*a*c"); }

Element group_beta(const Presentation& p) {
  return p.parse("alpha*d - delta*b - h*delta*d") - Poly(Rational(1, 2)) * Poly::symbol(Symbol::h) * group_gamma(p);
}

Presentation::Macros group_macros(const Presentation& p) {
  return [&p](const std::string& name) -> std::optional<Element> {
    if (!p.table().find("a")) return std::nullopt;
    if (name == "e") return group_e(p);
    if (name == "beta") return group_beta(p);
    if (name == "gamma") return group_gamma(p);
    return std::nullopt;
  };
}

GradedMatrix t_matrix(const Presentation& p) {
  GradedMatrix t = GradedMatrix::square(vector_parity());
  const auto L = [&p](const char* n) { return Element::letter(p.table().at(n)); };
  t(0, 0) = L("a");
  t(0, 1) = L("alpha");
  t(0, 2) = L("b");
  t(1, 0) = group_gamma(p);
  t(1, 1) = group_e(p);
  t(1, 2) = group_beta(p);
  t(2, 0) = L("c");
  t(2, 1) = L("delta");
  t(2, 2) = L("d");
  return t;
}

GradedMatrix tau_matrix(const Presentation& p) {
  return multiply(multiply(j_matrix(), t_matrix(p), &p), j_inverse(), &p);
}

GradedMatrix antipode_matrix(const Presentation& p) {
  const Presentation::Macros m = group_macros(p);
  const std::array<const char*, 9> text = {
      "d + (1/2)*h*c", "-beta - (1/2)*h*gamma", "-b - (1/2)*h*(a - d) + (1/4)*h^2*c",
      "delta",         "e",                     "-alpha + (1/2)*h*delta",
      "-c",            "gamma",                 "a - (1/2)*h*c"};
  GradedMatrix s = GradedMatrix::square(vector_parity());
  for (std::size_t k = 0; k < 9; ++k) s(k / 3, k % 3) = p.parse(text[k], m);
  return s;
}

Element coordinate(const Presentation& p, std::size_t i) { return Element::letter(p.table().at(kCoordinates.at(i))); }
Element differential(const Presentation& p, std::size_t i) {
  return Element::letter(p.table().at(kDifferentials.at(i)));
}
Element derivative(const Presentation& p, std::size_t i) { return Element::letter(p.table().at(kDerivatives.at(i))); }

Coaction::Coaction(const Presentation& from, const Presentation& to) : from_(from), to_(to) {
  const GradedMatrix t = t_matrix(to);
  const GradedMatrix tau = tau_matrix(to);
  for (const Generator& g : from.table().entries()) {
    Element image;
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i) {
      const auto term = [&](const GradedMatrix& m, const char* const* names, bool signed_) {
        Element sum;
        for (std::size_t j = 0; j < 3; ++j) {
          Element v = free_product(m(i, j), Element::letter(to.table().at(names[j])));
          if (signed_ && (index_parity(i) ^ index_parity(j))) v = -v;
          sum += v;
        }
        return to.normalize(sum);
      };
      if (g.name == kCoordinates[i]) {
        image = term(t, kCoordinates.data(), false);
        found = true;
      } else if (g.name == kDifferentials[i]) {
        image = term(t, kDifferentials.data(), true);
        found = true;
      } else if (g.name == kDerivatives[i]) {
        image = term(tau, kDerivatives.data(), true);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("coaction: no image for generator " + g.name);
    images_.push_back(std::move(image));
  }
}

Element Coaction::operator()(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element prod(c);
    for (Letter l : w) prod = to_.multiply(prod, images_.at(l));
    out += prod;
  }
  return out;
}

Element counit(const Presentation& p, const Element& e) {
  std::vector<int> value(p.table().size(), -1);  // -1: keep the letter
  for (const char* g : kGroupLetters)
    if (auto l = p.table().find(g)) value[*l] = (std::string_view(g) == "a" || std::string_view(g) == "d") ? 1 : 0;
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word kept;
    bool zero = false;
    for (Letter l : w) {
      if (value[l] == 0) zero = true;
      if (value[l] == -1) kept.push_back(l);
    }
    if (!zero) out.add(kept, c);
  }
  return out;
}

CheckList check_confluence_all(const AlgebraSet& set) {
  CheckList out;
  for (const auto& p : set.all()) {
    const ConfluenceReport report = p->check_confluence();
    std::string detail;
    for (const OverlapResult& o : report.overlaps) {
      if (o.agree) continue;
      if (!detail.empty()) detail += "; ";
      detail += p->format_word(o.overlap) + ": " + p->format(o.via_first - o.via_second);
    }
    out.push_back(bool_check("presentations.confluence." + p->name(), "every overlap resolves both ways",
                             report.ok(), detail));
  }
  return out;
}

namespace {

std::string ij(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

Element scalar(const GradedMatrix& m, std::size_t r, std::size_t c) { return m(r, c); }

// X^i X^j - sum B^{ij}_{kl} X^l X^k in a presentation containing the coordinates.
CheckList coordinate_exchange(const Presentation& p, const std::string& prefix) {
  const GradedMatrix b = b_matrix(Poly::symbol(Symbol::h));
  CheckList out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element r = free_product(coordinate(p, i), coordinate(p, j));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          r -= free_product(scalar(b, pair(i, j), pair(k, l)), free_product(coordinate(p, l), coordinate(p, k)));
      out.push_back(zero_check(prefix + ".X" + ij(i, j), "X^i X^j = sum B^{ij}_{kl} X^l X^k", p, p.normalize(r)));
    }
  return out;
}

Parity coord_parity(std::size_t i) { return 1 ^ index_parity(i); }
Parity diff_parity(std::size_t i) { return index_parity(i); }

// Xi^i Xi^j = sum (-1)^{X^i + Xi^l} B^{ij}_{kl} Xi^l Xi^k
CheckList differential_exchange(const Presentation& p, const std::string& prefix) {
  const GradedMatrix b = b_matrix(Poly::symbol(Symbol::h));
  CheckList out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element r = free_product(differential(p, i), differential(p, j));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Element v = free_product(scalar(b, pair(i, j), pair(k, l)), free_product(differential(p, l), differential(p, k)));
          r -= (coord_parity(i) ^ diff_parity(l)) ? -v : v;
        }
      out.push_back(zero_check(prefix + ".XiXi" + ij(i, j),
                               "Xi^i Xi^j = sum (-1)^{X^i+Xi^l} B^{ij}_{kl} Xi^l Xi^k", p, p.normalize(r)));
    }
  return out;
}

// X^i Xi^j = sum (-1)^{X^i} B^{ij}_{kl} Xi^l X^k
CheckList mixed_exchange(const Presentation& p, const std::string& prefix) {
  const GradedMatrix b = b_matrix(Poly::symbol(Symbol::h));
  CheckList out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element r = free_product(coordinate(p, i), differential(p, j));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Element v = free_product(scalar(b, pair(i, j), pair(k, l)), free_product(differential(p, l), coordinate(p, k)));
          r -= coord_parity(i) ? -v : v;
        }
      out.push_back(zero_check(prefix + ".XXi" + ij(i, j), "X^i Xi^j = sum (-1)^{X^i} B^{ij}_{kl} Xi^l X^k", p,
                               p.normalize(r)));
    }
  return out;
}

CheckList derivative_exchange(const Presentation& p, const std::string& prefix) {
  const Poly h = Poly::symbol(Symbol::h);
  const GradedMatrix b = b_matrix(h);
  const GradedMatrix binv = scalar_inverse(b);
  CheckList out;
  // d_j X^i = delta_ij + sum B^{il}_{kj} X^k d_l
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      Element r = free_product(derivative(p, j), coordinate(p, i));
      if (i == j) r -= Element(1);
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          r -= free_product(scalar(b, pair(i, l), pair(k, j)), free_product(coordinate(p, k), derivative(p, l)));
      out.push_back(zero_check(prefix + ".dX" + ij(j, i), "d_j X^i = delta_ij + sum B^{il}_{kj} X^k d_l", p,
                               p.normalize(r)));
    }
  // d_j Xi^i = sum (-1)^{X^j} (B^-1)^{ki}_{jl} Xi^l d_k
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      Element r = free_product(derivative(p, j), differential(p, i));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Element v =
              free_product(scalar(binv, pair(k, i), pair(j, l)), free_product(differential(p, l), derivative(p, k)));
          r -= coord_parity(j) ? -v : v;
        }
      out.push_back(zero_check(prefix + ".dXi" + ij(j, i), "d_j Xi^i = sum (-1)^{X^j} (B^-1)^{ki}_{jl} Xi^l d_k", p,
                               p.normalize(r)));
    }
  // d_i d_j = sum B^{kl}_{ij} d_l d_k
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element r = free_product(derivative(p, i), derivative(p, j));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          r -= free_product(scalar(b, pair(k, l), pair(i, j)), free_product(derivative(p, l), derivative(p, k)));
      out.push_back(zero_check(prefix + ".dd" + ij(i, j), "d_i d_j = sum B^{kl}_{ij} d_l d_k", p, p.normalize(r)));
    }
  return out;
}

}  // namespace

CheckList verify_presentation_theorems(const AlgebraSet& set) {
  CheckList out;
  const Presentation& g = *set.group;
  const Presentation::Macros m = group_macros(g);

  out.push_back(zero_check("presentations.group.center.det", "ad - bc + alpha delta + (h/2) ac = 1", g,
                           g.relation("a*d - b*c + alpha*delta + (1/2)*h*a*c = 1")));
  out.push_back(zero_check("presentations.group.center.alpha_delta_beta_gamma", "alpha delta + beta gamma = (h/2)(ac - dc)", g,
                           g.relation("alpha*delta + beta*gamma = (1/2)*h*(a*c - d*c)", m)));
  out.push_back(zero_check("presentations.group.center.e_inverse_right", "e (1 - alpha delta + (h/2) ac) = 1 - (h^2/4) c^2", g,
                           g.relation("e*(1 - alpha*delta + (1/2)*h*a*c) = 1 - (1/4)*h^2*c^2", m)));
  out.push_back(zero_check("presentations.group.center.e_inverse_left", "(1 - alpha delta + (h/2) ac) e = 1 - (h^2/4) c^2", g,
                           g.relation("(1 - alpha*delta + (1/2)*h*a*c)*e = 1 - (1/4)*h^2*c^2", m)));
  out.push_back(bool_check("presentations.group.ebg.parity", "e even; beta, gamma odd",
                           g.parity(group_e(g)) == 0 && g.parity(group_beta(g)) == 1 && g.parity(group_gamma(g)) == 1,
                           "unexpected parity"));
  const auto& derived = group_derived_relations();
  for (std::size_t k = 0; k < derived.size(); ++k)
    out.push_back(zero_check("presentations.group.derived." + std::to_string(k + 1), derived[k], g, g.relation(derived[k], m)));

  append(out, coordinate_exchange(*set.superspace, "presentations.superspace.exchange"));
  append(out, coordinate_exchange(*set.calculus, "presentations.calculus.exchange"));
  append(out, differential_exchange(*set.calculus, "presentations.calculus.exchange"));
  append(out, mixed_exchange(*set.calculus, "presentations.calculus.exchange"));
  append(out, derivative_exchange(*set.calculus, "presentations.calculus.exchange"));
  append(out, coordinate_exchange(*set.forms, "presentations.forms.exchange"));
  append(out, mixed_exchange(*set.forms, "presentations.forms.exchange"));
  append(out, differential_exchange(*set.wedge, "presentations.wedge.exchange"));
  return out;
}

namespace {

CheckList primed_family(const AlgebraSet& set, const Coaction& coact, const std::vector<std::string>& relations,
                        const std::string& family) {
  CheckList out;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const Element rel = set.calculus->free_relation(relations[k]);
    out.push_back(zero_check("covariance." + family + "." + std::to_string(k + 1), relations[k] + " (primed)",
                             *set.combined, coact(rel)));
  }
  return out;
}

}  // namespace

CheckList check_covariance(const AlgebraSet& set) {
  CheckList out;
  const Coaction coact(*set.calculus, *set.combined);
  append(out, primed_family(set, coact, superspace_relations(), "coordinates"));
  append(out, primed_family(set, coact, differential_relations(), "differentials"));
  append(out, primed_family(set, coact, cordiff_relations(), "cordiff"));
  append(out, primed_family(set, coact, dercor_relations(), "dercor"));
  append(out, primed_family(set, coact, derdiff_relations(), "derdiff"));
  append(out, primed_family(set, coact, derder_relations(), "derder"));

  const Coaction on_forms(*set.forms, *set.group_forms);
  const std::array<std::pair<const char*, const char*>, 3> invariants = {
      std::pair{"phi", "x*x - 2*theta1*theta2"},
      std::pair{"rho", "theta1*xi2 + x*eta - theta2*xi1 - (1/2)*h*theta2*xi2"},
      std::pair{"Lambda", "xi1*xi2 + eta*eta - xi2*xi1 - (1/2)*h*xi2*xi2"}};
  for (const auto& [name, text] : invariants) {
    const Element e = set.forms->parse(text);
    const Element image = on_forms(e);
    out.push_back(zero_check(std::string("covariance.invariant.") + name, std::string("coact(") + name + ") = 1 (x) " + name,
                             *set.group_forms, image - set.group_forms->normalize(embed(e, *set.forms, *set.group_forms))));
  }

  for (const Generator& g : set.calculus->table().entries()) {
    const Letter l = set.calculus->table().at(g.name);
    const Element back = counit(*set.combined, coact.image_of(l));
    out.push_back(zero_check("covariance.counit." + g.name, "(eps (x) id) coact = id", *set.combined,
                             back - embed(Element::letter(l), *set.calculus, *set.combined)));
  }
  return out;
}

CheckList check_classical_superspace(const AlgebraSet& set) {
  CheckList out;
  const Presentation& p = *set.superspace;
  const std::map<Symbol, Poly> h0 = {{Symbol::h, Poly(0)}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      const Element xi = coordinate(p, i), xj = coordinate(p, j);
      const Element c = p.supercommutator(xi, xj).substitute(h0);
      // theta^2 vanishes classically; x commutes with itself trivially
      out.push_back(zero_check("presentations.classical." + ij(i, j), "[X^i, X^j} = 0 at h = 0", p, p.normalize(c)));
    }
  out.push_back(zero_check("presentations.classical.theta2_squared", "theta2^2 = 0 at h = 0", p,
                           p.normalize(p.parse("theta2*theta2").substitute(h0))));
  return out;
}

}  // namespace ncsuper
