#include "ncsuper/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "ncsuper/expr.hpp"

namespace ncsuper {

// ---------------------------------------------------------------------------
// GeneratorTable

GeneratorTable::GeneratorTable(std::vector<Generator> entries) : entries_(std::move(entries)) {
  if (entries_.size() > 255) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].parity > 1) throw std::invalid_argument("parity must be 0 or 1: " + entries_[i].name);
    if (entries_[i].weight == 0) throw std::invalid_argument("weight must be positive: " + entries_[i].name);
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[j].name == entries_[i].name)
        throw std::invalid_argument("duplicate generator name: " + entries_[i].name);
  }
}

std::optional<Letter> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter GeneratorTable::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw AlgebraError("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Poly& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

Element Element::word(Word w, const Poly& coeff) {
  Element e;
  e.add(w, coeff);
  return e;
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Poly Element::scalar_part() const { return coefficient(Word{}); }

Poly Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly() : it->second;
}

void Element::add(const Word& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Poly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

Element free_product(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

Element Element::substitute(const std::map<Symbol, Poly>& bindings) const {
  Element out;
  for (const auto& [w, c] : terms_) out.add(w, c.substitute(bindings));
  return out;
}

// ---------------------------------------------------------------------------
// Step budget

namespace {

std::size_t read_budget_env() {
  if (const char* env = std::getenv("NCSUPER_STEP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

std::size_t& budget_slot() {
  static std::size_t budget = read_budget_env();
  return budget;
}

std::string cache_key(const Word& w) { return std::string(w.begin(), w.end()); }

}  // namespace

std::size_t step_budget() { return budget_slot(); }
void set_step_budget(std::size_t steps) { budget_slot() = steps; }

bool ConfluenceReport::ok() const { return failures() == 0; }

std::size_t ConfluenceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(overlaps.begin(), overlaps.end(), [](const OverlapResult& o) { return !o.agree; }));
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::string name, GeneratorTable table, std::vector<RewriteRule> rules)
    : name_(std::move(name)), table_(std::move(table)), rules_(std::move(rules)) {
  index_rules();
  validate();
}

void Presentation::index_rules() {
  const std::size_t n = table_.size();
  pair_rule_.assign(n * n, -1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& lhs = rules_[i].lhs;
    if (lhs.size() != 2)
      throw std::invalid_argument(name_ + ": rule lhs must have exactly two letters (" + rules_[i].source + ")");
    for (Letter l : lhs)
      if (l >= n) throw std::invalid_argument(name_ + ": rule lhs letter out of range");
    int& slot = pair_rule_[lhs[0] * n + lhs[1]];
    if (slot != -1)
      throw std::invalid_argument(name_ + ": two rules share the lhs " + format_word(lhs) + " (" +
                                  rules_[static_cast<std::size_t>(slot)].source + "; " + rules_[i].source + ")");
    slot = static_cast<int>(i);
  }
}

void Presentation::validate() const {
  for (const RewriteRule& r : rules_) {
    const Parity lp = word_parity(r.lhs);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (word_parity(w) != lp)
        throw std::invalid_argument(name_ + ": rule " + format_word(r.lhs) + " changes parity via term " +
                                    format_word(w));
      if (!word_less(w, r.lhs))
        throw std::invalid_argument(name_ + ": rule " + format_word(r.lhs) + " does not decrease term " +
                                    format_word(w));
    }
  }
}

const RewriteRule* Presentation::rule_for(Letter first, Letter second) const {
  const int idx = pair_rule_[first * table_.size() + second];
  return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
}

Parity Presentation::word_parity(const Word& w) const {
  Parity p = 0;
  for (Letter l : w) {
    if (l >= table_.size()) throw AlgebraError(name_ + ": letter out of range");
    p ^= table_[l].parity;
  }
  return p;
}

Parity Presentation::parity(const Element& e) const {
  std::optional<Parity> p;
  for (const auto& [w, c] : e.terms()) {
    const Parity wp = word_parity(w);
    if (p && *p != wp) throw AlgebraError(name_ + ": element is not homogeneous: " + format(e));
    p = wp;
  }
  return p.value_or(0);
}

unsigned Presentation::word_weight(const Word& w) const {
  unsigned total = 0;
  for (Letter l : w) total += table_[l].weight;
  return total;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
  const unsigned wa = word_weight(a);
  const unsigned wb = word_weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

bool Presentation::is_irreducible(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rule_for(w[i], w[i + 1]) != nullptr) return false;
  return true;
}

Element Presentation::normalize_word(const Word& w) const {
  if (is_irreducible(w)) return Element::word(w);
  const std::string key = cache_key(w);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->normal_forms.find(key); it != cache_->normal_forms.end()) return it->second;
  }

  // Largest word first so that like terms meet before they are expanded.
  const auto greater = [this](const Word& a, const Word& b) { return word_less(b, a); };
  std::map<Word, Poly, decltype(greater)> work(greater);
  work.emplace(w, Poly(1));
  Element result;
  std::size_t steps = 0;
  const std::size_t budget = step_budget();

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& cur = node.key();
    const Poly& coeff = node.mapped();
    std::size_t pos = cur.size();
    const RewriteRule* rule = nullptr;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if ((rule = rule_for(cur[i], cur[i + 1])) != nullptr) {
        pos = i;
        break;
      }
    }
    if (rule == nullptr) {
      result.add(cur, coeff);
      continue;
    }
    if (++steps > budget)
      throw StepBudgetExceeded(name_ + ": rewrite step budget of " + std::to_string(budget) +
                               " exceeded while normalizing " + format_word(w));
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + 2), cur.end());
      Poly c = coeff * rc;
      auto [it, inserted] = work.try_emplace(std::move(next), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }

  std::lock_guard lock(cache_->mutex);
  cache_->normal_forms.emplace(key, result);
  return result;
}

Element Presentation::normalize(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    if (is_irreducible(w)) {
      out.add(w, c);
      continue;
    }
    const Element nf = normalize_word(w);
    for (const auto& [nw, nc] : nf.terms()) out.add(nw, c * nc);
  }
  return out;
}

Element Presentation::multiply(const Element& a, const Element& b) const { return normalize(free_product(a, b)); }

Element Presentation::power(const Element& e, unsigned n) const {
  Element out(1);
  for (unsigned i = 0; i < n; ++i) out = multiply(out, e);
  return out;
}

Element Presentation::supercommutator(const Element& a, const Element& b) const {
  const Parity pa = parity(a);
  const Parity pb = parity(b);
  Element ab = multiply(a, b);
  Element ba = multiply(b, a);
  return (pa & pb) ? ab + ba : ab - ba;
}

ConfluenceReport Presentation::check_confluence() const {
  ConfluenceReport report;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& first = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& second = rules_[j].lhs;
      if (first[1] != second[0]) continue;
      OverlapResult o;
      o.overlap = {first[0], first[1], second[1]};
      o.first_rule = i;
      o.second_rule = j;
      o.via_first = normalize(free_product(rules_[i].rhs, Element::letter(second[1])));
      o.via_second = normalize(free_product(Element::letter(first[0]), rules_[j].rhs));
      o.agree = o.via_first == o.via_second;
      report.overlaps.push_back(std::move(o));
    }
  }
  return report;
}

namespace {

struct FreeOps {
  const GeneratorTable& table;
  const Presentation::Macros* macros;

  Element number(const Rational& r, std::size_t) { return Element(Poly(r)); }
  Element identifier(const std::string& name, std::size_t pos) {
    if (auto l = table.find(name)) return Element::letter(*l);
    if (macros != nullptr && *macros)
      if (auto m = (*macros)(name)) return *m;
    try {
      return Element(Poly::symbol(symbol_from_name(name)));
    } catch (const std::invalid_argument&) {
      throw ParseError(pos, "unknown identifier '" + name + "'");
    }
  }
  Element negate(Element v) { return -std::move(v); }
  Element add(Element a, Element b) { return a += b; }
  Element subtract(Element a, Element b) { return a -= b; }
  Element multiply(Element a, Element b, std::size_t) { return free_product(a, b); }
  Element tensor(Element, Element, std::size_t pos) { throw ParseError(pos, "'ox' is not an algebra product"); }
  Element wedge(Element, Element, std::size_t pos) { throw ParseError(pos, "'/\\' is not an algebra product"); }
  Element power(Element v, unsigned n, std::size_t) {
    Element out(1);
    for (unsigned i = 0; i < n; ++i) out = free_product(out, v);
    return out;
  }
};

// Splits "lhs = rhs" and returns lhs - rhs as a free element.
Element relation_element(const GeneratorTable& table, std::string_view text, const Presentation::Macros* macros) {
  FreeOps ops{table, macros};
  const auto eq = text.find('=');
  Element lhs = evaluate<Element>(*parse_expr(text.substr(0, eq)), ops);
  if (eq == std::string_view::npos) return lhs;
  return lhs - evaluate<Element>(*parse_expr(text.substr(eq + 1)), ops);
}

}  // namespace

Presentation Presentation::from_relations(std::string name, GeneratorTable table,
                                          const std::vector<std::string>& relations) {
  // Borrow the order of a rule-free presentation over the same table.
  const Presentation order(name, table, {});
  std::vector<RewriteRule> rules;
  rules.reserve(relations.size());
  for (const std::string& text : relations) {
    const Element rel = relation_element(table, text, nullptr);
    if (rel.is_zero()) throw std::invalid_argument(name + ": trivial relation " + text);
    const Word* lead = nullptr;
    for (const auto& [w, c] : rel.terms())
      if (lead == nullptr || order.word_less(*lead, w)) lead = &w;
    const Poly lead_coeff = rel.coefficient(*lead);
    if (!lead_coeff.is_constant())
      throw std::invalid_argument(name + ": leading coefficient of '" + text + "' is not a rational constant");
    Rational inv = 1 / lead_coeff.constant_term();
    Element rhs = rel;
    rhs.add(*lead, -lead_coeff);
    rhs *= Poly(-inv);
    rules.push_back({*lead, std::move(rhs), text});
  }
  return Presentation(std::move(name), std::move(table), std::move(rules));
}

Element Presentation::parse(std::string_view text, const Macros& macros) const {
  FreeOps ops{table_, &macros};
  return normalize(evaluate<Element>(*parse_expr(text), ops));
}

Element Presentation::relation(std::string_view text, const Macros& macros) const {
  return normalize(relation_element(table_, text, &macros));
}

Element Presentation::free_relation(std::string_view text, const Macros& macros) const {
  return relation_element(table_, text, &macros);
}

Element embed(const Element& e, const Presentation& from, const Presentation& to) {
  std::vector<Letter> map(from.table().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = to.table().at(from.table()[static_cast<Letter>(i)].name);
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word mapped;
    mapped.reserve(w.size());
    for (Letter l : w) mapped.push_back(map[l]);
    out.add(mapped, c);
  }
  return out;
}

std::string Presentation::format_word(const Word& w) const {
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += '*';
    out += l < table_.size() ? table_[l].name : "?";
  }
  return out;
}

std::string format_term(const Poly& coeff, const std::string& word_text, bool first) {
  std::string out;
  const bool single = coeff.terms().size() == 1;
  if (single) {
    const auto& [mono, c] = *coeff.terms().begin();
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    Poly magnitude = Poly::monomial(negative ? Rational(-c) : c, mono);
    std::string mag = magnitude.to_string();
    if (word_text.empty()) return out + mag;
    if (mag == "1") return out + word_text;
    return out + mag + "*" + word_text;
  }
  out += first ? "" : " + ";
  const std::string poly = "(" + coeff.to_string() + ")";
  return out + (word_text.empty() ? poly : poly + "*" + word_text);
}

std::string Presentation::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    out += format_term(it->second, format_word(it->first), first);
    first = false;
  }
  return out;
}

Presentation Presentation::with_rule_rhs(std::size_t index, Element rhs) const {
  std::vector<RewriteRule> rules = rules_;
  rules.at(index).rhs = std::move(rhs);
  return Presentation(name_, table_, std::move(rules));
}

}  // namespace ncsuper
