#include "ncsuper/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncsuper {

namespace {

constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {"h", "c0", "c1", "c2"};

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0U);
}

Monomial add_exponents(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kNumSymbols; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

Symbol symbol_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumSymbols; ++i)
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  throw std::invalid_argument("unknown coefficient symbol '" + std::string(name) + "'");
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.emplace(Monomial{}, v);
  }
}

Poly Poly::symbol(Symbol s) {
  Monomial m{};
  m[static_cast<std::size_t>(s)] = 1;
  return monomial(1, m);
}

Poly Poly::monomial(const Rational& coeff, const Monomial& exps) {
  Poly p;
  p.add_term(exps, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Poly::degree_in(Symbol s) const {
  std::size_t deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max<std::size_t>(deg, m[static_cast<std::size_t>(s)]);
  return deg;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(add_exponents(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator-(Poly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::map<Symbol, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Poly factor(c);
    for (const auto& [sym, value] : bindings) {
      const auto idx = static_cast<std::size_t>(sym);
      if (kept[idx] == 0) continue;
      factor *= value.pow(kept[idx]);
      kept[idx] = 0;
    }
    out += factor * monomial(1, kept);
  }
  return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  std::map<Symbol, Poly> by_symbol;
  for (const auto& [name, value] : bindings) by_symbol.emplace(symbol_from_name(name), value);
  return substitute(by_symbol);
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

// Monomial factors joined by '*', e.g. "h^2*c0"; empty for the unit monomial.
std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kSymbolNames[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string mono = monomial_text(m);
    const bool integral = mag.get_den() == 1;
    const std::string coeff = integral ? mag.get_str() : "(" + mag.get_str() + ")";
    if (mono.empty())
      os << coeff;
    else if (mag == 1)
      os << mono;
    else
      os << coeff << '*' << mono;
  }
  return os.str();
}

}  // namespace ncsuper
