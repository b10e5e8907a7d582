#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncsuper {

using Rational = mpq_class;

/// Commuting symbols of the coefficient ring Q[h, c0, c1, c2].
enum class Symbol : std::uint8_t { h = 0, c0 = 1, c1 = 2, c2 = 3 };

inline constexpr std::size_t kNumSymbols = 4;

std::string_view symbol_name(Symbol s);

/// Throws std::invalid_argument for anything outside {h, c0, c1, c2}.
Symbol symbol_from_name(std::string_view name);

using Monomial = std::array<std::uint16_t, kNumSymbols>;

/// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals in h, c0, c1, c2.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is mathematical equality.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Poly symbol(Symbol s);
  static Poly monomial(const Rational& coeff, const Monomial& exps);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 if absent).
  Rational constant_term() const;
  std::size_t degree_in(Symbol s) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(Poly p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned exponent) const;

  /// Evaluates the symbols present in `bindings`; the rest survive.
  Poly substitute(const std::map<Symbol, Poly>& bindings) const;
  /// Name-keyed form, for bindings written in suite definitions.
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  /// Canonical text, e.g. "h^2 - 2*c0 + 1/2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// Text of a rational: "3", "-1/2".
std::string rational_to_string(const Rational& r);

}  // namespace ncsuper
