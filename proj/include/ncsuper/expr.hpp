#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncsuper/poly.hpp"

namespace ncsuper {

/// Lexical or syntax error; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression tree for the text grammar:
///
///   sum     := tensor (('+' | '-') tensor)*
///   tensor  := wedge ('ox' wedge)*
///   wedge   := product ('/\' product)*
///   product := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | integer '/' integer | identifier | '(' sum ')'
struct Expr {
  enum class Kind { number, identifier, negate, add, subtract, multiply, tensor, wedge, power };

  Kind kind = Kind::number;
  std::size_t position = 0;
  Rational number;
  std::string name;
  unsigned exponent = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

std::unique_ptr<Expr> parse_expr(std::string_view text);

/// Post-order evaluation. `Ops` supplies:
///   number(Rational, pos), identifier(name, pos), negate(v), add(a, b),
///   subtract(a, b), multiply(a, b, pos), tensor(a, b, pos), wedge(a, b, pos),
///   power(v, n, pos).
template <class Value, class Ops>
Value evaluate(const Expr& e, Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::number:
      return ops.number(e.number, e.position);
    case Expr::Kind::identifier:
      return ops.identifier(e.name, e.position);
    case Expr::Kind::negate:
      return ops.negate(evaluate<Value>(*e.lhs, ops));
    case Expr::Kind::power:
      return ops.power(evaluate<Value>(*e.lhs, ops), e.exponent, e.position);
    default:
      break;
  }
  Value a = evaluate<Value>(*e.lhs, ops);
  Value b = evaluate<Value>(*e.rhs, ops);
  switch (e.kind) {
    case Expr::Kind::add:
      return ops.add(std::move(a), std::move(b));
    case Expr::Kind::subtract:
      return ops.subtract(std::move(a), std::move(b));
    case Expr::Kind::multiply:
      return ops.multiply(std::move(a), std::move(b), e.position);
    case Expr::Kind::tensor:
      return ops.tensor(std::move(a), std::move(b), e.position);
    default:
      return ops.wedge(std::move(a), std::move(b), e.position);
  }
}

}  // namespace ncsuper
