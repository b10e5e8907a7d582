#include "ncsuper/expr.hpp"

#include <cctype>
#include <vector>

namespace ncsuper {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class Tok { integer, rational, identifier, plus, minus, star, caret, wedge, tensor, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto digits_from = [&](std::size_t j) {
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      i = digits_from(i);
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        i = digits_from(i + 1);
        out.push_back({Tok::rational, start, std::string(s.substr(start, i - start))});
      } else {
        out.push_back({Tok::integer, start, std::string(s.substr(start, i - start))});
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      out.push_back({word == "ox" ? Tok::tensor : Tok::identifier, start, std::move(word)});
      continue;
    }
    switch (ch) {
      case '+': out.push_back({Tok::plus, i++, "+"}); break;
      case '-': out.push_back({Tok::minus, i++, "-"}); break;
      case '*': out.push_back({Tok::star, i++, "*"}); break;
      case '^': out.push_back({Tok::caret, i++, "^"}); break;
      case '(': out.push_back({Tok::lparen, i++, "("}); break;
      case ')': out.push_back({Tok::rparen, i++, ")"}); break;
      case '/':
        if (i + 1 < s.size() && s[i + 1] == '\\') {
          out.push_back({Tok::wedge, i, "/\\"});
          i += 2;
          break;
        }
        throw ParseError(i, "'/' is only allowed inside a rational literal p/q or as '/\\'");
      default:
        throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::unique_ptr<Expr> parse() {
    auto e = sum();
    if (peek().kind != Tok::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& next() { return toks_[idx_++]; }

  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> l,
                                      std::unique_ptr<Expr> r) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = pos;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> sum() {
    auto e = tensor();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      e = binary(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::subtract, op.pos, std::move(e), tensor());
    }
    return e;
  }

  std::unique_ptr<Expr> tensor() {
    auto e = wedge();
    while (peek().kind == Tok::tensor) {
      const std::size_t pos = next().pos;
      e = binary(Expr::Kind::tensor, pos, std::move(e), wedge());
    }
    return e;
  }

  std::unique_ptr<Expr> wedge() {
    auto e = product();
    while (peek().kind == Tok::wedge) {
      const std::size_t pos = next().pos;
      e = binary(Expr::Kind::wedge, pos, std::move(e), product());
    }
    return e;
  }

  std::unique_ptr<Expr> product() {
    auto e = unary();
    while (peek().kind == Tok::star) {
      const std::size_t pos = next().pos;
      e = binary(Expr::Kind::multiply, pos, std::move(e), unary());
    }
    return e;
  }

  std::unique_ptr<Expr> unary() {
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    if (peek().kind == Tok::minus) {
      const std::size_t pos = next().pos;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::negate;
      e->position = pos;
      e->lhs = unary();
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    if (peek().kind != Tok::caret) return base;
    const std::size_t pos = next().pos;
    if (peek().kind != Tok::integer) throw ParseError(peek().pos, "exponent must be a nonnegative integer");
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::power;
    e->position = pos;
    e->exponent = static_cast<unsigned>(std::stoul(next().text));
    e->lhs = std::move(base);
    return e;
  }

  std::unique_ptr<Expr> primary() {
    const Token& t = next();
    auto e = std::make_unique<Expr>();
    e->position = t.pos;
    switch (t.kind) {
      case Tok::integer:
      case Tok::rational:
        e->kind = Expr::Kind::number;
        if (const auto slash = t.text.find('/');
            slash != std::string::npos && t.text.find_first_not_of('0', slash + 1) == std::string::npos)
          throw ParseError(t.pos, "zero denominator");
        e->number = Rational(t.text);
        e->number.canonicalize();
        return e;
      case Tok::identifier:
        e->kind = Expr::Kind::identifier;
        e->name = t.text;
        return e;
      case Tok::lparen: {
        auto inner = sum();
        if (peek().kind != Tok::rparen) throw ParseError(peek().pos, "expected ')'");
        next();
        return inner;
      }
      case Tok::end:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace ncsuper
