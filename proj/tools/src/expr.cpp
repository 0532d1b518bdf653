#include "moduli_cli/expr.hpp"

#include <cctype>
#include <optional>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"

namespace moduli::cli {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(pos_ < text_.size() ? std::string("expected '") + c + "'" : std::string("expected '") + c + "', found end of input");
    ++pos_;
  }

  Expr node(Expr::Kind k, std::size_t at, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.position = at + 1;
    e.args = std::move(args);
    return e;
  }

  moduli::Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "expected an integer" : "expected an integer, found end of input");
    return moduli::Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Expr expr() {
    Expr lhs = term();
    while (peek('+') || peek('-')) {
      const std::size_t at = pos_;
      const auto k = text_[pos_++] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = term();
      lhs = node(k, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek('*') || peek('/')) {
      const std::size_t at = pos_;
      const auto k = text_[pos_++] == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
      Expr rhs = factor();
      lhs = node(k, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr factor() {
    std::optional<std::size_t> minus;
    if (peek('-')) minus = pos_++;
    Expr base = atom();
    if (peek('^')) {
      const std::size_t at = pos_++;
      Expr p = node(Expr::Kind::Pow, at, {std::move(base)});
      p.value = integer();
      base = std::move(p);
    }
    if (minus) return node(Expr::Kind::Negate, *minus, {std::move(base)});
    return base;
  }

  Expr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::Integer, at, {});
      e.value = integer();
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(at, pos_ - at);
      if (word == "lambda") return node(Expr::Kind::Lambda, at, {});
      if (word == "sqrt") {
        expect('(');
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
          negative = true;
          ++pos_;
        }
        skip_space();
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
          fail("sqrt takes an integer radicand; lambda under sqrt is not supported");
        if (peek('(')) fail("sqrt takes an integer literal radicand");
        Expr e = node(Expr::Kind::Sqrt, at, {});
        e.value = integer();
        if (negative) e.value = -e.value;
        if (pos_ < text_.size() && !peek(')')) fail("sqrt takes a single integer radicand");
        expect(')');
        return e;
      }
      pos_ = at;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

struct Evaluator {
  std::optional<moduli::Integer> radicand;

  Tower operator()(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Integer: return Tower(RatFunc(Rational(e.value)));
      case Expr::Kind::Lambda: return Tower(RatFunc::lambda());
      case Expr::Kind::Sqrt: return sqrt_of(e);
      case Expr::Kind::Negate: return -(*this)(e.args[0]);
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
      case Expr::Kind::Div: {
        // left operand first, so errors point at the leftmost offender
        const Tower lhs = (*this)(e.args[0]);
        const Tower rhs = (*this)(e.args[1]);
        if (e.kind == Expr::Kind::Add) return lhs + rhs;
        if (e.kind == Expr::Kind::Sub) return lhs - rhs;
        if (e.kind == Expr::Kind::Mul) return lhs * rhs;
        if (is_zero(rhs)) throw ParseError("division by zero", e.position);
        return lhs / rhs;
      }
      case Expr::Kind::Pow: {
        if (e.value > kMaxExponent) throw ParseError("exponent larger than " + std::to_string(kMaxExponent), e.position);
        return power((*this)(e.args[0]), e.value.get_ui());
      }
    }
    throw std::logic_error("unhandled expression node");
  }

  Tower sqrt_of(const Expr& e) {
    if (e.value == 0) return Tower(RatFunc(0));
    const auto [k, d] = squarefree_decomposition(e.value);
    if (d == 1) return Tower(RatFunc(Rational(k)));
    if (radicand && *radicand != d) throw ParseError("mixed radicals unsupported", e.position);
    radicand = d;
    return Tower(RatFunc(0), RatFunc(Rational(k)), RatFunc(Rational(d)));
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Tower evaluate(const Expr& e) { return Evaluator{}(e); }

ParsedElement parse_element(std::string_view text) {
  const Element value = downcast(evaluate(parse_expr(text)));
  return {value, field_tag(value), field_description(value)};
}

}  // namespace moduli::cli
