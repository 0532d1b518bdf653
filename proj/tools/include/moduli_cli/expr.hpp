#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/element.hpp"

namespace moduli::cli {

/// Syntax or evaluation error; `position` is a 1-based column into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression tree. expr := term (('+'|'-') term)*, term := factor
/// (('*'|'/') factor)*, factor := '-'? atom ('^' int)?, atom := int |
/// 'lambda' | 'sqrt' '(' int ')' | '(' expr ')'. The sqrt radicand may carry
/// a sign. Unary minus applies to the power: -2^2 is -4.
struct Expr {
  enum class Kind { Integer, Lambda, Sqrt, Negate, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Integer;
  moduli::Integer value;  // literal, radicand or exponent
  std::vector<Expr> args;
  std::size_t position = 1;
};

Expr parse_expr(std::string_view text);

/// Evaluates in Q(sqrt d)(lambda). At most one squarefree radicand may occur;
/// dividing by something that evaluates to zero is rejected.
Tower evaluate(const Expr& e);

struct ParsedElement {
  Element value;
  FieldTag tag;
  std::string field;
};

/// parse_expr, evaluate, then move to the smallest field holding the value.
ParsedElement parse_element(std::string_view text);

}  // namespace moduli::cli
