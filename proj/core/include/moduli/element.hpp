#pragma once

#include <optional>
#include <string>
#include <variant>

#include "moduli/quadext.hpp"
#include "moduli/ratfunc.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// Q(sqrt d)(lambda) as a quadratic extension of Q(lambda) with constant D.
/// The same type carries lambda-dependent extensions such as s^2 = lambda^2-4.
using Tower = QuadExt<RatFunc>;

enum class FieldTag { Rational, Quadratic, RationalFunction, Tower };

const char* to_string(FieldTag t);

/// A scalar from one of the four supported fields.
using Element = std::variant<Rational, QuadNumber, RatFunc, Tower>;

FieldTag field_tag(const Element& e);

/// "Q", "Q(sqrt(-7))", "Q(lambda)" or "Q(sqrt(2))(lambda)".
std::string field_description(const Element& e);

/// Parseable canonical form.
std::string to_string(const Element& e);

/// Rational u + v*sqrt(d) over Q(lambda) with v = 0 or d a squarefree
/// integer, moved to the smallest of the four fields that holds it.
Element downcast(const Tower& t);

/// Embeds any element into the tower (QuadNumbers keep their radicand).
Tower to_tower(const Element& e);

/// Monic minimal polynomial over Q, rendered in X: "X-a" for rationals,
/// "X^2-2aX+(a^2-b^2 d)" otherwise.
std::string minimal_polynomial(const QuadNumber& x);

/// Whether the QuadNumber lies in Q.
inline bool is_rational(const QuadNumber& x) { return x.in_base(); }

}  // namespace moduli
