#include "moduli/element.hpp"

#include <stdexcept>

namespace moduli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string radical_name(const Rational& D) { return "sqrt(" + to_string(D) + ")"; }

}  // namespace

const char* to_string(FieldTag t) {
  switch (t) {
    case FieldTag::Rational: return "rational";
    case FieldTag::Quadratic: return "quadratic";
    case FieldTag::RationalFunction: return "rational-function";
    case FieldTag::Tower: return "tower";
  }
  return "?";
}

FieldTag field_tag(const Element& e) {
  return std::visit(Overloaded{[](const Rational&) { return FieldTag::Rational; },
                               [](const QuadNumber&) { return FieldTag::Quadratic; },
                               [](const RatFunc&) { return FieldTag::RationalFunction; },
                               [](const Tower&) { return FieldTag::Tower; }},
                    e);
}

std::string field_description(const Element& e) {
  return std::visit(
      Overloaded{[](const Rational&) { return std::string("Q"); },
                 [](const QuadNumber& x) {
                   return x.D() ? "Q(" + radical_name(*x.D()) + ")" : std::string("Q");
                 },
                 [](const RatFunc&) { return std::string("Q(lambda)"); },
                 [](const Tower& t) {
                   if (!t.D()) return std::string("Q(lambda)");
                   if (t.D()->is_constant()) return "Q(" + radical_name(t.D()->constant_value()) + ")(lambda)";
                   return "Q(lambda)(s), s^2=" + to_string(*t.D());
                 }},
      e);
}

std::string to_string(const Element& e) {
  return std::visit(Overloaded{[](const Rational& q) { return to_string(q); },
                               [](const QuadNumber& x) { return to_parseable(x); },
                               [](const RatFunc& f) { return to_string(f); },
                               [](const Tower& t) {
                                 if (!t.D() || t.in_base()) return to_string(t.u());
                                 if (t.D()->is_constant())
                                   return to_string(t, radical_name(t.D()->constant_value()));
                                 return to_string(t);
                               }},
                    e);
}

Element downcast(const Tower& t) {
  if (t.in_base()) {
    if (t.u().is_constant()) return t.u().constant_value();
    return t.u();
  }
  if (!t.D() || !t.D()->is_constant()) return t;
  const Rational d = t.D()->constant_value();
  if (t.u().is_constant() && t.v().is_constant()) return QuadNumber(t.u().constant_value(), t.v().constant_value(), d);
  return t;
}

Tower to_tower(const Element& e) {
  return std::visit(Overloaded{[](const Rational& q) { return Tower(RatFunc(q)); },
                               [](const QuadNumber& x) {
                                 if (!x.D()) return Tower(RatFunc(x.u()));
                                 return Tower(RatFunc(x.u()), RatFunc(x.v()), RatFunc(*x.D()));
                               },
                               [](const RatFunc& f) { return Tower(f); },
                               [](const Tower& t) { return t; }},
                    e);
}

std::string minimal_polynomial(const QuadNumber& x) {
  auto term = [](const Rational& c, const std::string& mono) {
    if (c.is_zero()) return std::string();
    std::string body = mono.empty() ? to_string(c.sign() < 0 ? -c : c)
                                    : ((c == 1 || c == -1) ? mono : to_string(c.sign() < 0 ? -c : c) + "*" + mono);
    return std::string(c.sign() < 0 ? "-" : "+") + body;
  };
  if (x.in_base()) return "X" + term(-x.u(), "");
  const Rational trace = x.trace();
  const Rational norm = x.norm();
  return "X^2" + term(-trace, "X") + term(norm, "");
}

}  // namespace moduli
