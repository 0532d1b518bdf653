#include "moduli/ratfunc.hpp"

#include <algorithm>
#include <ostream>

namespace moduli {

RatFunc::RatFunc(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw MathError("rational function: zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  const QPoly g = gcd(num, den);
  QPoly n = divmod(num, g).first;
  QPoly d = divmod(den, g).first;
  const Rational lead = d.leading();
  num_ = n.scaled(lead.inverse());
  den_ = d.scaled(lead.inverse());
}

RatFunc RatFunc::lambda() { return RatFunc(QPoly::x()); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw MathError("rational function is not constant: " + to_string(*this));
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("rational function: 0 is not invertible");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  // coprime stays coprime under powers, den stays monic
  return {power(num_, static_cast<unsigned long>(exponent)), power(den_, static_cast<unsigned long>(exponent)),
          Canonical{}};
}

Rational RatFunc::evaluate(const Rational& t) const {
  const Rational d = den_.evaluate(t);
  if (d.is_zero()) throw MathError("rational function " + to_string(*this) + " has a pole at " + to_string(t));
  return num_.evaluate(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return {b.num_.scaled(a.constant_value()), b.den_, RatFunc::Canonical{}};
  if (b.is_constant()) return {a.num_.scaled(b.constant_value()), a.den_, RatFunc::Canonical{}};
  // cross-cancel before multiplying to keep gcds small
  const QPoly g1 = gcd(a.num_, b.den_);
  const QPoly g2 = gcd(b.num_, a.den_);
  QPoly n = divmod(a.num_, g1).first * divmod(b.num_, g2).first;
  QPoly d = divmod(a.den_, g2).first * divmod(b.den_, g1).first;
  const Rational lead = d.leading();
  return {n.scaled(lead.inverse()), d.scaled(lead.inverse()), RatFunc::Canonical{}};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw MathError("rational function: division by zero");
  return a * b.inverse();
}

RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_, RatFunc::Canonical{}}; }

std::string to_string(const RatFunc& f) {
  const std::string n = to_string(f.num(), "lambda");
  if (f.den().degree() == 0) return n;
  // den is monic, so a single-term den is a bare power of lambda
  const auto nonzero = std::count_if(f.den().coeffs().begin(), f.den().coeffs().end(),
                                     [](const Rational& c) { return !c.is_zero(); });
  const std::string d = to_string(f.den(), "lambda");
  const bool num_simple = n.find_first_of("+-", 1) == std::string::npos;
  return (num_simple ? n : "(" + n + ")") + "/" + (nonzero == 1 ? d : "(" + d + ")");
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den) { return {num, den}; }

}  // namespace moduli
