#pragma once

#include <iosfwd>
#include <string>

#include "moduli/rational.hpp"
#include "moduli/unipoly.hpp"

namespace moduli {

using QPoly = UniPoly<Rational>;

/// Element of Q(lambda): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const QPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  /// Cancels the gcd and makes den monic. Throws MathError on den == 0.
  RatFunc(const QPoly& num, const QPoly& den);

  /// The transcendental lambda.
  static RatFunc lambda();

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws MathError otherwise.
  Rational constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(long exponent) const;

  /// Substitutes lambda = t; throws MathError at a pole.
  Rational evaluate(const Rational& t) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Canonical {};
  RatFunc(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

/// Parseable form over the symbol `lambda`, e.g. "(lambda^2-1)/(lambda+2)".
std::string to_string(const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Same canonicalization as the constructor, as a free function.
RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den);

}  // namespace moduli
