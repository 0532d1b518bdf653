#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace moduli {

using Integer = mpz_class;

/// Arbitrary-precision rational number in canonical form: the numerator and
/// denominator are coprime, the denominator is positive and zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws MathError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" in base 10.
  static Rational parse(const std::string& text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::string to_string(const Rational& q);
std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Makes n/d in lowest terms; throws MathError on d == 0.
Rational make_rational(long n, long d);

/// Writes n = k^2 * d with d squarefree (sign carried by d). n must be nonzero.
/// Trial division is exact for |n| below 10^18; beyond that a cofactor with
/// two large prime factors is assumed squarefree unless it is a perfect square.
std::pair<Integer, Integer> squarefree_decomposition(const Integer& n);

/// Writes q = k^2 * d with k rational and d a squarefree integer. q nonzero.
std::pair<Rational, Integer> rational_square_class(const Rational& q);

bool is_squarefree(const Integer& n);

}  // namespace moduli
