#include "moduli/rational.hpp"

#include <ostream>

#include "moduli/errors.hpp"

namespace moduli {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text, 10));
    return Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("rational: 0 is not invertible");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string to_string(const Rational& q) { return q.raw().get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

Rational make_rational(long n, long d) { return Rational(Integer(n), Integer(d)); }

std::pair<Integer, Integer> squarefree_decomposition(const Integer& n) {
  if (n == 0) throw MathError("squarefree decomposition of 0");
  Integer rest = abs(n);
  Integer k = 1;
  Integer d = sgn(n);
  for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
    const Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        rest /= p;
        k *= p;
      } else {
        d *= p;
      }
    }
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      k *= root;
    } else {
      d *= rest;
    }
  }
  return {k, d};
}

std::pair<Rational, Integer> rational_square_class(const Rational& q) {
  if (q.is_zero()) throw MathError("square class of 0");
  // q = p/r = (p*r) / r^2
  const auto [k, d] = squarefree_decomposition(q.num() * q.den());
  return {Rational(k, q.den()), d};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  return squarefree_decomposition(n).first == 1;
}

}  // namespace moduli
