#pragma once

#include <array>
#include <string>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"

namespace moduli {

/// Point (p:q) of P^1, stored as (z:1) when finite and (1:0) for infinity.
template <ExactField F>
class ProjPoint {
 public:
  ProjPoint(const F& p, const F& q) {
    if (is_zero(q)) {
      if (is_zero(p)) throw MathError("(0:0) is not a projective point");
      x_ = F(1);
      y_ = F(0);
    } else {
      x_ = p / q;
      y_ = F(1);
    }
  }
  static ProjPoint finite(const F& z) { return ProjPoint(z, F(1)); }
  static ProjPoint infinity() { return ProjPoint(F(1), F(0)); }

  bool is_infinity() const { return is_zero(y_); }
  /// Affine value; throws MathError at infinity.
  const F& value() const {
    if (is_infinity()) throw MathError("the point at infinity has no affine value");
    return x_;
  }
  const F& x() const { return x_; }
  const F& y() const { return y_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  F x_;
  F y_;
};

template <ExactField F>
std::string to_string(const ProjPoint<F>& p) {
  return p.is_infinity() ? std::string("infinity") : to_string(p.value());
}

/// z -> (a z + b) / (c z + d), a matrix up to nonzero scalar.
template <ExactField F>
class Moebius {
 public:
  Moebius(F a, F b, F c, F d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (is_zero(det())) throw MathError("Moebius matrix is singular");
  }
  static Moebius identity() { return Moebius(F(1), F(0), F(0), F(1)); }

  F det() const { return a_ * d_ - b_ * c_; }
  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const F& c() const { return c_; }
  const F& d() const { return d_; }

  ProjPoint<F> operator()(const ProjPoint<F>& z) const {
    return ProjPoint<F>(a_ * z.x() + b_ * z.y(), c_ * z.x() + d_ * z.y());
  }
  ProjPoint<F> operator()(const F& z) const { return (*this)(ProjPoint<F>::finite(z)); }

  /// this o other
  friend Moebius operator*(const Moebius& m, const Moebius& n) {
    return Moebius(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_, m.c_ * n.a_ + m.d_ * n.c_,
                   m.c_ * n.b_ + m.d_ * n.d_);
  }
  Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }

  /// Equality as projective transformations: proportional matrices.
  friend bool operator==(const Moebius& m, const Moebius& n) {
    return is_zero(m.a_ * n.b_ - m.b_ * n.a_) && is_zero(m.a_ * n.c_ - m.c_ * n.a_) &&
           is_zero(m.a_ * n.d_ - m.d_ * n.a_) && is_zero(m.b_ * n.c_ - m.c_ * n.b_) &&
           is_zero(m.b_ * n.d_ - m.d_ * n.b_) && is_zero(m.c_ * n.d_ - m.d_ * n.c_);
  }

 private:
  F a_, b_, c_, d_;
};

template <ExactField F>
std::string to_string(const Moebius<F>& m) {
  return "z -> (" + to_string(m.a()) + "*z+" + to_string(m.b()) + ")/(" + to_string(m.c()) + "*z+" +
         to_string(m.d()) + ")";
}

/// The six maps permuting {0, 1, infinity}, in the order
/// z, 1/z, z/(z-1), (z-1)/z, 1/(1-z), 1-z.
template <ExactField F>
std::array<Moebius<F>, 6> anharmonic_group() {
  const F o(1), z(0), m(-1);
  return {Moebius<F>(o, z, z, o), Moebius<F>(z, o, o, z), Moebius<F>(o, z, o, m),
          Moebius<F>(o, m, o, z), Moebius<F>(z, o, m, o), Moebius<F>(m, o, z, o)};
}

template <ExactField F>
void require_not_zero_or_one(const F& lambda, const char* what) {
  if (is_zero(lambda) || lambda == F(1)) throw MathError(std::string(what) + ": lambda must avoid 0 and 1");
}

/// The anharmonic orbit of lambda, duplicates merged by exact equality, in
/// first-appearance order.
template <ExactField F>
std::vector<F> anharmonic_orbit(const F& lambda) {
  require_not_zero_or_one(lambda, "anharmonic orbit");
  std::vector<F> out;
  for (const auto& m : anharmonic_group<F>()) {
    const F v = m(lambda).value();
    bool seen = false;
    for (const auto& u : out) seen = seen || u == v;
    if (!seen) out.push_back(v);
  }
  return out;
}

/// (1 - lambda + lambda^2)^3 / (lambda^2 (lambda - 1)^2).
template <ExactField F>
F j_invariant(const F& lambda) {
  require_not_zero_or_one(lambda, "j-invariant");
  const F q = F(1) - lambda + lambda * lambda;
  const F l1 = lambda - F(1);
  return q * q * q / (lambda * lambda * l1 * l1);
}

/// The Moebius map sending p0 -> 0, p1 -> infinity, p2 -> 1.
template <ExactField F>
Moebius<F> normalizing_map(const ProjPoint<F>& p0, const ProjPoint<F>& p1, const ProjPoint<F>& p2) {
  auto wedge = [](const ProjPoint<F>& u, const ProjPoint<F>& v) { return u.x() * v.y() - u.y() * v.x(); };
  const F k1 = wedge(p2, p1);
  const F k2 = wedge(p2, p0);
  if (is_zero(k1) || is_zero(k2) || is_zero(wedge(p0, p1)))
    throw MathError("normalizing map needs three distinct points");
  // M(z) = [(z ^ p0) * k1 : (z ^ p1) * k2]
  return Moebius<F>(p0.y() * k1, -p0.x() * k1, p1.y() * k2, -p1.x() * k2);
}

/// The involution z -> z / (z - 1).
template <ExactField F>
Moebius<F> eta() {
  return Moebius<F>(F(1), F(0), F(1), F(-1));
}

template <ExactField F>
F eta_value(const F& z) {
  return eta<F>()(z).value();
}

/// z^2 / (z - 1), the quotient by eta.
template <ExactField F>
F F_value(const F& z) {
  const F den = z - F(1);
  if (is_zero(den)) throw MathError("F(z) = z^2/(z-1) has a pole at z = 1");
  return z * z / den;
}

}  // namespace moduli
