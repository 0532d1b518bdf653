#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"
#include "moduli/rational.hpp"

namespace moduli {

/// u + v*s in K[s]/(s^2 - D).
///
/// D is carried by the value. Elements with v = 0 may carry no D at all and
/// then combine with any context; combining two values whose D differ throws
/// ContextError. D is not required to be a non-square: with a square D the
/// quotient is still a commutative ring and equality stays exact, only
/// inversion of zero divisors fails.
template <class K>
class QuadExt {
 public:
  QuadExt() : u_(0), v_(0) {}

  template <class G>
    requires(std::is_constructible_v<K, const G&> && !std::is_same_v<std::remove_cvref_t<G>, QuadExt>)
  QuadExt(const G& g) : u_(g), v_(0) {}  // NOLINT(google-explicit-constructor)

  QuadExt(K u, K v, K D) : u_(std::move(u)), v_(std::move(v)), D_(std::move(D)) {}

  /// The generator s with s^2 = D.
  static QuadExt generator(const K& D) { return QuadExt(K(0), K(1), D); }

  const K& u() const { return u_; }
  const K& v() const { return v_; }
  const std::optional<K>& D() const { return D_; }
  bool in_base() const { return is_zero(v_); }

  QuadExt conj() const {
    QuadExt r = *this;
    r.v_ = -r.v_;
    return r;
  }
  /// u^2 - v^2 D, multiplicative.
  K norm() const { return D_ ? u_ * u_ - v_ * v_ * *D_ : u_ * u_; }
  K trace() const { return u_ + u_; }

  QuadExt inverse() const;

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.u_ + b.u_, a.v_ + b.v_, merge(a, b));
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.u_ - b.u_, a.v_ - b.v_, merge(a, b));
  }
  friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.u_, -a.v_, a.D_); }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    auto D = merge(a, b);
    K u = a.u_ * b.u_;
    if (D) u = u + a.v_ * b.v_ * *D;
    return QuadExt(std::move(u), a.u_ * b.v_ + a.v_ * b.u_, std::move(D));
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.u_ != b.u_ || a.v_ != b.v_) return false;
    if (is_zero(a.v_)) return true;
    if (a.D_ && b.D_ && *a.D_ != *b.D_) throw ContextError("comparing elements of different quadratic extensions");
    return true;
  }

 private:
  QuadExt(K u, K v, std::optional<K> D) : u_(std::move(u)), v_(std::move(v)), D_(std::move(D)) {}

  static std::optional<K> merge(const QuadExt& a, const QuadExt& b) {
    if (!a.D_) return b.D_;
    if (!b.D_) return a.D_;
    if (*a.D_ != *b.D_)
      throw ContextError("mismatched quadratic extensions: s^2=" + to_string(*a.D_) + " vs s^2=" + to_string(*b.D_));
    return a.D_;
  }

  K u_;
  K v_;
  std::optional<K> D_;
};

template <class K>
QuadExt<K> QuadExt<K>::inverse() const {
  const K n = norm();
  if (is_zero(n)) throw MathError("quadratic extension element is not invertible (zero norm)");
  return QuadExt(u_ / n, -v_ / n, D_);
}

/// "u+v*s"-style rendering; `gen` names the generator.
template <class K>
std::string to_string(const QuadExt<K>& x, const std::string& gen) {
  auto wrap = [](const std::string& t) {
    return t.find_first_of("+-", 1) == std::string::npos ? t : "(" + t + ")";
  };
  if (is_zero(x.v())) return to_string(x.u());
  std::string vs = to_string(x.v());
  std::string out = is_zero(x.u()) ? "" : to_string(x.u());
  if (vs == "1") return out.empty() ? gen : out + "+" + gen;
  if (vs == "-1") return out + "-" + gen;
  if (vs.front() == '-' && vs.find_first_of("+-", 1) == std::string::npos)
    return out + "-" + vs.substr(1) + "*" + gen;
  return out + (out.empty() ? "" : "+") + wrap(vs) + "*" + gen;
}

template <class K>
std::string to_string(const QuadExt<K>& x) {
  return to_string(x, std::string("s"));
}

/// Element of Q(sqrt d), d a squarefree integer other than 0 and 1.
using QuadNumber = QuadExt<Rational>;

/// a + b*sqrt(d); throws MathError unless d is squarefree and d not in {0, 1}.
inline QuadNumber make_quad_number(const Rational& a, const Rational& b, const Integer& d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) throw MathError("sqrt(" + d.get_str() + ") does not define a quadratic field");
  return QuadNumber(a, b, Rational(d));
}

/// Radicand d of a QuadNumber carrying one, else nothing.
inline std::optional<Integer> radicand(const QuadNumber& x) {
  if (!x.D()) return std::nullopt;
  return x.D()->num();
}

/// Parseable rendering of a QuadNumber, a + b*sqrt(d).
inline std::string to_parseable(const QuadNumber& x) {
  if (!x.D() || x.in_base()) return to_string(x.u());
  return to_string(x, "sqrt(" + to_string(*x.D()) + ")");
}

}  // namespace moduli
