#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"

namespace moduli {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) : UniPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(const R& c) {  // NOLINT(google-explicit-constructor)
    if (!moduli::is_zero(c)) coeffs_.push_back(c);
  }
  explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly x() { return UniPoly(std::vector<R>{R(0), R(1)}); }
  static UniPoly monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  R leading() const { return coeffs_.empty() ? R(0) : coeffs_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly scaled(const R& c) const {
    std::vector<R> v = coeffs_;
    for (auto& x : v) x = x * c;
    return UniPoly(std::move(v));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation in any ring that embeds R.
  template <class E>
  E evaluate(const E& point) const {
    E acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + E(coeffs_[i]);
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> v(coeffs_.size() - 1, R(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * R(static_cast<long>(i));
    return UniPoly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && moduli::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// Quotient and remainder; requires a field of coefficients.
template <ExactField F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {UniPoly<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  const F lead = b.leading();
  for (long k = a.degree() - db; k >= 0; --k) {
    const F c = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (is_zero(c)) continue;
    for (long i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k + i)] = rem[static_cast<std::size_t>(k + i)] - c * b.coeff(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

template <ExactField F>
UniPoly<F> monic(const UniPoly<F>& p) {
  if (p.is_zero()) return p;
  return p.scaled(F(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <ExactField F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Finds (c, q) with p = c * q^2 and q monic, or nothing. The square root is
/// solved coefficientwise from the top and then re-expanded.
template <ExactField F>
std::optional<std::pair<F, UniPoly<F>>> perfect_square(const UniPoly<F>& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return std::nullopt;
  const F c = p.leading();
  const UniPoly<F> m = monic(p);
  const auto half = static_cast<std::size_t>(m.degree() / 2);
  // q = x^half + q_{half-1} x^{half-1} + ... ; coefficient of x^{half+k} in q^2 fixes q_k.
  std::vector<F> q(half + 1, F(0));
  q[half] = F(1);
  for (std::size_t step = 1; step <= half; ++step) {
    const std::size_t k = half - step;
    F acc(0);
    for (std::size_t i = k + 1; i <= half; ++i) {
      const std::size_t j = half + k - i;
      if (j > k && j <= half) acc = acc + q[i] * q[j];
    }
    q[k] = (m.coeff(half + k) - acc) / F(2);
  }
  UniPoly<F> root(std::move(q));
  if (root * root != m) return std::nullopt;
  return std::make_pair(c, root);
}

template <class R>
std::string to_string(const UniPoly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const R& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    const bool simple = cs.find_first_of("+-", 1) == std::string::npos;
    bool negative = false;
    if (simple && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (!simple) cs = "(" + cs + ")";
    if (negative) out += out.empty() ? "-" : "-";
    else if (!out.empty()) out += "+";
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

}  // namespace moduli
