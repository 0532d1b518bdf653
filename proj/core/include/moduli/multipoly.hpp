#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"

namespace moduli {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lexicographic order, largest first. Only division steps depend on it.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in a fixed number of variables. Zero coefficients are
/// never stored.
template <class R>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, R, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const R& c) { return monomial(nvars, Exponent(nvars, 0), c); }
  static MultiPoly monomial(std::size_t nvars, Exponent e, const R& c) {
    if (e.size() != nvars) throw ContextError("monomial exponent length differs from variable count");
    MultiPoly p(nvars);
    if (!moduli::is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t index) {
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(nvars, std::move(e), R(1));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  /// Common degree when every monomial has the same total degree.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  const std::pair<const Exponent, R>& leading_term() const { return *terms_.begin(); }

  R coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(const Exponent& e, const R& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const R& c) const {
    MultiPoly r(nvars_);
    if (is_zero_value(c)) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(nvars_, R(1));
    MultiPoly b = *this;
    while (n != 0) {
      if ((n & 1U) != 0) result = result * b;
      n >>= 1U;
      if (n != 0) b = b * b;
    }
    return result;
  }

  /// Substitutes subs[i] for variable i; all substitutes share one variable count.
  MultiPoly compose(std::span<const MultiPoly> subs) const {
    if (subs.size() != nvars_) throw ContextError("composition arity mismatch");
    const std::size_t out_vars = subs.empty() ? 0 : subs.front().nvars();
    for (const auto& s : subs)
      if (s.nvars() != out_vars) throw ContextError("composition substitutes disagree on variable count");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    auto power_of = [&](std::size_t var, int k) -> const MultiPoly& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(out_vars, R(1)));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * subs[var]);
      return cache[static_cast<std::size_t>(k)];
    };
    MultiPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] != 0) t = t * power_of(i, e[i]);
      r += t;
    }
    return r;
  }

  /// Evaluates at a point of any ring that embeds R.
  template <class E>
  E evaluate(std::span<const E> point) const {
    if (point.size() != nvars_) throw ContextError("evaluation point has wrong dimension");
    E acc(0);
    for (const auto& [e, c] : terms_) {
      E t(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] != 0) t = t * power(point[i], static_cast<unsigned long>(e[i]));
      acc = acc + t;
    }
    return acc;
  }

  /// Applies f to every coefficient, landing in another ring.
  template <class S, class Fn>
  MultiPoly<S> map_coefficients(Fn&& f) const {
    MultiPoly<S> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_value(const R& c) { return moduli::is_zero(c); }
  void check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw ContextError("polynomials in different variable counts");
  }

  std::size_t nvars_;
  Terms terms_;
};

/// Exact single-divisor test: q with f = q*g, or nothing. One divisor is its
/// own Groebner basis, so a nonzero remainder at any step decides
/// non-membership in (g).
template <ExactField F>
std::optional<MultiPoly<F>> mp_divides(const MultiPoly<F>& g, const MultiPoly<F>& f) {
  if (g.is_zero()) throw MathError("division by the zero polynomial");
  if (g.nvars() != f.nvars()) throw ContextError("polynomials in different variable counts");
  const auto& [lead_exp, lead_coeff] = g.leading_term();
  const std::size_t n = g.nvars();
  MultiPoly<F> q(n);
  MultiPoly<F> rest = f;
  Exponent shift(n);
  while (!rest.is_zero()) {
    const auto& [e, c] = rest.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = e[i] - lead_exp[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const auto term = MultiPoly<F>::monomial(n, shift, c / lead_coeff);
    q += term;
    rest -= term * g;
  }
  return q;
}

/// d p / d x_var.
template <class R>
MultiPoly<R> partial_derivative(const MultiPoly<R>& p, std::size_t var) {
  MultiPoly<R> r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(var) == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * R(static_cast<long>(e[var])));
  }
  return r;
}

/// Rendering with the given variable names (x, y, z, ... by default).
template <class R>
std::string to_string(const MultiPoly<R>& p, const std::vector<std::string>& names = {}) {
  if (p.is_zero()) return "0";
  auto name = [&](std::size_t i) {
    if (i < names.size()) return names[i];
    static const char* defaults[] = {"x", "y", "z", "w"};
    return p.nvars() <= 4 ? std::string(defaults[i]) : "x" + std::to_string(i + 1);
  };
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = to_string(c);
    const bool simple = cs.find_first_of("+-", 1) == std::string::npos;
    bool negative = false;
    if (simple && cs.front() == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (!simple) cs = "(" + cs + ")";
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

}  // namespace moduli
