#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/multipoly.hpp"

namespace moduli {

/// Self-map of P^{n-1}: n forms in n variables, all homogeneous of one
/// degree >= 1 and not all zero. Maps are never reduced modulo a curve.
template <class R>
class ProjMap {
 public:
  explicit ProjMap(std::vector<MultiPoly<R>> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw ContextError("projective map needs at least one component");
    const std::size_t n = comps_.size();
    std::optional<int> degree;
    for (const auto& c : comps_) {
      if (c.nvars() != n) throw ContextError("projective map components must have one variable per coordinate");
      if (c.is_zero()) continue;
      const auto d = c.homogeneous_degree();
      if (!d || (degree && *degree != *d)) throw MathError("projective map components must be forms of one degree");
      degree = d;
    }
    if (!degree) throw MathError("projective map with all components zero");
    if (*degree < 1) throw MathError("projective map of degree 0");
    degree_ = *degree;
  }

  static ProjMap identity(std::size_t n) {
    std::vector<MultiPoly<R>> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(MultiPoly<R>::variable(n, i));
    return ProjMap(std::move(c));
  }

  /// Linear map from a row-major square matrix: component i = sum_j m[i][j] x_j.
  static ProjMap linear(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    std::vector<MultiPoly<R>> c;
    for (const auto& row : m) {
      if (row.size() != n) throw ContextError("linear map matrix must be square");
      MultiPoly<R> p(n);
      for (std::size_t j = 0; j < n; ++j) p += MultiPoly<R>::variable(n, j).scaled(row[j]);
      c.push_back(std::move(p));
    }
    return ProjMap(std::move(c));
  }

  std::size_t size() const { return comps_.size(); }
  int degree() const { return degree_; }
  const MultiPoly<R>& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<MultiPoly<R>>& components() const { return comps_; }

  /// f o this.
  MultiPoly<R> pullback(const MultiPoly<R>& f) const {
    return f.compose(std::span<const MultiPoly<R>>(comps_));
  }

  friend bool operator==(const ProjMap& a, const ProjMap& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<MultiPoly<R>> comps_;
  int degree_ = 0;
};

/// outer o inner, componentwise substitution; degrees multiply.
template <class R>
ProjMap<R> mp_compose(const ProjMap<R>& outer, const ProjMap<R>& inner) {
  if (outer.size() != inner.size()) throw ContextError("cannot compose maps of different arity");
  std::vector<MultiPoly<R>> c;
  c.reserve(outer.size());
  for (const auto& comp : outer.components()) c.push_back(inner.pullback(comp));
  return ProjMap<R>(std::move(c));
}

template <class R>
ProjMap<R> mp_power(const ProjMap<R>& m, unsigned k) {
  ProjMap<R> r = ProjMap<R>::identity(m.size());
  for (unsigned i = 0; i < k; ++i) r = mp_compose(m, r);
  return r;
}

enum class ProjEquality { StrictEqual, EqualOnCurve, NotEqual };

inline const char* to_string(ProjEquality e) {
  switch (e) {
    case ProjEquality::StrictEqual: return "STRICT-EQUAL";
    case ProjEquality::EqualOnCurve: return "EQUAL-ON-CURVE";
    case ProjEquality::NotEqual: return "NOT-EQUAL";
  }
  return "?";
}

template <class R>
struct ProjEqualityResult {
  ProjEquality kind = ProjEquality::NotEqual;
  /// First cross-product m1_i m2_j - m1_j m2_i that is nonzero (NotEqual) and
  /// not divisible by the curve.
  std::optional<std::pair<std::size_t, std::size_t>> where;
  std::optional<MultiPoly<R>> witness;

  bool equal() const { return kind != ProjEquality::NotEqual; }
};

/// Projective equality through cross-products, strictly or modulo one curve form.
template <class R>
ProjEqualityResult<R> proj_equal(const ProjMap<R>& m1, const ProjMap<R>& m2,
                                 const std::optional<MultiPoly<R>>& curve = std::nullopt) {
  if (m1.size() != m2.size()) throw ContextError("cannot compare maps of different arity");
  ProjEqualityResult<R> out;
  out.kind = ProjEquality::StrictEqual;
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = i + 1; j < m1.size(); ++j) {
      MultiPoly<R> cross = m1[i] * m2[j] - m1[j] * m2[i];
      if (cross.is_zero()) continue;
      if constexpr (ExactField<R>) {
        if (curve && mp_divides(*curve, cross)) {
          out.kind = ProjEquality::EqualOnCurve;
          continue;
        }
      }
      out.kind = ProjEquality::NotEqual;
      out.where = std::make_pair(i, j);
      out.witness = std::move(cross);
      return out;
    }
  return out;
}

/// Cofactor q with curve o m = q * curve, or nothing.
template <ExactField F>
std::optional<MultiPoly<F>> map_preserves_curve(const ProjMap<F>& m, const MultiPoly<F>& curve) {
  if (curve.nvars() != m.size()) throw ContextError("curve and map live in different projective spaces");
  if (!curve.is_homogeneous()) throw MathError("curve equation must be a form");
  return mp_divides(curve, m.pullback(curve));
}

template <class R>
std::string to_string(const ProjMap<R>& m, const std::vector<std::string>& names = {}) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != 0) out += " : ";
    out += to_string(m[i], names);
  }
  return out + "]";
}

}  // namespace moduli
