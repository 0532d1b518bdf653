#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/field.hpp"
#include "moduli/unipoly.hpp"

namespace moduli {

/// Residue class in K[t]/(t^a - 1), the formal stand-in for a primitive a-th
/// root of unity. a = 0 marks a context-free constant.
template <class K>
class CycloRing {
 public:
  CycloRing() = default;
  template <class G>
    requires(std::is_constructible_v<K, const G&> && !std::is_same_v<std::remove_cvref_t<G>, CycloRing>)
  CycloRing(const G& c) : residue_(K(c)) {}  // NOLINT(google-explicit-constructor)

  /// p mod t^a - 1; throws MathError for a < 2.
  static CycloRing reduce(const UniPoly<K>& p, int a) {
    if (a < 2) throw MathError("cyclotomic modulus must be at least 2");
    std::vector<K> r(static_cast<std::size_t>(a), K(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r[i % static_cast<std::size_t>(a)] += p.coeffs()[i];
    CycloRing out;
    out.residue_ = UniPoly<K>(std::move(r));
    out.a_ = a;
    return out;
  }
  static CycloRing t_power(long k, int a) {
    if (a < 2) throw MathError("cyclotomic modulus must be at least 2");
    const long e = ((k % a) + a) % a;
    return reduce(UniPoly<K>::monomial(K(1), static_cast<std::size_t>(e)), a);
  }

  const UniPoly<K>& residue() const { return residue_; }
  int modulus() const { return a_; }

  friend CycloRing operator+(const CycloRing& x, const CycloRing& y) { return make(x.residue_ + y.residue_, merge(x, y)); }
  friend CycloRing operator-(const CycloRing& x, const CycloRing& y) { return make(x.residue_ - y.residue_, merge(x, y)); }
  friend CycloRing operator-(const CycloRing& x) { return make(-x.residue_, x.a_); }
  friend CycloRing operator*(const CycloRing& x, const CycloRing& y) {
    const int a = merge(x, y);
    if (a == 0) return make(x.residue_ * y.residue_, 0);
    return reduce(x.residue_ * y.residue_, a);
  }
  CycloRing& operator+=(const CycloRing& o) { return *this = *this + o; }
  CycloRing& operator*=(const CycloRing& o) { return *this = *this * o; }

  friend bool operator==(const CycloRing& x, const CycloRing& y) {
    if (x.residue_.is_constant() && y.residue_.is_constant()) return x.residue_ == y.residue_;
    merge(x, y);
    return x.residue_ == y.residue_;
  }

 private:
  static CycloRing make(UniPoly<K> r, int a) {
    CycloRing out;
    out.residue_ = std::move(r);
    out.a_ = a;
    return out;
  }
  static int merge(const CycloRing& x, const CycloRing& y) {
    if (x.a_ == 0) return y.a_;
    if (y.a_ == 0 || y.a_ == x.a_) return x.a_;
    throw ContextError("mismatched cyclotomic moduli " + std::to_string(x.a_) + " and " + std::to_string(y.a_));
  }

  UniPoly<K> residue_;
  int a_ = 0;
};

template <class K>
std::string to_string(const CycloRing<K>& c) {
  return to_string(c.residue(), "t");
}

/// Residue of p modulo t^a - 1.
template <class K>
CycloRing<K> cyclo_reduce(const UniPoly<K>& p, int a) {
  return CycloRing<K>::reduce(p, a);
}

}  // namespace moduli
