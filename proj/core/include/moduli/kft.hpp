#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moduli/element.hpp"
#include "moduli/errors.hpp"
#include "moduli/evidence.hpp"
#include "moduli/moebius.hpp"
#include "moduli/projmap.hpp"

namespace moduli {

// The family x^4 + y^4 + z^4 + lambda (x^2 y^2 + y^2 z^2 + z^2 x^2).

template <ExactField F>
MultiPoly<F> kft_quartic(const F& lambda) {
  const auto x = MultiPoly<F>::variable(3, 0);
  const auto y = MultiPoly<F>::variable(3, 1);
  const auto z = MultiPoly<F>::variable(3, 2);
  const auto x2 = x * x, y2 = y * y, z2 = z * z;
  return x2 * x2 + y2 * y2 + z2 * z2 + (x2 * y2 + y2 * z2 + z2 * x2).scaled(lambda);
}

/// True when lambda is one of -2, -1, 2.
template <ExactField F>
bool kft_is_singular_parameter(const F& lambda) {
  return lambda == F(-2) || lambda == F(-1) || lambda == F(2);
}

template <ExactField F>
struct KftCurve {
  F lambda;
  MultiPoly<F> quartic;
  bool smooth = true;
};

template <ExactField F>
KftCurve<F> kft_curve(const F& lambda) {
  return {lambda, kft_quartic(lambda), !kft_is_singular_parameter(lambda)};
}

/// Smoothness through the gradient. Each partial is 2x(2x^2 + lambda(y^2+z^2))
/// up to renaming, so a singular point either has all coordinates nonzero
/// and its squares solve [[2,l,l],[l,2,l],[l,l,2]], or has one zero
/// coordinate and the other two squares solve [[2,l],[l,2]]; two zero
/// coordinates force the third to vanish. The curve is smooth exactly when
/// both determinants are nonzero.
template <ExactField F>
Evidence kft_smoothness_certificate(const F& lambda) {
  Evidence ev;
  ev.subject = "smoothness of the quartic";
  const F two(2);
  const F det2 = two * two - lambda * lambda;
  const F det3 = two * (two * two - lambda * lambda) - lambda * (two * lambda - lambda * lambda) +
                 lambda * (lambda * lambda - two * lambda);
  ev.add("det [[2,l],[l,2]] != 0", !is_zero(det2), to_string(det2));
  ev.add("det [[2,l,l],[l,2,l],[l,l,2]] != 0", !is_zero(det3), to_string(det3));
  return ev;
}

/// An exact singular point at lambda in {-2, -1, 2}, with the checks that the
/// quartic and its three partials vanish there. Points live in Q(i) so that
/// [1:i:0] at lambda = 2 is expressible. Nothing for other parameters.
std::optional<Evidence> kft_singular_witness(const Rational& lambda);

template <ExactField F>
ProjMap<F> kft_map_A() {
  return ProjMap<F>::linear({{F(0), F(1), F(0)}, {F(-1), F(0), F(0)}, {F(0), F(0), F(-1)}});
}
template <ExactField F>
ProjMap<F> kft_map_B() {
  return ProjMap<F>::linear({{F(1), F(0), F(0)}, {F(0), F(0), F(1)}, {F(0), F(1), F(0)}});
}

/// Order of the group of 3x3 matrices generated by `gens`, modulo scalars.
/// Matrices are normalized so their first nonzero entry is 1.
template <ExactField F>
std::size_t projective_matrix_group_order(const std::vector<std::array<F, 9>>& gens, std::size_t cap = 10000) {
  using M = std::array<F, 9>;
  auto normalize = [](M m) {
    for (const auto& e : m) {
      if (!is_zero(e)) {
        const F inv = F(1) / e;
        for (auto& x : m) x = x * inv;
        break;
      }
    }
    return m;
  };
  auto mul = [](const M& a, const M& b) {
    M c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        F acc(0);
        for (int k = 0; k < 3; ++k) acc = acc + a[3 * i + k] * b[3 * k + j];
        c[3 * i + j] = acc;
      }
    return c;
  };
  // Sets need an order; string forms are canonical for every field in use.
  auto key = [](const M& m) {
    std::string k;
    for (const auto& e : m) k += to_string(e) + ";";
    return k;
  };
  M id{F(1), F(0), F(0), F(0), F(1), F(0), F(0), F(0), F(1)};
  std::set<std::string> seen{key(id)};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        M c = normalize(mul(g, h));
        if (seen.insert(key(c)).second) {
          if (seen.size() > cap) return seen.size();
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

template <ExactField F>
std::string cofactor_string(const std::optional<MultiPoly<F>>& q) {
  return q ? to_string(*q) : std::string("none");
}

/// A and B preserve the quartic, A^4 = B^2 = (BA)^3 = 1 projectively and
/// the projective matrix group <A, B> has order 24.
template <ExactField F>
Evidence kft_group_check(const F& lambda) {
  Evidence ev;
  ev.subject = "S4 action on the quartic";
  const auto curve = kft_quartic(lambda);
  const auto A = kft_map_A<F>();
  const auto B = kft_map_B<F>();
  const auto id = ProjMap<F>::identity(3);
  const auto cA = map_preserves_curve(A, curve);
  const auto cB = map_preserves_curve(B, curve);
  ev.add("A preserves the quartic", cA.has_value(), "cofactor " + cofactor_string(cA));
  ev.add("B preserves the quartic", cB.has_value(), "cofactor " + cofactor_string(cB));
  const auto BA = mp_compose(B, A);
  for (const auto& [name, m] : std::vector<std::pair<std::string, ProjMap<F>>>{
           {"A^4 = 1", mp_power(A, 4)}, {"B^2 = 1", mp_power(B, 2)}, {"(BA)^3 = 1", mp_power(BA, 3)}}) {
    const auto r = proj_equal(m, id);
    ev.add(name, r.kind == ProjEquality::StrictEqual, to_string(r.kind));
  }
  const std::vector<std::array<Rational, 9>> gens{
      std::array<Rational, 9>{0, 1, 0, -1, 0, 0, 0, 0, -1}, std::array<Rational, 9>{1, 0, 0, 0, 0, 1, 0, 1, 0}};
  const std::size_t order = projective_matrix_group_order(gens);
  ev.add("|<A,B>| mod scalars = 24", order == 24, std::to_string(order));
  return ev;
}

/// Q = x^2 y^2 z^2 / (x^2 + y^2 + z^2)^3 is invariant under A, B and BA:
/// numerator and denominator pick up one common scalar.
Evidence q_invariance_check();

template <ExactField F>
F kft_G(const F& lambda) {
  const F den = F(27) * (F(2) + lambda);
  if (is_zero(den)) throw MathError("G has a pole at lambda = -2");
  const F a = F(1) + lambda;
  return F(16) * a * a * a / den;
}

/// Branch data over K(s), s^2 = lambda^2 - lambda - 2. `sign` picks the
/// branch of the square root.
template <ExactField F>
struct KftBranchData {
  using Ext = QuadExt<F>;
  F lambda;
  int sign = 1;
  Ext l1, l2, mu;
};

template <ExactField F>
KftBranchData<F> kft_branch_data(const F& lambda, int sign = 1) {
  if (kft_is_singular_parameter(lambda)) throw MathError("branch data needs lambda outside {-2, -1, 2}");
  if (sign != 1 && sign != -1) throw std::invalid_argument("branch sign must be +1 or -1");
  using Ext = QuadExt<F>;
  const F D = lambda * lambda - lambda - F(2);
  const Ext s = Ext::generator(D) * Ext(F(sign));
  const Ext l(lambda);
  const Ext two(F(2));
  const Ext c = Ext(F(2) + lambda);
  auto cube = [](const Ext& t) { return t * t * t; };
  KftBranchData<F> out{lambda, sign, {}, {}, {}};
  out.l1 = c * (l + s) * (l + s) / cube(two - l - two * s);
  out.l2 = c * (l - s) * (l - s) / cube(two - l + two * s);
  out.mu = Ext(F(4)) * c * c * cube(s) / ((l - s) * (l - s) * cube(l - two + two * s));
  return out;
}

/// T(infinity) = mu for T = normalizing_map(0, l1, l2); F(mu) = G; the sign
/// flip swaps l1, l2 and sends mu to eta(mu); mu + eta(mu) = G.
template <ExactField F>
Evidence kft_branch_check(const F& lambda) {
  using Ext = QuadExt<F>;
  Evidence ev;
  ev.subject = "branch data";
  const auto plus = kft_branch_data(lambda, 1);
  const auto minus = kft_branch_data(lambda, -1);
  const Ext G(kft_G(lambda));
  const auto T = normalizing_map(ProjPoint<Ext>::finite(Ext(0)), ProjPoint<Ext>::finite(plus.l1),
                                 ProjPoint<Ext>::finite(plus.l2));
  const auto t_inf = T(ProjPoint<Ext>::infinity());
  ev.add("T(0) = 0", T(Ext(0)) == ProjPoint<Ext>::finite(Ext(0)));
  ev.add("T(l1) = infinity", T(plus.l1).is_infinity());
  ev.add("T(l2) = 1", T(plus.l2) == ProjPoint<Ext>::finite(Ext(1)));
  ev.add("T(infinity) = mu", !t_inf.is_infinity() && t_inf.value() == plus.mu);
  const Ext Fmu = F_value(plus.mu);
  ev.add("F(mu) = G", Fmu == G);
  ev.add("l1 l2 != 0", !is_zero(plus.l1 * plus.l2));
  ev.add("mu not in {0, 1}", !is_zero(plus.mu) && plus.mu != Ext(1));
  ev.add("sign flip swaps l1 and l2", minus.l1 == plus.l2 && minus.l2 == plus.l1);
  const Ext eta_mu = eta_value(plus.mu);
  ev.add("sign flip sends mu to eta(mu)", minus.mu == eta_mu);
  ev.add("mu + eta(mu) = G", plus.mu + eta_mu == G);
  return ev;
}

template <ExactField F>
struct KftInvariants {
  F G, j2, j3, j4, j22;
};

/// The five invariants. Throws MathError naming the first formula with a pole.
template <ExactField F>
KftInvariants<F> kft_invariants(const F& lambda) {
  const F a = F(1) + lambda;
  const F b = F(2) + lambda;
  auto cube = [](const F& t) { return t * t * t; };
  auto guarded = [](const char* name, const F& num, const F& den) {
    if (is_zero(den)) throw MathError(std::string(name) + " has a pole at this lambda");
    return num / den;
  };
  KftInvariants<F> out;
  out.G = guarded("G", F(16) * cube(a), F(27) * b);
  const F b2 = b * b;
  out.j2 = guarded("j2", -cube(lambda * lambda - F(12) * lambda - F(12)), F(108) * a * b2 * b2);
  out.j3 = guarded("j3", cube(F(16) * lambda * lambda + F(48) * lambda + F(33)), F(108) * a * b);
  const F a2 = a * a;
  out.j4 = guarded("j4", cube(lambda * lambda + F(18) * lambda + F(33)), F(108) * a2 * a2 * b);
  out.j22 = guarded("j22", F(4) * cube(lambda * lambda + F(3) * lambda + F(3)), F(27) * a2 * b2);
  return out;
}

/// The five invariants over Q(lambda), canonical.
KftInvariants<RatFunc> kft_invariants_symbolic();

/// The other two points of the fiber of G through lambda, over K(s) with
/// s^2 = lambda^2 - 4. lambda2 takes the minus sign in front of
/// (1+lambda) s.
template <ExactField F>
struct KftCompanions {
  using Ext = QuadExt<F>;
  Ext lambda2, lambda3;
};

template <ExactField F>
KftCompanions<F> kft_companions(const F& lambda) {
  using Ext = QuadExt<F>;
  const F b = F(2) + lambda;
  if (is_zero(b)) throw MathError("companions need lambda != -2");
  const Ext s = Ext::generator(lambda * lambda - F(4));
  const Ext base(F(6) + F(5) * lambda + lambda * lambda);
  const Ext k(F(1) + lambda);
  const Ext den(F(2) * b);
  return {-(base - k * s) / den, -(base + k * s) / den};
}

/// 16(1+X)^3 - 27 G (2+X) = 16 (X - lambda)(X - lambda2)(X - lambda3) in Ext[X].
template <ExactField F>
Evidence kft_companion_check(const F& lambda) {
  using Ext = QuadExt<F>;
  using P = UniPoly<Ext>;
  Evidence ev;
  ev.subject = "fiber of G";
  const auto c = kft_companions(lambda);
  const Ext G(kft_G(lambda));
  const P X = P::x();
  const P one_plus = P(Ext(1)) + X;
  const P lhs = P(Ext(16)) * one_plus * one_plus * one_plus - P(Ext(27) * G) * (P(Ext(2)) + X);
  const P rhs = P(Ext(16)) * (X - P(Ext(lambda))) * (X - P(c.lambda2)) * (X - P(c.lambda3));
  ev.add("16(1+X)^3 - 27G(2+X) = 16(X-l)(X-l2)(X-l3)", lhs == rhs);
  return ev;
}

/// The companions at a rational lambda as concrete numbers: rationals when
/// lambda^2 - 4 is a square, else elements of Q(sqrt d). The square root is
/// taken as k sqrt(d) with k > 0.
std::pair<Element, Element> kft_companion_values(const Rational& lambda);

struct SeparationResult {
  std::string invariant;
  bool differs_from_lambda2 = false;
  bool differs_from_lambda3 = false;
};

/// For symbolic lambda: f(lambda2) - f(lambda) and f(lambda3) - f(lambda) in
/// Q(lambda)(s), s^2 = lambda^2 - 4, for each invariant f.
std::vector<SeparationResult> kft_separation();

enum class KftExceptional { None, Fermat, Klein };
const char* to_string(KftExceptional e);

/// The exceptional set {0, 3(-1 +- sqrt(-7))/2}, by exact comparison.
KftExceptional kft_exceptional_class(const Element& lambda);

/// lambda must be a concrete element of Q or Q(sqrt d) with lambda not in
/// {-2, -1, 2}; throws std::invalid_argument otherwise.
void require_kft_parameter(const Element& lambda);

struct EquivalenceDecision {
  bool conformal = false;
  /// Nothing when the field carries no complex conjugation.
  std::optional<bool> anticonformal;
  std::string basis;
};

/// Conformal and anticonformal equivalence of two family members. Throws
/// std::invalid_argument outside the parameter domain and ContextError when
/// a symbolic parameter meets a concrete one, or two different quadratic
/// fields meet.
EquivalenceDecision kft_equivalent(const Element& lambda1, const Element& lambda2);

struct FieldDescriptor {
  std::string field;
  std::optional<std::string> minimal_polynomial;
  std::string reason;
};

FieldDescriptor kft_moduli_field(const Element& lambda);

/// The Klein point 3(-1 + sqrt(-7))/2 and the order-7 map
/// [-x+y+abar z : alpha(x+y) : -x+y-abar z], alpha = (-1+sqrt(-7))/2.
QuadNumber klein_point();
ProjMap<QuadNumber> klein_map();
/// The map preserves the quartic at the Klein point with a scalar
/// cofactor; C^7 = 1 and C^k != 1 for 1 <= k <= 6.
Evidence klein_automorphism_check();
/// Projective order of C, searched up to `limit`.
std::optional<int> klein_map_order(int limit = 24);

/// Whether an extra automorphism beyond S4 is certified at lambda: the
/// Klein map (or its conjugate) for lambda in Q or Q(sqrt(-7)), and the
/// scaling [x : i y : z] for lambda in Q or Q(i). Entries are nothing when
/// lambda does not embed in the field the map is defined over.
struct ExtraAutomorphisms {
  std::optional<bool> klein;
  std::optional<bool> fermat;
  /// |<A, B, [x:iy:z]>| mod scalars when the scaling preserves the curve.
  std::optional<std::size_t> fermat_group_order;
};
ExtraAutomorphisms kft_extra_automorphisms(const Element& lambda);

/// y^2 = x^8 + 14x^4 + 1: the octic is squarefree, so the curve has genus 3.
Evidence hyperelliptic_s0_check();

}  // namespace moduli
