#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/cyclo.hpp"
#include "moduli/element.hpp"
#include "moduli/evidence.hpp"
#include "moduli/moebius.hpp"
#include "moduli/projmap.hpp"
#include "moduli/signatures.hpp"

namespace moduli {

/// rh_genus((0;a,a,a,a), a^3) = 1 + a^2 (a - 2). Throws for a < 2.
int homology_genus(int a);

using CycloScalar = CycloRing<RatFunc>;

/// x1^a + x2^a + x3^a and lambda x1^a + x2^a + x4^a in P^3, lambda symbolic,
/// over Q(lambda)[t]/(t^a - 1).
struct HomologyCurve {
  int a = 2;
  MultiPoly<CycloScalar> eq1;
  MultiPoly<CycloScalar> eq2;
};

HomologyCurve homology_curve(int a);

/// a_j multiplies x_j by t, j = 1, 2, 3.
ProjMap<CycloScalar> homology_generator(int a, int j);

/// Each a_j fixes both equations exactly, a_j^a = 1 with no smaller power
/// trivial, the a_j commute, and the group they generate has a^3 elements.
Evidence homology_group_check(int a);

template <ExactField F>
MultiPoly<F> legendre_cubic(const F& lambda) {
  const auto x = MultiPoly<F>::variable(3, 0);
  const auto y = MultiPoly<F>::variable(3, 1);
  const auto z = MultiPoly<F>::variable(3, 2);
  return y * y * z - x * (x - z) * (x - z.scaled(lambda));
}

template <ExactField F>
struct LegendreMaps {
  ProjMap<F> b1, b2, b3;
};

template <ExactField F>
LegendreMaps<F> legendre_maps(const F& lambda) {
  const auto x = MultiPoly<F>::variable(3, 0);
  const auto y = MultiPoly<F>::variable(3, 1);
  const auto z = MultiPoly<F>::variable(3, 2);
  const auto xl = x - z.scaled(lambda);
  return {ProjMap<F>({x, -y, z}), ProjMap<F>({(x * z).scaled(lambda), (y * z).scaled(lambda), x * x}),
          ProjMap<F>({((x - z) * xl).scaled(lambda), (y * z).scaled(lambda * (lambda - F(1))), xl * xl})};
}

/// Q_lambda(w) = N / D with N = lambda (w^2-lambda)^2 - 4 lambda w (w-1)(w-lambda)
/// and D = (w^2-lambda)^2 - 4 lambda w (w-1)(w-lambda).
template <ExactField F>
std::pair<UniPoly<F>, UniPoly<F>> legendre_Q(const F& lambda) {
  using P = UniPoly<F>;
  const P w = P::x();
  const P l(lambda);
  const P sq = (w * w - l) * (w * w - l);
  const P cross = P(F(4) * lambda) * w * (w - P(F(1))) * (w - l);
  return {l * sq - cross, sq - cross};
}

/// Binary form of degree `degree` in (w0, w1) from p(w), w = w0 / w1.
template <ExactField F>
MultiPoly<F> homogenize(const UniPoly<F>& p, int degree) {
  MultiPoly<F> out(2);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!is_zero(p.coeffs()[i])) out.add_term({static_cast<int>(i), degree - static_cast<int>(i)}, p.coeffs()[i]);
  return out;
}

namespace detail {

template <ExactField F>
std::string equality_level(const ProjMap<F>& m1, const ProjMap<F>& m2, const MultiPoly<F>& curve, bool& ok) {
  const auto r = proj_equal(m1, m2, std::optional<MultiPoly<F>>(curve));
  ok = r.equal();
  return to_string(r.kind);
}

}  // namespace detail

/// Clauses (i)-(vi) for the Legendre curve and the quotient map Q_lambda.
template <ExactField F>
Evidence legendre_cover_check(const F& lambda) {
  require_not_zero_or_one(lambda, "Legendre curve");
  Evidence ev;
  ev.subject = "Legendre curve and Q_lambda";
  const auto cubic = legendre_cubic(lambda);
  const auto maps = legendre_maps(lambda);
  const std::vector<std::pair<std::string, const ProjMap<F>*>> named{{"b1", &maps.b1}, {"b2", &maps.b2}, {"b3", &maps.b3}};

  for (const auto& [name, m] : named) {
    const auto q = map_preserves_curve(*m, cubic);
    ev.add("(i) " + name + " preserves E_lambda", q && !q->is_zero(), q ? "cofactor " + to_string(*q) : "none");
  }
  const auto id = ProjMap<F>::identity(3);
  for (const auto& [name, m] : named) {
    bool ok = false;
    const std::string level = detail::equality_level(mp_compose(*m, *m), id, cubic, ok);
    ev.add("(ii) " + name + "^2 = 1", ok, level);
  }
  for (std::size_t i = 0; i < named.size(); ++i)
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      bool ok = false;
      const std::string level = detail::equality_level(mp_compose(*named[i].second, *named[j].second),
                                                       mp_compose(*named[j].second, *named[i].second), cubic, ok);
      ev.add("(iii) " + named[i].first + named[j].first + " = " + named[j].first + named[i].first, ok, level);
    }

  const auto [N, D] = legendre_Q(lambda);
  const ProjMap<F> Q({homogenize(N, 4), homogenize(D, 4)});
  const auto w0 = MultiPoly<F>::variable(2, 0);
  const auto w1 = MultiPoly<F>::variable(2, 1);
  const ProjMap<F> A({w1.scaled(lambda), w0});
  const ProjMap<F> B({(w0 - w1).scaled(lambda), w0 - w1.scaled(lambda)});
  for (const auto& [name, g] : std::vector<std::pair<std::string, ProjMap<F>>>{{"A", A}, {"B", B}}) {
    const auto r = proj_equal(mp_compose(Q, g), Q);
    ev.add("(iv) Q o " + name + " = Q", r.kind == ProjEquality::StrictEqual, to_string(r.kind));
  }

  const std::vector<std::pair<std::string, std::pair<F, F>>> points{
      {"infinity", {F(1), F(0)}}, {"0", {F(0), F(1)}}, {"1", {F(1), F(1)}}, {"lambda", {lambda, F(1)}}};
  for (const auto& [label, pt] : points) {
    const std::array<F, 2> at{pt.first, pt.second};
    const ProjPoint<F> image(Q[0].evaluate(std::span<const F>(at)), Q[1].evaluate(std::span<const F>(at)));
    ev.add("(v) Q(" + label + ") = lambda", image == ProjPoint<F>::finite(lambda), to_string(image));
  }

  auto square = [&](const std::string& name, const UniPoly<F>& p, const F& expected_scalar) {
    const auto r = perfect_square(p);
    const bool ok = r && r->first == expected_scalar && r->second.scaled(r->first) * r->second == p;
    ev.add("(vi) " + name + " is a perfect square", ok,
           r ? to_string(r->first) + " * (" + to_string(r->second, "w") + ")^2" : "not a square");
  };
  square("N", N, lambda);
  square("N - D", N - D, lambda - F(1));
  square("D", D, F(1));
  return ev;
}

struct HomologyModuliReport {
  std::string j;
  std::vector<std::string> orbit;
  std::string field;
  std::optional<std::string> minimal_polynomial;
  std::vector<std::string> notes;
};

/// j(lambda), the anharmonic orbit and the field of moduli Q(j(lambda)).
/// Throws MathError for lambda in {0, 1}.
HomologyModuliReport homology_moduli_report(const Element& lambda);

}  // namespace moduli
