#include "moduli/homology.hpp"

#include <set>
#include <stdexcept>

namespace moduli {

int homology_genus(int a) {
  if (a < 2) throw std::invalid_argument("homology covers need a >= 2");
  return rh_genus(Signature(0, {a, a, a, a}), static_cast<long>(a) * a * a);
}

HomologyCurve homology_curve(int a) {
  if (a < 2) throw std::invalid_argument("homology covers need a >= 2");
  using P = MultiPoly<CycloScalar>;
  auto pw = [&](std::size_t i) { return P::variable(4, i).pow(static_cast<unsigned>(a)); };
  const CycloScalar lambda(RatFunc::lambda());
  return {a, pw(0) + pw(1) + pw(2), pw(0).scaled(lambda) + pw(1) + pw(3)};
}

ProjMap<CycloScalar> homology_generator(int a, int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("homology generators are a_1, a_2, a_3");
  std::vector<std::vector<CycloScalar>> m(4, std::vector<CycloScalar>(4, CycloScalar(0)));
  for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = CycloScalar(1);
  m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j - 1)] = CycloScalar::t_power(1, a);
  return ProjMap<CycloScalar>::linear(m);
}

Evidence homology_group_check(int a) {
  const auto curve = homology_curve(a);
  Evidence ev;
  ev.subject = "coordinate scalings of the homology cover, a = " + std::to_string(a);
  std::vector<ProjMap<CycloScalar>> gens;
  for (int j = 1; j <= 3; ++j) gens.push_back(homology_generator(a, j));
  const auto id = ProjMap<CycloScalar>::identity(4);

  for (int j = 1; j <= 3; ++j) {
    const auto& g = gens[static_cast<std::size_t>(j - 1)];
    const std::string n = "a" + std::to_string(j);
    ev.add(n + " fixes eq1", g.pullback(curve.eq1) == curve.eq1);
    ev.add(n + " fixes eq2", g.pullback(curve.eq2) == curve.eq2);
    bool smaller_trivial = false;
    auto p = g;
    for (int k = 1; k < a; ++k) {
      smaller_trivial = smaller_trivial || proj_equal(p, id).equal();
      p = mp_compose(g, p);
    }
    ev.add(n + "^" + std::to_string(a) + " = 1", proj_equal(p, id).kind == ProjEquality::StrictEqual);
    ev.add(n + "^k != 1 for 0 < k < " + std::to_string(a), !smaller_trivial);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto r = proj_equal(mp_compose(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]),
                                mp_compose(gens[static_cast<std::size_t>(j)], gens[static_cast<std::size_t>(i)]));
      ev.add("a" + std::to_string(i + 1) + "a" + std::to_string(j + 1) + " = a" + std::to_string(j + 1) + "a" +
                 std::to_string(i + 1),
             r.kind == ProjEquality::StrictEqual, to_string(r.kind));
    }

  // Closure; diagonal maps are told apart by their components.
  auto key = [](const ProjMap<CycloScalar>& m) { return to_string(m); };
  std::set<std::string> seen{key(id)};
  std::vector<ProjMap<CycloScalar>> frontier{id};
  while (!frontier.empty()) {
    std::vector<ProjMap<CycloScalar>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        auto c = mp_compose(g, m);
        if (seen.insert(key(c)).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  const long expected = static_cast<long>(a) * a * a;
  ev.add("|<a1,a2,a3>| = a^3", static_cast<long>(seen.size()) == expected, std::to_string(seen.size()));
  return ev;
}

namespace {

template <ExactField F>
HomologyModuliReport moduli_report_for(const F& lambda) {
  HomologyModuliReport out;
  const F j = j_invariant(lambda);
  out.j = to_string(Element(j));
  for (const auto& v : anharmonic_orbit(lambda)) out.orbit.push_back(to_string(Element(v)));
  return out;
}

}  // namespace

HomologyModuliReport homology_moduli_report(const Element& lambda) {
  HomologyModuliReport out;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        out = moduli_report_for<T>(l);
        const T j = j_invariant(l);
        if constexpr (std::is_same_v<T, Rational>) {
          out.field = "Q";
          out.minimal_polynomial = minimal_polynomial(QuadNumber(j));
        } else if constexpr (std::is_same_v<T, QuadNumber>) {
          out.field = j.in_base() ? "Q" : field_description(Element(j));
          out.minimal_polynomial = minimal_polynomial(j);
        } else {
          out.field = "Q(j(lambda))";
        }
      },
      lambda);
  out.notes.push_back("the field of moduli is Q(j(lambda)); lambda must avoid 0 and 1");
  return out;
}

}  // namespace moduli
