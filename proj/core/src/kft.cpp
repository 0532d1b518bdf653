#include "moduli/kft.hpp"

#include <stdexcept>

#include "moduli/signatures.hpp"

namespace moduli {

namespace {

QuadNumber gaussian(long a, long b) { return QuadNumber(Rational(a), Rational(b), Rational(-1)); }

QuadNumber in_field(const Rational& q, long d) { return QuadNumber(q, Rational(0), Rational(d)); }

/// Concrete value as an element of Q(sqrt d) with its radicand, or a bare rational.
std::optional<QuadNumber> as_quad(const Element& e) {
  if (const auto* q = std::get_if<Rational>(&e)) return QuadNumber(*q);
  if (const auto* x = std::get_if<QuadNumber>(&e)) return *x;
  return std::nullopt;
}

std::optional<long> radicand_of(const QuadNumber& x) {
  if (x.in_base() || !x.D()) return std::nullopt;
  return x.D()->num().get_si();
}

QuadNumber complex_conjugate(const QuadNumber& x) {
  const auto d = radicand_of(x);
  return d && *d < 0 ? x.conj() : x;
}

template <ExactField F>
bool preserves_with_scalar(const ProjMap<F>& m, const MultiPoly<F>& curve, std::string& witness) {
  const auto q = map_preserves_curve(m, curve);
  witness = "cofactor " + cofactor_string(q);
  return q && q->degree() == 0;
}

}  // namespace

std::optional<Evidence> kft_singular_witness(const Rational& lambda) {
  std::array<QuadNumber, 3> point;
  std::string label;
  if (lambda == Rational(-2)) {
    point = {gaussian(0, 0), gaussian(1, 0), gaussian(1, 0)};
    label = "[0:1:1]";
  } else if (lambda == Rational(-1)) {
    point = {gaussian(1, 0), gaussian(1, 0), gaussian(1, 0)};
    label = "[1:1:1]";
  } else if (lambda == Rational(2)) {
    point = {gaussian(1, 0), gaussian(0, 1), gaussian(0, 0)};
    label = "[1:i:0]";
  } else {
    return std::nullopt;
  }
  const auto curve = kft_quartic(lambda).map_coefficients<QuadNumber>([](const Rational& c) { return in_field(c, -1); });
  const std::span<const QuadNumber> at(point);
  Evidence ev;
  ev.subject = "singular point " + label + " over Q(i)";
  ev.add("quartic vanishes at " + label, is_zero(curve.evaluate(at)));
  const char* names[] = {"d/dx", "d/dy", "d/dz"};
  for (std::size_t v = 0; v < 3; ++v)
    ev.add(std::string(names[v]) + " vanishes at " + label, is_zero(partial_derivative(curve, v).evaluate(at)));
  return ev;
}

Evidence q_invariance_check() {
  using P = MultiPoly<Rational>;
  const auto x = P::variable(3, 0);
  const auto y = P::variable(3, 1);
  const auto z = P::variable(3, 2);
  const P num = x * x * y * y * z * z;
  const P s = x * x + y * y + z * z;
  const P den = s * s * s;
  const auto A = kft_map_A<Rational>();
  const auto B = kft_map_B<Rational>();
  Evidence ev;
  ev.subject = "invariance of Q = x^2y^2z^2/(x^2+y^2+z^2)^3";
  for (const auto& [name, m] : std::vector<std::pair<std::string, ProjMap<Rational>>>{
           {"A", A}, {"B", B}, {"BA", mp_compose(B, A)}}) {
    const auto qn = mp_divides(num, m.pullback(num));
    const auto qd = mp_divides(den, m.pullback(den));
    const bool ok = qn && qd && qn->degree() == 0 && *qn == *qd;
    ev.add("Q o " + name + " = Q", ok,
           "numerator factor " + cofactor_string(qn) + ", denominator factor " + cofactor_string(qd));
  }
  return ev;
}

KftInvariants<RatFunc> kft_invariants_symbolic() { return kft_invariants(RatFunc::lambda()); }

std::pair<Element, Element> kft_companion_values(const Rational& lambda) {
  const auto c = kft_companions(lambda);
  const Rational D = lambda * lambda - Rational(4);
  if (D.is_zero()) return {c.lambda2.u(), c.lambda3.u()};
  auto [k, d] = rational_square_class(D);
  if (k.sign() < 0) k = -k;
  auto value = [&](const QuadExt<Rational>& t) -> Element {
    if (d == 1) return t.u() + t.v() * k;
    return downcast(Tower(RatFunc(t.u()), RatFunc(t.v() * k), RatFunc(Rational(d))));
  };
  return {value(c.lambda2), value(c.lambda3)};
}

std::vector<SeparationResult> kft_separation() {
  const RatFunc l = RatFunc::lambda();
  const auto comp = kft_companions(l);
  const auto inv = kft_invariants(l);
  auto at = [](const RatFunc& f, const Tower& t) {
    return f.num().evaluate<Tower>(t) / f.den().evaluate<Tower>(t);
  };
  std::vector<SeparationResult> out;
  for (const auto& [name, f] : std::vector<std::pair<std::string, RatFunc>>{
           {"G", inv.G}, {"j2", inv.j2}, {"j3", inv.j3}, {"j4", inv.j4}, {"j22", inv.j22}}) {
    const Tower self(f);
    out.push_back({name, !is_zero(at(f, comp.lambda2) - self), !is_zero(at(f, comp.lambda3) - self)});
  }
  return out;
}

const char* to_string(KftExceptional e) {
  switch (e) {
    case KftExceptional::None: return "none";
    case KftExceptional::Fermat: return "Fermat";
    case KftExceptional::Klein: return "Klein";
  }
  return "?";
}

QuadNumber klein_point() { return QuadNumber(make_rational(-3, 2), make_rational(3, 2), Rational(-7)); }

KftExceptional kft_exceptional_class(const Element& lambda) {
  const auto q = as_quad(lambda);
  if (!q) return KftExceptional::None;
  if (is_zero(*q)) return KftExceptional::Fermat;
  const auto d = radicand_of(*q);
  if (d && *d == -7 && (*q == klein_point() || *q == klein_point().conj())) return KftExceptional::Klein;
  return KftExceptional::None;
}

void require_kft_parameter(const Element& lambda) {
  const auto q = as_quad(lambda);
  if (!q) throw std::invalid_argument("a concrete parameter in Q or Q(sqrt d) is expected");
  if (kft_is_singular_parameter(*q)) throw std::invalid_argument("lambda must avoid -2, -1 and 2");
}

EquivalenceDecision kft_equivalent(const Element& lambda1, const Element& lambda2) {
  const bool sym1 = !as_quad(lambda1).has_value();
  const bool sym2 = !as_quad(lambda2).has_value();
  EquivalenceDecision out;
  if (sym1 || sym2) {
    if (!(sym1 && sym2)) throw ContextError("a symbolic parameter cannot be compared with a concrete one");
    out.conformal = to_tower(lambda1) == to_tower(lambda2);
    out.basis = "equality of symbolic parameters";
    return out;
  }
  require_kft_parameter(lambda1);
  require_kft_parameter(lambda2);
  const QuadNumber a = *as_quad(lambda1);
  const QuadNumber b = *as_quad(lambda2);
  const auto da = radicand_of(a);
  const auto db = radicand_of(b);
  if (da && db && *da != *db) throw ContextError("parameters lie in different quadratic fields");

  const auto ea = kft_exceptional_class(lambda1);
  const auto eb = kft_exceptional_class(lambda2);
  if (ea != KftExceptional::None || eb != KftExceptional::None) {
    out.conformal = ea == eb;
    out.anticonformal = ea == eb;
    out.basis = std::string("exceptional table: ") + to_string(ea) + " vs " + to_string(eb);
    return out;
  }
  out.conformal = a == b;
  out.anticonformal = a == complex_conjugate(b);
  out.basis = "lambda1 = lambda2 for conformal, lambda1 = conj(lambda2) for anticonformal";
  return out;
}

FieldDescriptor kft_moduli_field(const Element& lambda) {
  if (!as_quad(lambda)) {
    return {field_description(lambda), std::nullopt, "generic member: the field of moduli is Q(lambda)"};
  }
  require_kft_parameter(lambda);
  const auto e = kft_exceptional_class(lambda);
  if (e != KftExceptional::None)
    return {"Q", minimal_polynomial(*as_quad(lambda)),
            std::string("exceptional point (") + to_string(e) + "): the field of moduli is Q"};
  const QuadNumber q = *as_quad(lambda);
  if (q.in_base()) return {"Q", minimal_polynomial(q), "lambda is rational: Q(lambda) = Q"};
  return {field_description(lambda), minimal_polynomial(q), "the field of moduli is Q(lambda)"};
}

ProjMap<QuadNumber> klein_map() {
  const QuadNumber alpha(make_rational(-1, 2), make_rational(1, 2), Rational(-7));
  const QuadNumber abar = alpha.conj();
  const QuadNumber one(Rational(1)), zero(Rational(0));
  return ProjMap<QuadNumber>::linear({{-one, one, abar}, {alpha, alpha, zero}, {-one, one, -abar}});
}

std::optional<int> klein_map_order(int limit) {
  const auto C = klein_map();
  const auto id = ProjMap<QuadNumber>::identity(3);
  auto P = C;
  for (int k = 1; k <= limit; ++k) {
    if (proj_equal(P, id).kind == ProjEquality::StrictEqual) return k;
    P = mp_compose(C, P);
  }
  return std::nullopt;
}

Evidence klein_automorphism_check() {
  Evidence ev;
  ev.subject = "order-7 automorphism at the Klein point";
  const auto C = klein_map();
  const auto curve = kft_quartic(klein_point());
  std::string w;
  ev.add("C preserves the quartic at 3(-1+sqrt(-7))/2 with scalar cofactor", preserves_with_scalar(C, curve, w), w);
  const auto id = ProjMap<QuadNumber>::identity(3);
  auto P = C;
  for (int k = 1; k <= 7; ++k) {
    const auto r = proj_equal(P, id);
    if (k < 7)
      ev.add("C^" + std::to_string(k) + " != 1", r.kind == ProjEquality::NotEqual, to_string(r.kind));
    else
      ev.add("C^7 = 1", r.kind == ProjEquality::StrictEqual, to_string(r.kind));
    P = mp_compose(C, P);
  }
  return ev;
}

ExtraAutomorphisms kft_extra_automorphisms(const Element& lambda) {
  ExtraAutomorphisms out;
  const auto q = as_quad(lambda);
  if (!q) return out;
  const auto d = radicand_of(*q);
  std::string w;
  if (!d || *d == -7) {
    const QuadNumber l = d ? *q : in_field(q->u(), -7);
    const auto curve = kft_quartic(l);
    const auto C = klein_map();
    std::vector<MultiPoly<QuadNumber>> conj_components;
    for (const auto& c : C.components())
      conj_components.push_back(c.map_coefficients<QuadNumber>([](const QuadNumber& x) { return x.conj(); }));
    const ProjMap<QuadNumber> Cbar(conj_components);
    out.klein = preserves_with_scalar(C, curve, w) || preserves_with_scalar(Cbar, curve, w);
  }
  if (!d || *d == -1) {
    const QuadNumber l = d ? *q : in_field(q->u(), -1);
    const auto curve = kft_quartic(l);
    const QuadNumber one(Rational(1)), zero(Rational(0)), i = gaussian(0, 1);
    const auto S = ProjMap<QuadNumber>::linear({{one, zero, zero}, {zero, i, zero}, {zero, zero, one}});
    out.fermat = preserves_with_scalar(S, curve, w);
    if (*out.fermat) {
      const std::vector<std::array<QuadNumber, 9>> gens{
          std::array<QuadNumber, 9>{zero, one, zero, -one, zero, zero, zero, zero, -one},
          std::array<QuadNumber, 9>{one, zero, zero, zero, zero, one, zero, one, zero},
          std::array<QuadNumber, 9>{one, zero, zero, zero, i, zero, zero, zero, one}};
      out.fermat_group_order = projective_matrix_group_order(gens);
    }
  }
  return out;
}

Evidence hyperelliptic_s0_check() {
  Evidence ev;
  ev.subject = "hyperelliptic curve y^2 = x^8+14x^4+1";
  const QPoly p(std::vector<Rational>{1, 0, 0, 0, 14, 0, 0, 0, 1});
  const QPoly g = gcd(p, p.derivative());
  ev.add("x^8+14x^4+1 is squarefree", g == QPoly(Rational(1)), "gcd with derivative " + to_string(g, "x"));
  const long genus = (p.degree() - 1) / 2;
  ev.add("genus (8-2)/2 = 3", genus == 3, std::to_string(genus));
  const int rh = rh_genus(Signature(0, {2, 4, 6}), 48);
  ev.add("Riemann-Hurwitz for (0;2,4,6) with 48 automorphisms gives 3", rh == 3, std::to_string(rh));
  return ev;
}

}  // namespace moduli
