#include "moduli_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <type_traits>

#include "CLI11.hpp"
#include "moduli/errors.hpp"
#include "moduli/groups.hpp"
#include "moduli/homology.hpp"
#include "moduli/kft.hpp"
#include "moduli/moebius.hpp"
#include "moduli/signatures.hpp"
#include "moduli_cli/expr.hpp"
#include "moduli_cli/report.hpp"

namespace moduli::cli {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Params {
  std::string signature;
  std::string lambda = "lambda";
  std::string lambda1, lambda2;
  long order = 0;
  int sign = 1;
  int a = 2;
  std::size_t sym = 4;
  bool normalized = false;
  std::string moves = "Y,Z,W";
  unsigned threads = 0;
};

template <class F>
std::string scalar(const F& x) {
  return to_string(Element(x));
}

/// u+v*s followed by the relation for s.
template <class F>
std::string ext_str(const QuadExt<F>& x) {
  if (x.in_base() || !x.D()) return scalar(x.u());
  auto simple = [](const std::string& t) { return t.find_first_of("+-", 1) == std::string::npos; };
  const std::string vs = scalar(x.v());
  const std::string us = is_zero(x.u()) ? "" : scalar(x.u());
  std::string body;
  if (vs == "1") body = us.empty() ? "s" : us + "+s";
  else if (vs == "-1") body = us + "-s";
  else if (vs.front() == '-' && simple(vs)) body = us + "-" + vs.substr(1) + "*s";
  else body = us + (us.empty() ? "" : "+") + (simple(vs) ? vs : "(" + vs + ")") + "*s";
  return body + " with s^2=" + scalar(*x.D());
}

/// Coefficients of a polynomial over Q(sqrt d) print with a bare s; spell
/// out the radical so the string stands alone.
template <class F>
std::string poly_str(const MultiPoly<F>& p) {
  std::string out = to_string(p);
  if constexpr (std::is_same_v<F, QuadNumber>) {
    for (const auto& [e, c] : p.terms()) {
      if (c.in_base() || !c.D()) continue;
      const std::string root = "sqrt(" + to_string(*c.D()) + ")";
      std::string replaced;
      for (char ch : out) {
        if (ch == 's') replaced += root;
        else replaced += ch;
      }
      return replaced;
    }
  }
  return out;
}

json element_json(const std::string& text, const Element& e) {
  return {{"text", text}, {"canonical", to_string(e)}, {"field", field_description(e)}};
}

Element parse_input(Report& r, const std::string& key, const std::string& text) {
  r.input[key] = {{"text", text}};
  const ParsedElement parsed = parse_element(text);
  r.input[key] = element_json(text, parsed.value);
  return parsed.value;
}

/// Calls fn with the parameter as Rational, QuadNumber or RatFunc.
template <class Fn>
void with_family_field(const Element& e, Fn&& fn) {
  std::visit(Overloaded{[](const Tower&) {
                          throw std::invalid_argument(
                              "this command takes lambda in Q, Q(sqrt d) or Q(lambda), not a tower");
                        },
                        [&](const auto& l) { fn(l); }},
             e);
}

template <class F>
constexpr bool is_symbolic_v = std::is_same_v<F, RatFunc>;

template <class F>
bool is_generic_lambda(const F& l) {
  if constexpr (is_symbolic_v<F>) return l == RatFunc::lambda();
  else return false;
}

template <class F>
std::optional<Rational> as_rational(const F& l) {
  if constexpr (std::is_same_v<F, Rational>) return l;
  else if constexpr (std::is_same_v<F, QuadNumber>) {
    if (l.in_base()) return l.u();
    return std::nullopt;
  } else {
    return std::nullopt;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// ---- classify / rh-genus / jfun

// Fermat's quartic is stated with quotient signature (0;2,4,8) in one place
// and (0;2,3,8) in another; Riemann-Hurwitz with 96 automorphisms and genus 3
// only allows the latter.
void flag_fermat_signature(Report& r, const Signature& sig) {
  if (sig == Signature(0, {2, 3, 8}) || sig == Signature(0, {2, 4, 8}))
    r.notes.emplace_back(
        "Fermat's quartic: (0;2,3,8) with 96 automorphisms gives genus 3, while (0;2,4,8) would give genus 7, so "
        "the quotient signature is (0;2,3,8)");
}

void cmd_classify(Report& r, const Params& p) {
  const Signature sig = Signature::parse(p.signature);
  r.input["signature"] = to_string(sig);
  const auto rep = definability_report(sig);
  r.result["case"] = to_string(rep.verdict.which);
  r.result["degree_bound"] = rep.verdict.degree_bound ? json(std::to_string(*rep.verdict.degree_bound)) : json(nullptr);
  r.result["cone_points"] = std::to_string(sig.cone_points());
  r.citations.push_back(rep.verdict.citation);
  r.notes = rep.notes;
  if (sig.cone_points() <= 8) {
    Evidence ev;
    ev.subject = "classification";
    auto orders = sig.orders();
    std::sort(orders.begin(), orders.end());
    std::size_t count = 0;
    bool agree = true;
    do {
      const auto v = definability_report(Signature(sig.genus(), orders)).verdict;
      agree = agree && v.which == rep.verdict.which && v.degree_bound == rep.verdict.degree_bound;
      ++count;
    } while (std::next_permutation(orders.begin(), orders.end()));
    ev.add("verdict does not depend on the order of the cone orders", agree,
           std::to_string(count) + " distinct orderings");
    r.evidence.push_back(ev);
  }
  if (rep.verdict.which == DefinabilityCase::Unclassified) r.exit_code = kNegative;
  flag_fermat_signature(r, sig);
}

void cmd_rh_genus(Report& r, const Params& p) {
  const Signature sig = Signature::parse(p.signature);
  r.input["signature"] = to_string(sig);
  r.input["group_order"] = std::to_string(p.order);
  r.result["genus"] = std::to_string(rh_genus(sig, p.order));
  flag_fermat_signature(r, sig);
  r.citations.emplace_back("Riemann-Hurwitz: 2g-2 = N(n-2-sum 1/k_i) for a smooth regular N-fold cover of (0;k_1,...,k_n)");
}

void cmd_jfun(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  std::visit(
      [&](const auto& l) {
        using F = std::decay_t<decltype(l)>;
        const F j = j_invariant(l);
        r.result["j"] = scalar(j);
        r.result["j_field"] = field_description(Element(j));
        json orbit = json::array();
        for (const auto& v : anharmonic_orbit(l)) orbit.push_back(scalar(v));
        r.result["orbit_size"] = std::to_string(orbit.size());
        r.result["orbit"] = orbit;
        Evidence ev;
        ev.subject = "anharmonic invariance";
        const auto group = anharmonic_group<F>();
        for (std::size_t k = 0; k < group.size(); ++k) {
          const auto img = group[k](l);
          const bool ok = !img.is_infinity() && j_invariant(img.value()) == j;
          ev.add("j(m" + std::to_string(k) + "(lambda)) = j(lambda)", ok,
                 img.is_infinity() ? "infinity" : scalar(img.value()));
        }
        r.evidence.push_back(ev);
      },
      e);
  r.citations.emplace_back("j(lambda) = (1-lambda+lambda^2)^3/(lambda^2(lambda-1)^2), constant on the anharmonic orbit");
}

// ---- kft

const char* kKftFamily = "family x^4+y^4+z^4+lambda(x^2y^2+y^2z^2+z^2x^2), smooth for lambda outside {-2,-1,2}";

void cmd_kft_curve(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  with_family_field(e, [&](const auto& l) {
    using F = std::decay_t<decltype(l)>;
    const auto c = kft_curve(l);
    r.result["quartic"] = poly_str(c.quartic);
    r.result["smooth"] = c.smooth;
    if (c.smooth) {
      r.evidence.push_back(kft_smoothness_certificate(l));
    } else if (const auto q = as_rational(l)) {
      if (auto w = kft_singular_witness(*q)) r.evidence.push_back(*w);
      r.notes.emplace_back("singular member: a common zero of the quartic and its partials is exhibited");
    }
    if constexpr (!is_symbolic_v<F>) r.result["exceptional"] = to_string(kft_exceptional_class(e));
  });
  r.citations.emplace_back(kKftFamily);
}

void cmd_kft_invariants(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  with_family_field(e, [&](const auto& l) {
    const auto inv = kft_invariants(l);
    r.result["G"] = scalar(inv.G);
    r.result["j2"] = scalar(inv.j2);
    r.result["j3"] = scalar(inv.j3);
    r.result["j4"] = scalar(inv.j4);
    r.result["j22"] = scalar(inv.j22);
    if (kft_is_singular_parameter(l))
      r.notes.emplace_back("lambda is outside the smooth family; the values are those of the formulas");
  });
  r.citations.emplace_back("G = 16(1+lambda)^3/(27(2+lambda)) and the genus-one invariants j2, j3, j4, j22 of the family");
}

void cmd_kft_branch(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  r.input["sign"] = std::to_string(p.sign);
  with_family_field(e, [&](const auto& l) {
    using F = std::decay_t<decltype(l)>;
    const auto bd = kft_branch_data(l, p.sign);
    r.result["s^2"] = scalar(F(l * l - l - F(2)));
    r.result["l1"] = ext_str(bd.l1);
    r.result["l2"] = ext_str(bd.l2);
    r.result["mu"] = ext_str(bd.mu);
    r.result["eta_mu"] = ext_str(eta_value(bd.mu));
    r.result["G"] = scalar(kft_G(l));
    r.evidence.push_back(kft_branch_check(l));
  });
  r.citations.emplace_back("branch values l1, l2 of the quotient by S4, normalized by T(0)=0, T(l1)=infinity, T(l2)=1");
  r.citations.emplace_back("F(z) = z^2/(z-1) is the quotient by eta(z) = z/(z-1), and F(mu) = G");
}

void add_separation(Report& r) {
  Evidence ev;
  ev.subject = "separation";
  json table = json::object();
  bool any2 = false, any3 = false;
  for (const auto& s : kft_separation()) {
    table[s.invariant] = {{"differs_from_lambda2", s.differs_from_lambda2},
                          {"differs_from_lambda3", s.differs_from_lambda3}};
    if (s.invariant == "j3") ev.add("j3(lambda2) - j3(lambda) != 0", s.differs_from_lambda2);
    any2 = any2 || s.differs_from_lambda2;
    any3 = any3 || s.differs_from_lambda3;
  }
  ev.add("(G,j2,j3,j4,j22) separates lambda from lambda2", any2);
  ev.add("(G,j2,j3,j4,j22) separates lambda from lambda3", any3);
  r.result["separation"] = table;
  r.evidence.push_back(ev);
}

void cmd_kft_companions(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  with_family_field(e, [&](const auto& l) {
    const auto c = kft_companions(l);
    r.result["lambda2"] = ext_str(c.lambda2);
    r.result["lambda3"] = ext_str(c.lambda3);
    r.result["G"] = scalar(kft_G(l));
    r.evidence.push_back(kft_companion_check(l));
    if (const auto q = as_rational(l)) {
      const auto [v2, v3] = kft_companion_values(*q);
      r.result["values"] = {to_string(v2), to_string(v3)};
    }
    if (is_generic_lambda(l)) add_separation(r);
  });
  r.notes.emplace_back("lambda2 carries the minus sign in front of (1+lambda)s; only the pair {lambda2, lambda3} is intrinsic");
  r.citations.emplace_back("the fiber of G through lambda: 16(1+X)^3 - 27G(lambda)(2+X) = 16(X-lambda)(X-lambda2)(X-lambda3)");
}

void cmd_kft_equivalent(Report& r, const Params& p) {
  const Element e1 = parse_input(r, "lambda1", p.lambda1);
  const Element e2 = parse_input(r, "lambda2", p.lambda2);
  const auto d = kft_equivalent(e1, e2);
  r.result["conformal"] = d.conformal;
  r.result["anticonformal"] = d.anticonformal ? json(*d.anticonformal) : json(nullptr);
  r.result["basis"] = d.basis;
  r.result["exceptional"] = {to_string(kft_exceptional_class(e1)), to_string(kft_exceptional_class(e2))};
  r.citations.emplace_back(
      "outside the exceptional set, members are conformally equivalent iff the parameters agree and anticonformally "
      "equivalent iff one is the complex conjugate of the other");
  r.citations.emplace_back("exceptional set {0, 3(-1+sqrt(-7))/2, 3(-1-sqrt(-7))/2}: Fermat's quartic and Klein's quartic twice");
  if (!d.conformal) r.exit_code = kNegative;
}

void cmd_kft_moduli(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  if (std::holds_alternative<Tower>(e)) throw std::invalid_argument("kft moduli takes lambda in Q, Q(sqrt d) or Q(lambda)");
  const auto fd = kft_moduli_field(e);
  r.result["field"] = fd.field;
  r.result["minimal_polynomial"] = fd.minimal_polynomial ? json(*fd.minimal_polynomial) : json(nullptr);
  r.result["reason"] = fd.reason;
  r.citations.emplace_back("field of moduli Q(lambda) off the exceptional set and Q on it");
}

bool fd_matches(const FieldDescriptor& fd, const std::string& field, const std::string& minpoly) {
  return fd.field == field && fd.minimal_polynomial == minpoly;
}

void cmd_kft_certify(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  with_family_field(e, [&](const auto& l) {
    r.evidence.push_back(kft_group_check(l));
    if (kft_is_singular_parameter(l)) {
      r.notes.emplace_back("lambda is singular: branch and companion checks skipped");
      return;
    }
    r.evidence.push_back(kft_branch_check(l));
    r.evidence.push_back(kft_companion_check(l));
    if (is_generic_lambda(l)) {
      r.evidence.push_back(kft_smoothness_certificate(l));
      add_separation(r);
    }
  });
  r.evidence.push_back(q_invariance_check());

  Evidence boundary;
  boundary.subject = "singular boundary";
  for (long v : {-2L, -1L, 2L}) {
    const auto w = kft_singular_witness(Rational(v));
    boundary.add("singular point at lambda = " + std::to_string(v), w && w->all_passed(),
                 w && !w->certificates.empty() ? w->certificates.front().witness : "none");
  }
  boundary.add("no singular witness at lambda = 1", !kft_singular_witness(Rational(1)).has_value());
  r.evidence.push_back(boundary);

  r.evidence.push_back(klein_automorphism_check());
  Evidence extra;
  extra.subject = "exceptional points";
  const auto fermat = kft_extra_automorphisms(Element(Rational(0)));
  extra.add("[x:iy:z] preserves the Fermat quartic", fermat.fermat.value_or(false));
  extra.add("|<A,B,[x:iy:z]>| mod scalars > 24", fermat.fermat_group_order.value_or(0) > 24,
            fermat.fermat_group_order ? std::to_string(*fermat.fermat_group_order) : "none");
  const auto klein = kft_extra_automorphisms(Element(klein_point()));
  extra.add("order-7 map preserves the quartic at 3(-1+sqrt(-7))/2", klein.klein.value_or(false));
  const auto generic = kft_extra_automorphisms(Element(make_rational(1, 3)));
  extra.add("no extra automorphism at lambda = 1/3", !generic.klein.value_or(false) && !generic.fermat.value_or(false));
  for (const Element& pt : {Element(Rational(0)), Element(klein_point()), Element(klein_point().conj())}) {
    const auto fd = kft_moduli_field(pt);
    extra.add("field of moduli at " + to_string(pt) + " is Q", fd.field == "Q", fd.reason);
  }
  const auto sqrt2 = kft_moduli_field(Element(QuadNumber(Rational(1), Rational(1), Rational(2))));
  extra.add("field of moduli at 1+sqrt(2) is Q(sqrt(2))",
            fd_matches(sqrt2, "Q(sqrt(2))", "X^2-2*X-1"),
            sqrt2.field + ", " + sqrt2.minimal_polynomial.value_or("none"));
  r.evidence.push_back(extra);
  r.evidence.push_back(hyperelliptic_s0_check());

  r.notes.emplace_back("singular set taken as {-2,-1,2}, backed by exact singular points");
  r.notes.emplace_back("the degree 24 of Q is not certified");
  r.citations.emplace_back(kKftFamily);
  r.citations.emplace_back("A = [y:-x:-z] and B = [x:z:y] generate S4 acting on every member; Q = x^2y^2z^2/(x^2+y^2+z^2)^3 is invariant");
}

// ---- homology

void check_exponent(int a) {
  if (a < 2) throw std::invalid_argument("the exponent a must be at least 2");
}

void cmd_homology_genus(Report& r, const Params& p) {
  check_exponent(p.a);
  r.input["a"] = std::to_string(p.a);
  const int g = homology_genus(p.a);
  r.result["genus"] = std::to_string(g);
  Evidence ev;
  ev.subject = "homology genus";
  const long a = p.a;
  ev.add("genus = 1 + a^2(a-2)", g == 1 + a * a * (a - 2), std::to_string(1 + a * a * (a - 2)));
  r.evidence.push_back(ev);
  r.citations.emplace_back("homology cover of (0;a,a,a,a): group Z_a^3, genus from Riemann-Hurwitz");
}

void cmd_homology_certify(Report& r, const Params& p) {
  check_exponent(p.a);
  if (p.a > 16) throw std::invalid_argument("homology certify takes a <= 16");
  r.input["a"] = std::to_string(p.a);
  const Element e = parse_input(r, "lambda", p.lambda);
  r.evidence.push_back(homology_group_check(p.a));
  with_family_field(e, [&](const auto& l) { r.evidence.push_back(legendre_cover_check(l)); });
  Evidence g;
  g.subject = "homology genus";
  g.add("homology_genus(2) = 1", homology_genus(2) == 1, std::to_string(homology_genus(2)));
  r.evidence.push_back(g);
  r.notes.emplace_back("lambda is taken outside {0, 1}");
  r.citations.emplace_back("Legendre curve y^2z = x(x-z)(x-lambda z) with lifts b1, b2, b3 and the degree-8 map Q_lambda");
}

void cmd_homology_moduli(Report& r, const Params& p) {
  const Element e = parse_input(r, "lambda", p.lambda);
  const auto rep = homology_moduli_report(e);
  r.result["j"] = rep.j;
  r.result["orbit"] = rep.orbit;
  r.result["field"] = rep.field;
  r.result["minimal_polynomial"] = rep.minimal_polynomial ? json(*rep.minimal_polynomial) : json(nullptr);
  r.notes = rep.notes;
  r.citations.emplace_back("the field of moduli of a homology cover of (0;a,a,a,a) is Q(j(lambda))");
}

// ---- groups

const std::vector<std::pair<std::string, std::string>> kPrintedSolutions = {
    {"B", "ABA^-1"}, {"ABA^-1", "(BA)B(BA)^-1"}, {"(BA)B(BA)^-1", "B"}};

bool is_kft_signature(const Signature& sig) { return sig == Signature(0, {2, 2, 2, 3}); }

Census run_census(Report& r, const Params& p, Signature& sig) {
  sig = Signature::parse(p.signature);
  r.input["signature"] = to_string(sig);
  r.input["sym"] = std::to_string(p.sym);
  r.input["normalized"] = p.normalized;
  CensusOptions opt;
  opt.threads = p.threads;
  if (p.normalized) {
    if (!is_kft_signature(sig) || p.sym != 4)
      throw std::invalid_argument("--normalized is defined for signature 0,2,2,2,3 with --sym 4");
    opt.normalization = kft_normalization();
  }
  return enumerate_smooth_epis(sig, p.sym, opt);
}

json class_json(const GenVector& v, std::size_t degree, bool normalized) {
  json entries = json::array();
  for (const auto& t : v.entries) entries.push_back(to_string(t));
  json out = {{"entries", entries}};
  if (degree == 4) {
    const auto labels = s4_word_labels();
    std::vector<std::string> names;
    for (const auto& t : v.entries) names.push_back(label_perm(t, labels));
    out["labels"] = names;
    if (normalized) out["solution"] = "x1 -> " + names[0] + ", x2 -> " + names[1];
  }
  return out;
}

void cmd_groups_census(Report& r, const Params& p) {
  Signature sig(0, {2, 2});
  const Census census = run_census(r, p, sig);
  r.result["vectors"] = std::to_string(census.vectors);
  r.result["class_count"] = std::to_string(census.classes.size());
  r.result["acting_group_order"] = std::to_string(census.acting_group_order);
  json classes = json::array();
  for (const auto& c : census.classes) classes.push_back(class_json(c, p.sym, p.normalized));
  r.result["classes"] = classes;

  Evidence ev;
  ev.subject = "census";
  for (std::size_t i = 0; i < census.classes.size(); ++i) {
    const auto problems = gen_vector_problems(census.classes[i], p.sym);
    ev.add("class " + std::to_string(i) + " is a smooth epimorphism", problems.empty(), join(problems, "; "));
  }
  if (p.sym >= 3 && p.sym <= 5) {
    ev.add("Aut(S_m) = Inn(S_m)", automorphism_count(p.sym) == inner_automorphism_count(p.sym),
           std::to_string(automorphism_count(p.sym)));
  }
  if (p.normalized) {
    const auto [A, B] = s4_standard_generators();
    const std::size_t z = centralizer_order({A * A, B * A}, 4);
    ev.add("no nontrivial automorphism fixes A^2 and BA", z == 1, "centralizer order " + std::to_string(z));
    const auto labels = s4_word_labels();
    std::set<std::pair<std::string, std::string>> found;
    for (const auto& c : census.classes) found.insert({label_perm(c.entries[0], labels), label_perm(c.entries[1], labels)});
    const std::set<std::pair<std::string, std::string>> printed(kPrintedSolutions.begin(), kPrintedSolutions.end());
    ev.add("census equals the three listed choices", found == printed && census.classes.size() == 3,
           std::to_string(census.classes.size()) + " classes");
    r.citations.emplace_back(
        "normalization x3 -> A^2, x1x2x3 -> (BA)^-1 with A = (1 2 3 4), B = (3 4); the choices for (x1, x2) are "
        "(B, ABA^-1), (ABA^-1, (BA)B(BA)^-1), ((BA)B(BA)^-1, B)");
  }
  r.evidence.push_back(ev);
  r.citations.emplace_back("smooth epimorphisms onto S_m up to Aut(S_m) correspond to torsion-free normal subgroups with quotient S_m");
}

std::vector<Move> parse_moves(const std::string& text) {
  std::vector<Move> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_move(item);
    if (!m) throw std::invalid_argument("unknown move '" + item + "' (expected Y, Z or W)");
    out.push_back(*m);
  }
  if (out.empty()) throw std::invalid_argument("no moves given");
  return out;
}

void cmd_groups_moves(Report& r, const Params& p) {
  const auto moves = parse_moves(p.moves);
  Signature sig(0, {2, 2});
  const Signature probe = Signature::parse(p.signature);
  const auto& k = probe.orders();
  if (k.size() != 4 || k[0] != 2 || k[1] != 2 || k[2] != 2)
    throw std::invalid_argument("moves act on signatures 0,2,2,2,k");
  const Census census = run_census(r, p, sig);
  std::vector<std::string> names;
  for (Move m : moves) names.emplace_back(to_string(m));
  r.input["moves"] = names;
  const auto mo = classes_connected(census.classes, moves, p.sym);
  json classes = json::array();
  for (const auto& c : census.classes) classes.push_back(class_json(c, p.sym, p.normalized));
  r.result["classes"] = classes;
  r.result["orbit_count"] = std::to_string(mo.orbit_count);
  json orbit = json::array();
  for (auto o : mo.orbit) orbit.push_back(std::to_string(o));
  r.result["orbit"] = orbit;
  json images = json::object();
  for (const auto& [m, img] : mo.image) {
    json row = json::array();
    for (const auto& i : img) row.push_back(i ? json(std::to_string(*i)) : json(nullptr));
    images[to_string(m)] = row;
  }
  r.result["images"] = images;
  r.result["extra_classes"] = std::to_string(mo.extra_classes);

  if (p.normalized) {
    Evidence ev;
    ev.subject = "moves";
    ev.add("the classes form one orbit", mo.orbit_count == 1, std::to_string(mo.orbit_count) + " orbits");
    const auto gens = s4_standard_generators();
    const Perm A = gens.first, B = gens.second;
    const Perm Ai = A.inverse(), BA = B * A;
    const Perm s1 = B, s2 = A * B * Ai, s3 = BA * B * BA.inverse();
    auto vec = [&](const Perm& x1, const Perm& x2) {
      const Perm x3 = A * A;
      return GenVector{sig, {x1, x2, x3, (x1 * x2 * x3).inverse()}};
    };
    const GenVector sol1 = vec(s1, s2), sol2 = vec(s2, s3), sol3 = vec(s3, s1);
    const auto labels = s4_word_labels();
    auto show = [&](const GenVector& v) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < 3; ++i) out.push_back(label_perm(v.entries[i], labels));
      return "(" + join(out, ", ") + ")";
    };
    const GenVector y = hurwitz_move(sol1, Move::Y);
    const GenVector z = hurwitz_move(sol1, Move::Z);
    ev.add("Y sends (B, ABA^-1, A^2) to (ABA^-1, (BA)B(BA)^-1, A^2)", y == sol2, show(y));
    ev.add("Z sends (B, ABA^-1, A^2) to ((BA)B(BA)^-1, B, A^2)", z == sol3, show(z));
    r.evidence.push_back(ev);
  } else {
    r.notes.emplace_back("the moves fix x3, so the cycle type of x3 is constant on each orbit");
  }
  r.citations.emplace_back(
      "moves Y = (x2, P^-1 x1 P, x3), Z = (x1 x2 x1^-1, x1, x3), W = (x2, x3 x1 x3^-1, x3) with P = x1 x2 x3, "
      "induced by self-homeomorphisms of the quotient orbifold");
}

unsigned threads_from_env() {
  const char* v = std::getenv("MODULI_FORGE_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) throw std::invalid_argument("MODULI_FORGE_THREADS must be a positive integer");
  return static_cast<unsigned>(n);
}

}  // namespace

std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  static const std::set<std::string> value_options = {"--lambda", "--lambda1", "--lambda2", "--sign"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (value_options.count(a) && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        args[i + 1][1] != '-') {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

CommandOutcome run_command(const std::vector<std::string>& raw) {
  CommandOutcome outcome;
  Params p;
  bool verbose = false;
  bool no_timing = false;
  std::string command;
  std::function<void(Report&, const Params&)> action;

  CLI::App app{"Exact computations on fields of moduli of Riemann surfaces", "moduli_forge"};
  app.require_subcommand(1);
  app.add_flag("--verbose", verbose, "Print a human summary on standard error");
  app.add_flag("--no-timing", no_timing, "Omit the timing key from the report");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& full,
                  void (*fn)(Report&, const Params&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&command, &action, full, fn] {
      command = full;
      action = fn;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  auto signature = [&](CLI::App* s) { s->add_option("--signature", p.signature, "g,k1,k2,... with the genus first")->required(); };
  auto lambda = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--lambda", p.lambda, "Field element, e.g. -5/2, 3*(-1+sqrt(-7))/2 or lambda");
    if (required) o->required();
  };

  auto* classify = leaf(&app, "classify", "Definability case of a signature", "classify", cmd_classify);
  signature(classify);
  auto* rh = leaf(&app, "rh-genus", "Genus of a smooth regular cover", "rh-genus", cmd_rh_genus);
  signature(rh);
  rh->add_option("--order", p.order, "Group order")->required();
  lambda(leaf(&app, "jfun", "j-invariant and anharmonic orbit", "jfun", cmd_jfun), true);

  CLI::App* kft = group("kft", "The S4-symmetric quartic family");
  lambda(leaf(kft, "curve", "Quartic and smoothness", "kft curve", cmd_kft_curve), true);
  lambda(leaf(kft, "invariants", "G, j2, j3, j4, j22", "kft invariants", cmd_kft_invariants), true);
  auto* branch = leaf(kft, "branch", "Branch data l1, l2, mu", "kft branch", cmd_kft_branch);
  lambda(branch, false);
  branch->add_option("--sign", p.sign, "Branch of the square root, 1 or -1")->check(CLI::IsMember({1, -1}));
  lambda(leaf(kft, "companions", "The other points of the fiber of G", "kft companions", cmd_kft_companions), false);
  auto* equiv = leaf(kft, "equivalent", "Conformal and anticonformal equivalence", "kft equivalent", cmd_kft_equivalent);
  equiv->add_option("--lambda1", p.lambda1, "First parameter")->required();
  equiv->add_option("--lambda2", p.lambda2, "Second parameter")->required();
  lambda(leaf(kft, "moduli", "Field of moduli", "kft moduli", cmd_kft_moduli), true);
  lambda(leaf(kft, "certify", "Certificate battery", "kft certify", cmd_kft_certify), false);

  CLI::App* hom = group("homology", "Homology covers of (0;a,a,a,a)");
  leaf(hom, "genus", "Genus of the homology cover", "homology genus", cmd_homology_genus)
      ->add_option("--a", p.a, "Cone order a >= 2")
      ->required();
  auto* hcert = leaf(hom, "certify", "Group and Legendre certificates", "homology certify", cmd_homology_certify);
  hcert->add_option("--a", p.a, "Cone order a >= 2");
  lambda(hcert, false);
  lambda(leaf(hom, "moduli", "Field of moduli Q(j(lambda))", "homology moduli", cmd_homology_moduli), true);

  CLI::App* groups = group("groups", "Generating vectors onto symmetric groups");
  for (auto [name, help, full, fn] :
       {std::tuple{"census", "Smooth epimorphisms up to automorphisms", "groups census", cmd_groups_census},
        std::tuple{"moves", "Orbits under the moves Y, Z, W", "groups moves", cmd_groups_moves}}) {
    auto* s = leaf(groups, name, help, full, fn);
    signature(s);
    s->add_option("--sym", p.sym, "Degree m of S_m")->check(CLI::Range(2, 5));
    s->add_flag("--normalized", p.normalized, "Pin x3 -> A^2 and x1x2x3 -> (BA)^-1");
    if (std::string(name) == "moves") s->add_option("--moves", p.moves, "Comma-separated subset of Y,Z,W");
  }

  const std::vector<std::string> args = join_negative_values(raw);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    outcome.out = out.str();
    outcome.exit_code = kOk;
    return outcome;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    outcome.out = out.str();
    outcome.exit_code = kOk;
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.err = std::string("error: ") + e.what() + "\n\n" + app.help();
    outcome.exit_code = kInputError;
    return outcome;
  }

  Report r;
  r.command = command;
  r.argv = raw;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    p.threads = threads_from_env();
    action(r, p);
    r.settle_exit_code();
  } catch (const std::invalid_argument& e) {
    r.error = e.what();
    r.exit_code = kInputError;
  } catch (const std::domain_error& e) {
    r.error = e.what();
    r.exit_code = kInputError;
  } catch (const std::exception& e) {
    r.error = std::string("internal error: ") + e.what();
    r.exit_code = kCertificateFailed;
  }
  if (r.exit_code == kInputError) {
    r.result = json::object();
    r.evidence.clear();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  outcome.out = r.to_json(!no_timing);
  outcome.exit_code = r.exit_code;
  if (verbose) outcome.err = r.summary();
  else if (!r.error.empty()) outcome.err = "error: " + r.error + "\n";
  return outcome;
}

}  // namespace moduli::cli
