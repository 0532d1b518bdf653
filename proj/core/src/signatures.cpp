#include "moduli/signatures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "moduli/rational.hpp"

namespace moduli {

Signature::Signature(int genus, std::vector<int> orders) : genus_(genus), orders_(std::move(orders)) {
  if (genus_ < 0) throw std::invalid_argument("signature genus must be non-negative");
  for (int k : orders_)
    if (k < 2) throw std::invalid_argument("cone orders must be at least 2, got " + std::to_string(k));
  if (genus_ == 0 && orders_.size() < 2) throw std::invalid_argument("a genus-0 signature needs at least two cone points");
  if (genus_ == 0 && orders_.size() == 2 && orders_[0] != orders_[1])
    throw std::invalid_argument("a genus-0 signature with two cone points needs equal orders");
}

Signature Signature::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("signature: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw std::invalid_argument("signature: '" + item + "' is not an integer");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("signature: expected g,k1,k2,...");
  const int g = values.front();
  values.erase(values.begin());
  return {g, std::move(values)};
}

std::string to_string(const Signature& sig) {
  std::string out = "(" + std::to_string(sig.genus()) + ";";
  for (std::size_t i = 0; i < sig.orders().size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(sig.orders()[i]);
  }
  return out + ")";
}

int rh_genus(const Signature& sig, long group_order) {
  if (sig.genus() != 0) throw std::invalid_argument("rh_genus expects a genus-0 signature");
  if (group_order < 1) throw std::invalid_argument("group order must be positive");
  Rational chi = Rational(static_cast<long>(sig.cone_points()) - 2);
  for (int k : sig.orders()) chi -= make_rational(1, k);
  const Rational two_g_minus_two = Rational(group_order) * chi;
  const Rational g = (two_g_minus_two + Rational(2)) / Rational(2);
  if (!g.is_integer() || g.sign() < 0)
    throw std::invalid_argument("orders incompatible with group order: Riemann-Hurwitz gives g = " + to_string(g));
  return static_cast<int>(g.num().get_si());
}

const char* to_string(DefinabilityCase c) {
  switch (c) {
    case DefinabilityCase::Quasiplatonic: return "QUASIPLATONIC";
    case DefinabilityCase::Case1: return "CASE1";
    case DefinabilityCase::Case2: return "CASE2";
    case DefinabilityCase::Case3: return "CASE3";
    case DefinabilityCase::Unclassified: return "UNCLASSIFIED";
  }
  return "?";
}

DefinabilityVerdict classify_quadrangular(const Signature& sig) {
  if (sig.cone_points() != 4) throw std::invalid_argument("quadrangular classification needs exactly four cone orders");
  std::map<int, int> multiplicity;
  for (int k : sig.orders()) ++multiplicity[k];
  std::vector<int> pattern;
  for (const auto& [k, m] : multiplicity) pattern.push_back(m);
  std::sort(pattern.begin(), pattern.end());

  DefinabilityVerdict v;
  if (std::find(pattern.begin(), pattern.end(), 1) != pattern.end()) {
    v.which = DefinabilityCase::Case1;
    v.degree_bound = 1;
    v.citation =
        "quadrangular quasiplatonic: one cone order differs from the other three, so the surface is definable "
        "over its field of moduli";
  } else if (pattern == std::vector<int>{2, 2}) {
    v.which = DefinabilityCase::Case2;
    v.degree_bound = 2;
    v.citation =
        "cone orders (a,b,a,b) with a != b: definable over the field of moduli or over a degree two extension of it";
  } else {
    v.which = DefinabilityCase::Case3;
    v.degree_bound = 4;
    v.citation = "cone orders (a,a,a,a): definable over an extension of degree at most four of the field of moduli";
  }
  return v;
}

DefinabilityReport definability_report(const Signature& sig) {
  DefinabilityReport r;
  if (sig.genus() == 0 && sig.cone_points() == 3) {
    r.verdict.which = DefinabilityCase::Quasiplatonic;
    r.verdict.degree_bound = 1;
    r.verdict.citation = "Wolfart: quasiplatonic surfaces (triangle quotient) are definable over their field of moduli";
    return r;
  }
  if (sig.genus() == 0 && sig.cone_points() == 4) {
    r.verdict = classify_quadrangular(sig);
    if (r.verdict.which == DefinabilityCase::Case1) {
      r.notes.emplace_back(
          "when the quotient is by the full automorphism group, with cone points infinity, 0, 1, lambda and "
          "lambda carrying the distinct order, the field of moduli is a finite extension of Q(j(lambda))");
    }
    return r;
  }
  r.verdict.which = DefinabilityCase::Unclassified;
  r.verdict.citation = "only genus-0 signatures with three or four cone points are classified";
  return r;
}

}  // namespace moduli
