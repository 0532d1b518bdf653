// One PASS/FAIL line per acceptance criterion. `--write-golden` refreshes the
// golden reports instead of comparing against them.
#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "moduli/groups.hpp"
#include "moduli/homology.hpp"
#include "moduli/kft.hpp"
#include "moduli/moebius.hpp"
#include "moduli/signatures.hpp"
#include "moduli_cli/commands.hpp"
#include "moduli_cli/report.hpp"

using namespace moduli;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class Ev>
  void all(const Ev& ev) {
    for (const auto& c : ev.certificates) expect(c.passed, ev.subject + ": " + c.name + " [" + c.witness + "]");
  }
  template <class Ev>
  void strict(const Ev& ev, const std::string& name) {
    bool found = false;
    for (const auto& c : ev.certificates)
      if (c.name == name) {
        found = true;
        expect(c.passed && c.witness == "STRICT-EQUAL", name + " is " + c.witness);
      }
    expect(found, "missing certificate " + name);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

RatFunc lam() { return RatFunc::lambda(); }

void classification(Checks& c) {
  auto verdict = [](std::vector<int> k) { return classify_quadrangular(Signature(0, std::move(k))); };
  const auto v1 = verdict({2, 2, 2, 3});
  c.expect(v1.which == DefinabilityCase::Case1 && v1.degree_bound == 1, "(0;2,2,2,3)");
  const auto v2 = verdict({2, 2, 3, 3});
  c.expect(v2.which == DefinabilityCase::Case2 && v2.degree_bound == 2, "(0;2,2,3,3)");
  for (int a = 2; a <= 12; ++a) {
    const auto v3 = verdict({a, a, a, a});
    c.expect(v3.which == DefinabilityCase::Case3 && v3.degree_bound == 4, "(0;a,a,a,a) for a = " + std::to_string(a));
  }
  // every multiset of four orders from {2..7}, in all 24 orderings
  for (int a = 2; a <= 7; ++a)
    for (int b = a; b <= 7; ++b)
      for (int cc = b; cc <= 7; ++cc)
        for (int d = cc; d <= 7; ++d) {
          std::array<int, 4> k{a, b, cc, d};
          std::vector<int> mult;
          for (int v = 2; v <= 7; ++v)
            if (const auto m = std::count(k.begin(), k.end(), v)) mult.push_back(static_cast<int>(m));
          std::sort(mult.begin(), mult.end());
          DefinabilityCase expected = DefinabilityCase::Case1;
          int bound = 1;
          if (mult == std::vector<int>{2, 2}) expected = DefinabilityCase::Case2, bound = 2;
          if (mult == std::vector<int>{4}) expected = DefinabilityCase::Case3, bound = 4;
          std::array<int, 4> p = k;
          do {
            const auto v = verdict({p.begin(), p.end()});
            c.expect(v.which == expected && v.degree_bound == bound,
                     to_string(Signature(0, {p.begin(), p.end()})) + " gives " + to_string(v.which));
          } while (std::next_permutation(p.begin(), p.end()));
        }
}

void riemann_hurwitz(Checks& c) {
  const std::vector<std::pair<std::vector<int>, long>> table{
      {{2, 2, 2, 3}, 24}, {{2, 3, 7}, 168}, {{2, 3, 8}, 96}, {{2, 4, 6}, 48}};
  for (const auto& [orders, n] : table) {
    const int g = rh_genus(Signature(0, orders), n);
    c.expect(g == 3, to_string(Signature(0, orders)) + " gives " + std::to_string(g));
  }
  for (int a = 2; a <= 12; ++a) {
    const int closed = 1 + a * a * (a - 2);
    c.expect(rh_genus(Signature(0, {a, a, a, a}), static_cast<long>(a) * a * a) == closed, "rh for a = " + std::to_string(a));
    c.expect(homology_genus(a) == closed, "homology_genus(" + std::to_string(a) + ")");
  }
}

void kft_battery(Checks& c) {
  const auto group = kft_group_check(lam());
  c.all(group);
  for (const char* rel : {"A^4 = 1", "B^2 = 1", "(BA)^3 = 1"}) c.strict(group, rel);
  const auto q = q_invariance_check();
  c.all(q);
  c.expect(!q.certificates.empty(), "Q invariance has certificates");
}

void branch_identities(Checks& c) {
  const auto ev = kft_branch_check(lam());
  c.all(ev);
  using Ext = QuadExt<RatFunc>;
  const auto plus = kft_branch_data(lam(), 1);
  const auto minus = kft_branch_data(lam(), -1);
  const Ext G(kft_G(lam()));
  c.expect(plus.mu.D() && *plus.mu.D() == lam() * lam() - lam() - RatFunc(2), "branch radicand");
  c.expect(F_value(plus.mu) == G, "F(mu) = G");
  const auto T = normalizing_map(ProjPoint<Ext>::finite(Ext(0)), ProjPoint<Ext>::finite(plus.l1),
                                 ProjPoint<Ext>::finite(plus.l2));
  c.expect(T(ProjPoint<Ext>::infinity()) == ProjPoint<Ext>::finite(plus.mu), "T(infinity) = mu");
  c.expect(minus.mu == eta_value(plus.mu), "sign flip gives eta(mu)");
  c.expect(plus.mu + eta_value(plus.mu) == G, "mu + eta(mu) = G");
}

void companion_fiber(Checks& c) {
  c.all(kft_companion_check(lam()));
  const auto comp = kft_companions(lam());
  c.expect(comp.lambda2.D() && *comp.lambda2.D() == lam() * lam() - RatFunc(4), "companion radicand");
  const Rational at = Rational::parse("-5/2");
  c.expect(kft_G(at) == Rational(4), "G(-5/2) = 4");
  const auto [a, b] = kft_companion_values(at);
  const std::set<std::string> got{to_string(a), to_string(b)};
  c.expect(got == std::set<std::string>{"-5/2", "2"}, "companions at -5/2");
}

void separation(Checks& c) {
  bool j3 = false, any2 = false, any3 = false;
  for (const auto& s : kft_separation()) {
    if (s.invariant == "j3") j3 = s.differs_from_lambda2;
    any2 = any2 || s.differs_from_lambda2;
    any3 = any3 || s.differs_from_lambda3;
  }
  c.expect(j3, "j3(lambda2) - j3(lambda) != 0");
  c.expect(any2 && any3, "the five invariants separate lambda from both companions");
}

void exceptional_points(Checks& c) {
  c.expect(klein_map_order() == 7, "Klein map has projective order 7");
  const auto k = klein_automorphism_check();
  c.all(k);
  const auto cofactor = map_preserves_curve(klein_map(), kft_quartic(klein_point()));
  c.expect(cofactor.has_value(), "Klein map preserves the curve at the Klein point");
  for (const Element& p0 : {Element(Rational(0)), Element(klein_point()), Element(klein_point().conj())})
    c.expect(kft_moduli_field(p0).field == "Q", "field of moduli Q at " + to_string(p0));
  c.expect(kft_moduli_field(Element(lam())).field == "Q(lambda)", "field of moduli Q(lambda) for symbolic lambda");
  const auto r2 = kft_moduli_field(Element(QuadNumber(Rational(1), Rational(1), Rational(2))));
  c.expect(r2.field == "Q(sqrt(2))", "field of moduli at 1+sqrt(2)");
  c.expect(kft_moduli_field(Element(Rational::parse("1/3"))).field == "Q", "field of moduli at 1/3");
}

void group_census(Checks& c, const nlohmann::json& fixture) {
  const Signature sig(0, {2, 2, 2, 3});
  const auto [A, B] = s4_standard_generators();
  const std::map<std::string, Perm> ab{{"A", A}, {"B", B}};
  auto w = [&](const char* t) { return perm_word_eval(parse_word(t), ab, 4); };
  auto vec = [&](const Perm& x1, const Perm& x2) {
    const Perm x3 = w("A^2");
    return GenVector{sig, {x1, x2, x3, (x1 * x2 * x3).inverse()}};
  };
  CensusOptions opt;
  opt.normalization = kft_normalization();
  const Census norm = enumerate_smooth_epis(sig, 4, opt);
  const auto labels = s4_word_labels();
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& v : norm.classes) got.insert({label_perm(v.entries[0], labels), label_perm(v.entries[1], labels)});
  c.expect(norm.classes.size() == 3 &&
               got == std::set<std::pair<std::string, std::string>>{
                          {"B", "ABA^-1"}, {"ABA^-1", "(BA)B(BA)^-1"}, {"(BA)B(BA)^-1", "B"}},
           "normalized census lists the three choices");
  const auto s1 = vec(w("B"), w("ABA^-1"));
  c.expect(hurwitz_move(s1, Move::Y) == vec(w("ABA^-1"), w("(BA)B(BA)^-1")), "Y sends (1) to (2)");
  c.expect(hurwitz_move(s1, Move::Z) == vec(w("(BA)B(BA)^-1"), w("B")), "Z sends (1) to (3)");
  const auto orbits = classes_connected(norm.classes, {Move::Y, Move::Z, Move::W}, 4);
  c.expect(orbits.orbit_count == 1, "normalized classes form one move orbit");
  const Census full = enumerate_smooth_epis(sig, 4);
  c.expect(full.classes.size() == fixture["census"]["unnormalized_classes"].get<std::size_t>(),
           "unnormalized class count matches the oracle fixture");
  c.expect(full.vectors == fixture["census"]["unnormalized_vectors"].get<std::size_t>(),
           "unnormalized vector count matches the oracle fixture");
}

void homology_certificates(Checks& c) {
  const auto ev = legendre_cover_check(lam());
  c.all(ev);
  c.strict(ev, "(ii) b2^2 = 1");
  std::size_t squares = 0, values = 0;
  for (const auto& cert : ev.certificates) {
    if (cert.name.rfind("(vi)", 0) == 0 && cert.passed) ++squares;
    if (cert.name.rfind("(v) ", 0) == 0 && cert.passed) ++values;
  }
  c.expect(squares == 3, "three perfect-square extractions");
  c.expect(values == 4, "Q maps infinity, 0, 1, lambda to lambda");
  c.expect(homology_genus(2) == 1, "homology_genus(2) = 1");
}

void j_machinery(Checks& c) {
  const RatFunc j = j_invariant(lam());
  for (const auto& m : anharmonic_group<RatFunc>()) {
    const auto image = m(ProjPoint<RatFunc>::finite(lam()));
    c.expect(!image.is_infinity() && j_invariant(image.value()) == j, "j(m(lambda)) = j(lambda) for " + to_string(m));
  }
  const auto orbit = anharmonic_orbit(Rational(-1));
  std::set<std::string> got;
  for (const auto& x : orbit) got.insert(to_string(x));
  c.expect(got == std::set<std::string>{"-1", "2", "1/2"}, "orbit of -1");
  c.expect(j_invariant(Rational(-1)) == Rational::parse("27/4"), "j(-1) = 27/4");
  const auto report = homology_moduli_report(Element(Rational(-1)));
  c.expect(report.field == "Q" && report.j == "27/4", "homology_moduli_report(-1)");
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> argv;
  int exit_code;
};

const std::vector<GoldenCase> kGolden{
    {"classify_0_2_2_2_3.json", {"classify", "--signature", "0,2,2,2,3"}, 0},
    {"kft_invariants_-5_2.json", {"kft", "invariants", "--lambda", "-5/2"}, 0},
    {"groups_census_normalized.json", {"groups", "census", "--signature", "0,2,2,2,3", "--sym", "4", "--normalized"}, 0},
};

// The report minus its separate timing key, serialized as the tool does.
std::string untimed(const std::string& out) {
  auto j = nlohmann::json::parse(out);
  j.erase("timing");
  return j.dump(2) + "\n";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void cli_contract(Checks& c, bool write_golden) {
  const std::filesystem::path dir = MODULI_GOLDEN_DIR;
  for (const auto& g : kGolden) {
    const auto first = cli::run_command(g.argv);
    const auto second = cli::run_command(g.argv);
    c.expect(first.exit_code == g.exit_code, g.file + " exit code " + std::to_string(first.exit_code));
    const std::string a = untimed(first.out), b = untimed(second.out);
    c.expect(a == b, g.file + " differs between runs");
    if (write_golden) {
      std::ofstream(dir / g.file, std::ios::binary) << a;
    } else {
      c.expect(std::filesystem::exists(dir / g.file) && slurp(dir / g.file) == a, g.file + " differs from golden");
    }
  }
  auto exit_of = [](std::vector<std::string> argv) { return cli::run_command(argv).exit_code; };
  c.expect(exit_of({"kft", "certify", "--lambda", "lambda"}) == cli::kOk, "kft certify exits 0");
  c.expect(exit_of({"homology", "certify", "--a", "2", "--lambda", "lambda"}) == cli::kOk, "homology certify exits 0");
  c.expect(exit_of({"classify", "--signature", "0,2,2,2,2,2"}) == cli::kNegative, "unclassified exits 1");
  c.expect(exit_of({"kft", "equivalent", "--lambda1", "1/3", "--lambda2", "1/4"}) == cli::kNegative,
           "not equivalent exits 1");
  c.expect(exit_of({"kft", "curve", "--lambda", "sqrt(2)+sqrt(3)"}) == cli::kInputError, "mixed radicals exit 2");
  c.expect(exit_of({"frobnicate"}) == cli::kInputError, "unknown subcommand exits 2");
  cli::Report failed;
  Evidence ev;
  ev.subject = "contract";
  ev.add("a failing certificate", false, "witness");
  failed.evidence.push_back(ev);
  failed.settle_exit_code();
  c.expect(failed.exit_code == cli::kCertificateFailed, "failed certificate exits 3");
}

nlohmann::json load_fixture() {
  std::ifstream in(MODULI_FIXTURE_DIR "/oracle_values.json");
  return nlohmann::json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  const bool write_golden = argc > 1 && std::string(argv[1]) == "--write-golden";
  const nlohmann::json fixture = load_fixture();
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"classification of quadrangular signatures", classification},
      {"Riemann-Hurwitz table", riemann_hurwitz},
      {"S4 certificates on the symbolic quartic", kft_battery},
      {"symbolic branch identities", branch_identities},
      {"companion fiber identity", companion_fiber},
      {"separation by the invariant tuple", separation},
      {"exceptional points and fields of moduli", exceptional_points},
      {"group census and moves", [&](Checks& c) { group_census(c, fixture); }},
      {"Legendre and homology certificates", homology_certificates},
      {"j-invariant machinery", j_machinery},
      {"CLI golden reports and exit codes", [&](Checks& c) { cli_contract(c, write_golden); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks checks;
    try {
      criteria[i].second(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = checks.failures().empty();
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << "\n";
    for (const auto& f : checks.failures()) std::cout << "    " << f << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
