#pragma once

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "moduli/element.hpp"
#include "moduli/quadext.hpp"
#include "moduli/ratfunc.hpp"
#include "moduli/rational.hpp"

namespace testing {

inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(MODULI_FIXTURE_DIR "/oracle_values.json");
    if (!in) throw std::runtime_error("missing oracle fixture");
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline moduli::Rational Q(const std::string& s) { return moduli::Rational::parse(s); }
inline moduli::RatFunc lam() { return moduli::RatFunc::lambda(); }

/// a + b*sqrt(d).
inline moduli::QuadNumber qn(const std::string& a, const std::string& b, long d) {
  return moduli::QuadNumber(Q(a), Q(b), moduli::Rational(d));
}

/// Small random rationals for property tests; fixed seeds keep runs reproducible.
class RandomQ {
 public:
  explicit RandomQ(unsigned seed) : gen_(seed) {}
  moduli::Rational operator()() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return moduli::make_rational(num(gen_), den(gen_));
  }
  moduli::Rational nonzero() {
    for (;;) {
      auto q = (*this)();
      if (!q.is_zero()) return q;
    }
  }
  moduli::RatFunc ratfunc() {
    using moduli::RatFunc;
    RatFunc num = RatFunc((*this)()) + RatFunc((*this)()) * lam() + RatFunc((*this)()) * lam() * lam();
    RatFunc den = RatFunc(nonzero()) + RatFunc((*this)()) * lam();
    return num / den;
  }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace testing
