#include "doctest.h"
#include "moduli/errors.hpp"
#include "moduli/homology.hpp"
#include "moduli/kft.hpp"
#include "moduli/multipoly.hpp"
#include "moduli/projmap.hpp"
#include "support.hpp"

using namespace moduli;
using testing::lam;
using testing::Q;

namespace {

using MP = MultiPoly<Rational>;
using MR = MultiPoly<RatFunc>;

MP var(std::size_t i) { return MP::variable(3, i); }

}  // namespace

TEST_CASE("univariate division and gcd") {
  const QPoly x = QPoly::x();
  const QPoly a = (x - QPoly(Rational(1))) * (x + QPoly(Rational(2))) * (x + QPoly(Rational(2)));
  const QPoly b = (x + QPoly(Rational(2))) * (x - QPoly(Rational(5)));
  CHECK(gcd(a, b) == x + QPoly(Rational(2)));
  const auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("univ_perfect_square") {
  using P = UniPoly<RatFunc>;
  const P w = P::x();
  const P l(lam());
  const P sq = w * w - l;
  const P num0 = sq * sq - P(RatFunc(4)) * w * (w - P(RatFunc(1))) * (w - l);
  const auto r0 = perfect_square(num0);
  REQUIRE(r0);
  CHECK(r0->first == RatFunc(1));
  CHECK(r0->second == w * w - P(RatFunc(2)) * w + l);

  const P den = sq * sq - P(RatFunc(4)) * l * w * (w - P(RatFunc(1))) * (w - l);
  const auto rd = perfect_square(den);
  REQUIRE(rd);
  CHECK(rd->second == w * w - P(RatFunc(2)) * l * w + l);

  const QPoly x = QPoly::x();
  CHECK_FALSE(perfect_square(x * x + QPoly(Rational(1))).has_value());
  const auto scaled = perfect_square((x * x + QPoly(Rational(1))) * (x * x + QPoly(Rational(1))) * QPoly(Rational(3)));
  REQUIRE(scaled);
  CHECK(scaled->first == 3);
}

TEST_CASE("multivariate arithmetic and partial derivatives") {
  const MP x = var(0), y = var(1), z = var(2);
  const MP f = x * x * y + MP::constant(3, Rational(3)) * y * z * z;
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 3);
  CHECK(partial_derivative(f, 0) == MP::constant(3, Rational(2)) * x * y);
  CHECK(partial_derivative(f, 2) == MP::constant(3, Rational(6)) * y * z);
  CHECK(to_string(x * x - y) == "x^2-y");
  CHECK_THROWS_AS(x + MP::variable(2, 0), ContextError);
}

TEST_CASE("mp_divides") {
  const MP x = var(0), y = var(1);
  CHECK(mp_divides(x, x * x * y) == std::optional<MP>(x * y));
  CHECK(mp_divides(x + y, x * x - y * y) == std::optional<MP>(x - y));
  CHECK_FALSE(mp_divides(x + y, x * x + y * y).has_value());
  CHECK_THROWS(mp_divides(MP(3), x));

  const auto quartic = kft_quartic(lam());
  const auto A = kft_map_A<RatFunc>();
  const auto q = mp_divides(quartic, A.pullback(quartic));
  REQUIRE(q);
  CHECK(*q == MR::constant(3, RatFunc(1)));
}

TEST_CASE("mp_compose") {
  const auto A = kft_map_A<Rational>();
  const auto AA = mp_compose(A, A);
  const MP x = var(0), y = var(1), z = var(2);
  CHECK(AA[0] == -x);
  CHECK(AA[1] == -y);
  CHECK(AA[2] == z);
  const auto id = ProjMap<Rational>::identity(3);
  CHECK(mp_compose(id, A)[0] == A[0]);
  CHECK_THROWS_AS(mp_compose(ProjMap<Rational>::identity(2), A), ContextError);

  const auto maps = legendre_maps(lam());
  const auto b22 = mp_compose(maps.b2, maps.b2);
  const auto X = MR::variable(3, 0), Y = MR::variable(3, 1), Z = MR::variable(3, 2);
  const MR l2 = MR::constant(3, lam() * lam());
  CHECK(b22[0] == l2 * X * X * X * Z);
  CHECK(b22[1] == l2 * X * X * Y * Z);
  CHECK(b22[2] == l2 * X * X * Z * Z);
}

TEST_CASE("composition is associative") {
  testing::RandomQ rnd(99);
  std::vector<ProjMap<Rational>> maps;
  for (int k = 0; k < 3; ++k) {
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (auto& row : m)
      for (auto& e : row) e = rnd();
    maps.push_back(ProjMap<Rational>::linear(m));
  }
  const MP x = var(0), y = var(1), z = var(2);
  maps.push_back(ProjMap<Rational>({x * y, y * z, z * x}));
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto lhs = mp_compose(mp_compose(maps[i], maps[j]), maps[k]);
        const auto rhs = mp_compose(maps[i], mp_compose(maps[j], maps[k]));
        for (std::size_t c = 0; c < 3; ++c) CHECK(lhs[c] == rhs[c]);
      }
}

TEST_CASE("proj_equal") {
  const auto A = kft_map_A<RatFunc>();
  const auto B = kft_map_B<RatFunc>();
  const auto id = ProjMap<RatFunc>::identity(3);
  CHECK(proj_equal(mp_power(A, 4), id).kind == ProjEquality::StrictEqual);
  CHECK(proj_equal(A, B).kind == ProjEquality::NotEqual);
  const auto maps = legendre_maps(lam());
  CHECK(proj_equal(mp_compose(maps.b2, maps.b2), id).kind == ProjEquality::StrictEqual);
  // a scalar multiple is the same projective map
  const auto twice = ProjMap<RatFunc>::linear({{RatFunc(2), RatFunc(0), RatFunc(0)},
                                               {RatFunc(0), RatFunc(2), RatFunc(0)},
                                               {RatFunc(0), RatFunc(0), RatFunc(2)}});
  CHECK(proj_equal(twice, id).kind == ProjEquality::StrictEqual);
  CHECK_THROWS_AS(proj_equal(ProjMap<RatFunc>::identity(2), id), ContextError);
}

TEST_CASE("map_preserves_curve") {
  const auto quartic = kft_quartic(lam());
  const auto B = kft_map_B<RatFunc>();
  const auto q = map_preserves_curve(B, quartic);
  REQUIRE(q);
  CHECK(*q == MR::constant(3, RatFunc(1)));

  const auto maps = legendre_maps(lam());
  const auto cubic = legendre_cubic(lam());
  const auto c3 = map_preserves_curve(maps.b3, cubic);
  REQUIRE(c3);
  CHECK(c3->degree() == 3);
  CHECK_FALSE(c3->is_zero());

  const MP x = var(0), y = var(1);
  const MP bad = x * x * x * x + MP::constant(3, Rational(2)) * y * y * y * y;
  CHECK_FALSE(map_preserves_curve(kft_map_A<Rational>(), bad).has_value());
}
