#include "doctest.h"

#include "apverify/curves.hpp"

#include <random>

using namespace apv;

namespace {

PolyZ poly_z(std::vector<long> asc) {
  std::vector<Int> c;
  for (long x : asc) c.emplace_back(x);
  return PolyZ(std::move(c));
}

const std::vector<long> kF0 = {-16, 0, 640, 0, 1160, 0, 680, 0, 55, 0, 2};
const std::vector<long> kF1 = {112, 480,  1520, 2880, 3880, 3024,
                               1840, 720, 215,  30,   1};
const std::vector<long> kF2 = {368,   2880,  9280, 17280, 21320, 18144,
                               10760, 4320, 1135, 180,   14};

}  // namespace

TEST_CASE("family polynomials match the printed models") {
  CHECK(build_family(0).f == poly_z(kF0));
  CHECK(build_family(1).f == poly_z(kF1));
  CHECK(build_family(2).f == poly_z(kF2));
}

TEST_CASE("evaluation anchors") {
  PolyZ f0 = build_family(0).f;
  CHECK(eval(f0, Int(0)) == -16);
  CHECK(eval(f0, Int(1)) == 2521);  // sum of the printed coefficients
}

TEST_CASE("quintic unit expansion: (1+sqrt2)^5 = 41 + 29 sqrt2") {
  CurveFamily fam = build_family(0);
  Int g{0}, h{0};
  for (int i = 0; i <= 5; ++i) {
    g += fam.g[static_cast<std::size_t>(i)];
    h += fam.h[static_cast<std::size_t>(i)];
  }
  CHECK(g == 41);
  CHECK(h == 29);
}

TEST_CASE("reflection f_{-j}(x) = f_j(-x)") {
  CHECK(reflection_check(1));
  CHECK(reflection_check(2));
  SUBCASE("j = 0 forces an even polynomial") {
    CHECK(reflection_check(0));
    PolyZ f0 = build_family(0).f;
    for (std::size_t i = 1; i < f0.c.size(); i += 2) CHECK(f0.c[i] == 0);
  }
}

TEST_CASE("sqrt2 splitting identity for every j") {
  for (int j = -2; j <= 2; ++j) CHECK(sqrt2_split_check(j));
}

TEST_CASE("conjugation identity between the +-j families") {
  for (int j = 0; j <= 2; ++j) CHECK(conjugation_check(j));
}

TEST_CASE("dehomogenization identity on random parity-correct (u, v)") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<long> pick(-12, 12);
  for (int j = -2; j <= 2; ++j) {
    CurveFamily fam = build_family(j);
    for (int trial = 0; trial < 25; ++trial) {
      Int u(2 * pick(rng) + 1);  // odd
      Int v(2 * pick(rng) + ((j + 1) % 2 + 2) % 2);
      if (v == 0) continue;
      Int g = 0, h = 0;
      for (int i = 0; i <= 5; ++i) {
        g += fam.g[static_cast<std::size_t>(i)] *
             pow_int(u, static_cast<unsigned long>(5 - i)) * pow_int(v, static_cast<unsigned long>(i));
        h += fam.h[static_cast<std::size_t>(i)] *
             pow_int(u, static_cast<unsigned long>(5 - i)) * pow_int(v, static_cast<unsigned long>(i));
      }
      Rat x(u, v);
      x.canonicalize();
      Rat lhs(2 * g * g - h * h);
      Rat rhs = eval(to_rational(fam.f), x) * Rat(pow_int(v, 10));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("trivial progression maps to infinity points") {
  SUBCASE("(1,1,1,1) with j=1, (u,v)=(1,0) gives inf+") {
    ProgressionWitness w{Int(1), Int(1), Int(1), Int(1), 1, Int(1), Int(0)};
    auto [j, p] = progression_to_point(w);
    CHECK(j == 1);
    CHECK(p.at_infinity);
    CHECK(p.sign == +1);
  }
  SUBCASE("sign flip lands on inf-") {
    ProgressionWitness w{Int(-1), Int(1), Int(1), Int(1), 1, Int(1), Int(0)};
    auto [j, p] = progression_to_point(w);
    CHECK(p.at_infinity);
    CHECK(p.sign == -1);
    (void)j;
  }
  SUBCASE("even v with j = 1 violates the parity constraint") {
    ProgressionWitness w{Int(1), Int(1), Int(1), Int(1), 1, Int(1), Int(2)};
    CHECK_THROWS_AS(progression_to_point(w), MathError);
  }
}

TEST_CASE("points at infinity reconstruct the unique progression") {
  SUBCASE("j = 1, inf+") {
    auto w = point_to_progression(1, CurvePoint::infinity(+1));
    REQUIRE(w.has_value());
    CHECK(w->a == 1);
    CHECK(w->b == 1);
    CHECK(w->c == 1);
    CHECK(w->d == 1);
  }
  SUBCASE("j = 1, inf- is the sign variant") {
    auto w = point_to_progression(1, CurvePoint::infinity(-1));
    REQUIRE(w.has_value());
    CHECK(w->a == -1);
    CHECK(w->b * w->b == 1);
    CHECK(w->c * w->c == 1);
    CHECK(w->d == 1);
  }
  SUBCASE("j = -1, inf+ through the reflection") {
    auto w = point_to_progression(-1, CurvePoint::infinity(+1));
    REQUIRE(w.has_value());
    CHECK(w->a * w->a == 1);
    CHECK(w->b * w->b == 1);
    CHECK(w->c * w->c == 1);
    CHECK(w->d * w->d == 1);
  }
}

TEST_CASE("round trip: witness -> point -> witness") {
  for (int sa : {+1, -1}) {
    ProgressionWitness w{Int(sa), Int(1), Int(1), Int(1), 1, Int(1), Int(0)};
    auto [j, p] = progression_to_point(w);
    auto back = point_to_progression(j, p);
    REQUIRE(back.has_value());
    CHECK(back->a == w.a);
    CHECK(back->b == w.b);
    CHECK(back->c == w.c);
    CHECK(back->d == w.d);
    CHECK(back->u == w.u);
    CHECK(back->v == w.v);
  }
}

TEST_CASE("bad primes") {
  SUBCASE("C1 has bad primes exactly {2, 3, 5}") {
    auto s = bad_primes(curve_for(1));
    CHECK(s == std::set<Int>{Int(2), Int(3), Int(5)});
  }
  SUBCASE("C2 includes 7 (leading coefficient 14)") {
    auto s = bad_primes(curve_for(2));
    CHECK(s.count(Int(7)) == 1);
    CHECK(s.count(Int(2)) == 1);
  }
  SUBCASE("odd bad primes of y^2 = x^10 + 1 divide the discriminant") {
    PolyZ f;
    f.c.assign(11, Int(0));
    f.c[0] = 1;
    f.c[10] = 1;
    HyperellipticCurve c(f);
    Rat d = discriminant(to_rational(c.f));
    for (const Int& p : bad_primes(c)) {
      if (p == 2) continue;
      CHECK(mod_pos(d.get_num(), p) == 0);
    }
  }
}

TEST_CASE("infinity rationality follows the leading coefficient") {
  CHECK(curve_for(1).rational_infinity());
  CHECK(!curve_for(0).rational_infinity());
  CHECK(!curve_for(2).rational_infinity());
}
