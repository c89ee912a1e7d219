#include "doctest.h"

#include "apverify/counting.hpp"
#include "apverify/generators.hpp"

#include <random>

using namespace apv;

namespace {
const PolyZ kF1 = build_family(1).f;
}

TEST_CASE("#C1(F_7) by direct enumeration") {
  // independent oracle: Legendre symbols over the 7 x-values plus infinity
  long expected = 2;  // lc = 1 is a square
  for (long x = 0; x < 7; ++x) {
    Int fx = mod_pos(eval(kF1, Int(x)), Int(7));
    if (fx == 0) {
      expected += 1;
    } else {
      Int ls = pow_mod(fx, Int(3), Int(7));  // (7-1)/2 = 3
      if (ls == 1) expected += 2;
    }
  }
  CHECK(expected == 8);
  CHECK(count_curve_points(kF1, 7, 1) == expected);
}

TEST_CASE("counts respect the trivial bound") {
  for (std::uint32_t p : {7u, 13u, 41u}) {
    Int n1 = count_curve_points(kF1, p, 1);
    CHECK(n1 <= 2 * Int(p) + 2);
  }
}

TEST_CASE("bad and even primes are rejected") {
  CHECK_THROWS_AS(count_curve_points(kF1, 2, 1), MathError);
  CHECK_THROWS_AS(count_curve_points(kF1, 5, 1), MathError);
  CHECK_THROWS_AS(count_curve_points(kF1, 7, 5), MathError);
}

TEST_CASE("L-polynomial structure at p = 7") {
  LPolynomial L = l_polynomial(kF1, 7);
  CHECK(L.a[0] == 1);
  CHECK(L.a[8] == pow_int(Int(7), 4));
  for (int i = 0; i <= 3; ++i)
    CHECK(L.a[static_cast<std::size_t>(8 - i)] ==
          pow_int(Int(7), static_cast<unsigned long>(4 - i)) * L.a[static_cast<std::size_t>(i)]);
  CHECK(count_curve_points(kF1, 7, 1) == Int(7) + 1 + L.a[1]);
  CHECK(L.value_at_1() == 2400);
}

TEST_CASE("Jacobian orders match at 7, 13, 41") {
  CHECK(jacobian_order(kF1, 7) == 2400);
  CHECK(jacobian_order(kF1, 13) == 28500);
  CHECK(jacobian_order(kF1, 41) == 2633441);
}

TEST_CASE("group structures at 7 and 13") {
  GroupStructure g7(kF1, 7);
  CHECK(g7.invariants() == std::vector<Int>{Int(10), Int(240)});
  GroupStructure g13(kF1, 13);
  CHECK(g13.invariants() == std::vector<Int>{Int(10), Int(2850)});

  SUBCASE("product of invariants is the order") {
    Int p7(1), p13(1);
    for (const auto& d : g7.invariants()) p7 *= d;
    for (const auto& d : g13.invariants()) p13 *= d;
    CHECK(p7 == 2400);
    CHECK(p13 == 28500);
  }

  SUBCASE("dlog round-trips on 200 random elements per prime") {
    std::mt19937_64 rng(31337);
    for (const GroupStructure* gs : {&g7, &g13}) {
      std::uniform_int_distribution<long> c0(0, 1000000);
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> coords;
        for (const auto& d : gs->invariants())
          coords.push_back(mod_pos(Int(c0(rng)), d));
        JacPoint<FpElem> x = gs->from_coords(coords);
        std::vector<Int> back = gs->dlog(x);
        CHECK(back == coords);
      }
    }
  }

  SUBCASE("dlog of identity and of the generators") {
    std::vector<Int> z = g7.dlog(jac_identity(g7.curve()));
    for (const auto& c : z) CHECK(c == 0);
    for (std::size_t i = 0; i < g7.generators().size(); ++i) {
      std::vector<Int> e = g7.dlog(g7.generators()[i]);
      for (std::size_t j = 0; j < e.size(); ++j)
        CHECK(e[j] == (i == j ? Int(1) : Int(0)));
    }
  }
}

TEST_CASE("Lagrange: N * X vanishes for sampled X") {
  GroupStructure g7(kF1, 7);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> c0(0, 100000);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> coords;
    for (const auto& d : g7.invariants()) coords.push_back(mod_pos(Int(c0(rng)), d));
    JacPoint<FpElem> x = g7.from_coords(coords);
    CHECK(jac_scalar_mul(g7.curve(), Int(2400), x).is_identity());
  }
}

TEST_CASE("torsion and independence report") {
  TorsionIndependenceReport rep = torsion_and_independence();
  CHECK(rep.order7 == 2400);
  CHECK(rep.order41 == 2633441);
  CHECK(rep.gcd_orders == 1);
  CHECK(rep.torsion_free);
  CHECK(!rep.image7_cyclic);
  CHECK(rep.independent);
  CHECK(rep.image7_invariants.size() == 2);
}

TEST_CASE("cyclic contrast: the subgroup generated by rho_7(Q1) alone") {
  GroupStructure g7(kF1, 7);
  JacCurve<Rat> jcq = c1_jacobian();
  JacPoint<FpElem> r1 = jac_reduce_mod_p(jcq, mw_generator_q1(jcq), g7.curve());
  PairSubgroup sub = subgroup_presentation(g7, {r1});
  CHECK(sub.image_invariants.size() <= 1);  // cyclic
  // order = order of rho_7(Q1)
  CHECK(jac_scalar_mul(g7.curve(), sub.order, r1).is_identity());
}
