#include "doctest.h"

#include "apverify/curves.hpp"
#include "apverify/jacobian.hpp"

#include <random>

using namespace apv;

namespace {

JacCurve<Rat> c1_over_q() {
  return JacCurve<Rat>::make(to_rational(build_family(1).f));
}

JacCurve<FpElem> c1_over_fp(std::uint64_t p) {
  return JacCurve<FpElem>::make(reduce_mod_p(build_family(1).f, p));
}

// Q1 and Q2 in Mumford form.
JacPoint<Rat> q1(const JacCurve<Rat>& jc) {
  PolyQ u = poly_from<Rat>({Rat(4, 5), Rat(0), Rat(4), Rat(0), Rat(1)});
  PolyQ v = poly_from<Rat>({Rat(0), Rat(-96, 5), Rat(0), Rat(-16)});
  return jac_make(jc, u, v);
}

JacPoint<Rat> q2(const JacCurve<Rat>& jc) {
  PolyQ u = poly_from<Rat>(
      {Rat(36, 5), Rat(48, 5), Rat(36, 5), Rat(24, 5), Rat(1)});
  PolyQ v = poly_from<Rat>(
      {Rat(-2336, 25), Rat(-1728, 25), Rat(-976, 25), Rat(-1712, 75)});
  return jac_make(jc, u, v);
}

std::vector<JacPoint<FpElem>> curve_point_embeddings(const JacCurve<FpElem>& jc) {
  std::vector<JacPoint<FpElem>> pts;
  const std::uint64_t p = jc.c.p;
  for (std::uint64_t x = 0; x < p; ++x) {
    FpElem fx = eval(jc.f, FpElem(x, p));
    auto y = fp_sqrt(fx);
    if (!y) continue;
    pts.push_back(jac_embed_affine(jc, FpElem(x, p), *y));
    if (y->v != 0)
      pts.push_back(jac_embed_affine(jc, FpElem(x, p), -*y));
  }
  pts.push_back(jac_embed_infinity(jc, +1));
  pts.push_back(jac_embed_infinity(jc, -1));
  return pts;
}

JacPoint<FpElem> random_element(const JacCurve<FpElem>& jc,
                                const std::vector<JacPoint<FpElem>>& gens,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> count(1, 4);
  JacPoint<FpElem> acc = jac_identity(jc);
  int k = count(rng);
  for (int i = 0; i < k; ++i) acc = jac_add(jc, acc, gens[static_cast<std::size_t>(pick(rng))]);
  return acc;
}

}  // namespace

TEST_CASE("Mumford validation of the published generators") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> p1 = q1(jc);
  CHECK(jac_validate(jc, p1.u, p1.v));
  CHECK(p1.u.degree() == 4);
  JacPoint<Rat> p2 = q2(jc);
  CHECK(jac_validate(jc, p2.u, p2.v));
  CHECK(jac_validate(jc, poly_const(Rat(1)), PolyQ{}));  // identity pair
}

TEST_CASE("identity behavior and negation") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> id = jac_identity(jc);
  JacPoint<Rat> p1 = q1(jc);
  CHECK(jac_add(jc, p1, id) == p1);
  CHECK(jac_add(jc, id, id) == id);
  CHECK(jac_add(jc, p1, jac_neg(jc, p1)) == id);
  CHECK(jac_embed_infinity(jc, -1) == id);
  CHECK(id.balanced_m() == 2);
}

TEST_CASE("2 Q1 equals [inf+ - inf-] exactly over Q") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> dbl = jac_add(jc, q1(jc), q1(jc));
  JacPoint<Rat> zeta = jac_embed_infinity(jc, +1);
  CHECK(dbl == zeta);
  CHECK(dbl.u.degree() == 0);
  CHECK(dbl.inf_plus == 2);
  CHECK(dbl.inf_minus == 0);
  CHECK(dbl.nu == 1);
}

TEST_CASE("exactness: Mumford relation survives arithmetic over Q") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> p1 = q1(jc), p2 = q2(jc);
  JacPoint<Rat> s = jac_add(jc, p1, p2);
  CHECK(jac_validate(jc, s.u, s.v));
  JacPoint<Rat> t = jac_scalar_mul(jc, Int(5), p1);
  CHECK(jac_validate(jc, t.u, t.v));
  JacPoint<Rat> w = jac_sub(jc, t, p2);
  CHECK(jac_validate(jc, w.u, w.v));
  CHECK(w.u.degree() + w.inf_plus + w.inf_minus == 2 * w.nu);
}

TEST_CASE("scalar multiples compose consistently over Q") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> p1 = q1(jc);
  JacPoint<Rat> six_a = jac_scalar_mul(jc, Int(6), p1);
  JacPoint<Rat> six_b =
      jac_scalar_mul(jc, Int(3), jac_add(jc, p1, p1));
  JacPoint<Rat> six_c = jac_scalar_mul(jc, Int(2), jac_scalar_mul(jc, Int(3), p1));
  CHECK(six_a == six_b);
  CHECK(six_a == six_c);
  JacPoint<Rat> zero = jac_sub(jc, six_a, six_a);
  CHECK(zero == jac_identity(jc));
}

TEST_CASE("associativity over Q on the published generators") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> a = q1(jc), b = q2(jc);
  JacPoint<Rat> c = jac_add(jc, a, jac_add(jc, b, b));
  CHECK(jac_add(jc, jac_add(jc, a, b), c) == jac_add(jc, a, jac_add(jc, b, c)));
}

TEST_CASE("group axioms over F_7 and F_13 on random triples") {
  std::mt19937_64 rng(616);
  for (std::uint64_t p : {7ULL, 13ULL}) {
    JacCurve<FpElem> jc = c1_over_fp(p);
    auto gens = curve_point_embeddings(jc);
    JacPoint<FpElem> id = jac_identity(jc);
    for (int trial = 0; trial < 120; ++trial) {
      JacPoint<FpElem> a = random_element(jc, gens, rng);
      JacPoint<FpElem> b = random_element(jc, gens, rng);
      JacPoint<FpElem> c = random_element(jc, gens, rng);
      CHECK(jac_add(jc, a, b) == jac_add(jc, b, a));
      CHECK(jac_add(jc, jac_add(jc, a, b), c) == jac_add(jc, a, jac_add(jc, b, c)));
      CHECK(jac_add(jc, a, id) == a);
      CHECK(jac_add(jc, a, jac_neg(jc, a)) == id);
      CHECK(jac_validate(jc, a.u, a.v));
    }
  }
}

TEST_CASE("reduction mod p is a homomorphism on integral representatives") {
  JacCurve<Rat> jcq = c1_over_q();
  std::mt19937_64 rng(272);
  for (std::uint64_t p : {7ULL, 13ULL, 41ULL}) {
    JacCurve<FpElem> jcp = c1_over_fp(p);
    JacPoint<Rat> a = q1(jcq), b = q2(jcq);
    JacPoint<FpElem> ra = jac_reduce_mod_p(jcq, a, jcp);
    JacPoint<FpElem> rb = jac_reduce_mod_p(jcq, b, jcp);
    JacPoint<Rat> sum = jac_add(jcq, a, b);
    CHECK(jac_reduce_mod_p(jcq, sum, jcp) == jac_add(jcp, ra, rb));
    // small scalar combinations, checked whenever the representative stays
    // p-integral
    std::uniform_int_distribution<long> sc(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
      long m = sc(rng), n = sc(rng);
      JacPoint<Rat> combo = jac_add(jcq, jac_scalar_mul(jcq, Int(m), a),
                                    jac_scalar_mul(jcq, Int(n), b));
      try {
        JacPoint<FpElem> red = jac_reduce_mod_p(jcq, combo, jcp);
        JacPoint<FpElem> expect =
            jac_add(jcp, jac_scalar_mul(jcp, Int(m), ra),
                    jac_scalar_mul(jcp, Int(n), rb));
        CHECK(red == expect);
      } catch (const MathError&) {
        // non-integral representative: outside this operation's domain
      }
    }
  }
}

TEST_CASE("reduce_mod_p basics") {
  JacCurve<Rat> jcq = c1_over_q();
  JacCurve<FpElem> jc7 = c1_over_fp(7);
  CHECK(jac_reduce_mod_p(jcq, jac_identity(jcq), jc7) == jac_identity(jc7));
  // order of rho_7(Q1) divides #J1(F_7) = 2400
  JacPoint<FpElem> r = jac_reduce_mod_p(jcq, q1(jcq), jc7);
  CHECK(jac_scalar_mul(jc7, Int(2400), r) == jac_identity(jc7));
  CHECK(r != jac_identity(jc7));
}

TEST_CASE("rho_7(20 Q1) and rho_7(5 Q1 + 60 Q2) vanish") {
  JacCurve<Rat> jcq = c1_over_q();
  JacCurve<FpElem> jc7 = c1_over_fp(7);
  JacPoint<FpElem> r1 = jac_reduce_mod_p(jcq, q1(jcq), jc7);
  JacPoint<FpElem> r2 = jac_reduce_mod_p(jcq, q2(jcq), jc7);
  CHECK(jac_scalar_mul(jc7, Int(20), r1) == jac_identity(jc7));
  JacPoint<FpElem> combo = jac_add(jc7, jac_scalar_mul(jc7, Int(5), r1),
                                   jac_scalar_mul(jc7, Int(60), r2));
  CHECK(combo == jac_identity(jc7));
}

TEST_CASE("embedding a curve point mod 7 gives a nonzero class") {
  JacCurve<FpElem> jc7 = c1_over_fp(7);
  // (-2, 2) lies on C1 mod 7
  FpElem x = Coeff<FpElem>::from_long(jc7.c, -2);
  FpElem y = Coeff<FpElem>::from_long(jc7.c, 2);
  JacPoint<FpElem> e = jac_embed_affine(jc7, x, y);
  CHECK(e != jac_identity(jc7));
  CHECK(jac_validate(jc7, e.u, e.v));
}

TEST_CASE("embed(inf+) doubles to the kernel combination 4 Q1") {
  JacCurve<Rat> jc = c1_over_q();
  JacPoint<Rat> zeta = jac_embed_infinity(jc, +1);
  CHECK(jac_add(jc, zeta, zeta) == jac_scalar_mul(jc, Int(4), q1(jc)));
}

TEST_CASE("rebase at infinity") {
  JacCurve<Rat> jc = c1_over_q();
  SUBCASE("identity rebases to pure basepoint support") {
    RebasedDivisor r = rebase_at_infinity(jc, jac_identity(jc));
    CHECK(r.a.degree() == 0);
    CHECK(r.inf_minus_mult == 4);
  }
  SUBCASE("the twist class [inf+ - inf-] is degenerate") {
    CHECK_THROWS_AS(rebase_at_infinity(jc, jac_embed_infinity(jc, +1)),
                    DegenerateRebase);
  }
  SUBCASE("16 Q1 carries an affine quartic representative") {
    JacPoint<Rat> p = jac_scalar_mul(jc, Int(16), q1(jc));
    RebasedDivisor r = rebase_at_infinity(jc, p);
    CHECK(r.a.degree() == 4);
    CHECK(r.inf_minus_mult == 0);
    CHECK(mod(sub(jc.f, mul(r.b, r.b)), r.a).is_zero());
  }
}
