#include "doctest.h"

#include "apverify/padic.hpp"
#include "apverify/series.hpp"

#include <random>

using namespace apv;

namespace {
const Int P7(7);
const Int P2(2);
}  // namespace

TEST_CASE("p-adic embedding agrees with exact arithmetic mod p^N") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  const long N = 8;
  const Int pN = pow_int(P7, N);
  for (int i = 0; i < 200; ++i) {
    Rat a(num(rng), den(rng));
    a.canonicalize();
    Rat b(num(rng), den(rng));
    b.canonicalize();
    if (mod_pos(a.get_den(), P7) == 0 || mod_pos(b.get_den(), P7) == 0) continue;
    PadicNumber pa = PadicNumber::from_rat(a, P7, N);
    PadicNumber pb = PadicNumber::from_rat(b, P7, N);
    PadicNumber sum = pa + pb;
    PadicNumber prod = pa * pb;
    Rat s = a + b, m = a * b;
    CHECK(equal_to_precision(sum, PadicNumber::from_rat(s, P7, sum.precision())));
    CHECK(equal_to_precision(prod, PadicNumber::from_rat(m, P7, prod.precision())));
  }
}

TEST_CASE("precision bookkeeping") {
  PadicNumber a = PadicNumber::from_int(Int(49), P7, 6);   // v = 2
  PadicNumber b = PadicNumber::from_int(Int(7), P7, 4);    // v = 1
  PadicNumber q = a / b;
  CHECK(q.valuation() == 1);
  CHECK(q.relative_precision() == 3);  // min of the relative precisions
  PadicNumber diff = a - a;
  CHECK(diff.is_zero_to_precision());
  CHECK(diff.precision() == 6);
}

TEST_CASE("qp_is_square") {
  CHECK(qp_is_square(PadicNumber::from_int(Int(17), P2, 8)));
  CHECK(!qp_is_square(PadicNumber::from_int(Int(2), P2, 8)));
  CHECK(qp_is_square(PadicNumber::from_int(Int(2), P7, 6)));
  CHECK(!qp_is_square(PadicNumber::from_int(Int(7), P7, 6)));
  CHECK(qp_is_square(PadicNumber::from_int(Int(49), P7, 6)));
  CHECK_THROWS_AS(qp_is_square(PadicNumber::from_int(Int(8), P2, 3)),
                  MathError);  // relative precision 0 after v = 3
}

TEST_CASE("hensel lifting") {
  SUBCASE("7-adic sqrt(2) from seed 3") {
    PolyZ f = poly_from<Int>({Int(-2), Int(0), Int(1)});
    PadicNumber x0 = PadicNumber::from_int(Int(3), P7, 3);
    PadicNumber r = hensel_lift_root(f, x0, 3);
    CHECK(r.lift_mod(3) == 108);
    PadicNumber r6 = hensel_lift_root(f, x0, 6);
    Int v = r6.lift_mod(6);
    CHECK(mod_pos(v * v, pow_int(P7, 6)) == 2);
    CHECK(mod_pos(v, Int(343)) == 108);
  }
  SUBCASE("linear polynomial") {
    PolyZ f = poly_from<Int>({Int(-5), Int(1)});
    PadicNumber r = hensel_lift_root(f, PadicNumber::from_int(Int(5), P7, 4), 4);
    CHECK(r.lift_mod(4) == 5);
  }
  SUBCASE("ramified root is rejected") {
    PolyZ f = poly_from<Int>({Int(-7), Int(0), Int(1)});
    CHECK_THROWS_AS(
        hensel_lift_root(f, PadicNumber::from_int(Int(0), P7, 4), 4),
        MathError);
  }
  SUBCASE("lifted root always satisfies f = 0 mod p^N") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int i = 0; i < 40; ++i) {
      // f = (x - a)(x - b) with distinct roots mod 7
      long a = c(rng), b = c(rng);
      if (((a - b) % 7 + 7) % 7 == 0) continue;
      PolyZ f = mul(poly_from<Int>({Int(-a), Int(1)}), poly_from<Int>({Int(-b), Int(1)}));
      PadicNumber r =
          hensel_lift_root(f, PadicNumber::from_int(Int(a), P7, 9), 9);
      CHECK(mod_pos(eval(f, r.lift_mod(9)), pow_int(P7, 9)) == 0);
    }
  }
}

TEST_CASE("padic sqrt") {
  PadicNumber a = PadicNumber::from_int(Int(2), P7, 6);
  auto r = padic_sqrt(a);
  REQUIRE(r.has_value());
  PadicNumber sq = (*r) * (*r);
  CHECK(equal_to_precision(sq, a));
  CHECK(!padic_sqrt(PadicNumber::from_int(Int(3), P7, 6)).has_value());
}

TEST_CASE("series arithmetic round trips") {
  const int M = 12;
  // s = 1 + t (as a series)
  Series<Rat> one_plus_t({Rat(1), Rat(1)}, M);
  SUBCASE("sqrt(1+t) starts 1 + t/2 - t^2/8") {
    Series<Rat> r = sqrt(one_plus_t);
    CHECK(r.c[0] == Rat(1));
    CHECK(r.c[1] == Rat(1, 2));
    CHECK(r.c[2] == Rat(-1, 8));
    Series<Rat> back = mul(r, r);
    CHECK(back.c[0] == Rat(1));
    CHECK(back.c[1] == Rat(1));
    for (int k = 2; k < back.order; ++k) CHECK(back.c[static_cast<std::size_t>(k)] == Rat(0));
  }
  SUBCASE("inverse") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    std::vector<Rat> coeffs;
    coeffs.push_back(Rat(3));
    for (int i = 1; i < M; ++i) coeffs.push_back(Rat(c(rng)));
    Series<Rat> s(std::move(coeffs), M);
    Series<Rat> si = inverse(s);
    Series<Rat> prod = mul(s, si);
    CHECK(prod.c[0] == Rat(1));
    for (int k = 1; k < prod.order; ++k) CHECK(prod.c[static_cast<std::size_t>(k)] == Rat(0));
  }
  SUBCASE("integrate then differentiate") {
    Series<Rat> s({Rat(4), Rat(-3), Rat(5), Rat(0), Rat(7)}, 5);
    Series<Rat> it = integrate(s);
    CHECK(it.c[0] == Rat(0));
    Series<Rat> back = derivative(it);
    for (int k = 0; k < 5; ++k) CHECK(back.c[static_cast<std::size_t>(k)] == s.c[static_cast<std::size_t>(k)]);
  }
  SUBCASE("integrate dt is t") {
    Series<Rat> dt({Rat(1)}, 1);
    Series<Rat> t = integrate(dt);
    CHECK(t.c[1] == Rat(1));
  }
  SUBCASE("compose with 2t + t^2") {
    Series<Rat> inner({Rat(0), Rat(2), Rat(1)}, M);
    Series<Rat> outer({Rat(1), Rat(1), Rat(1)}, M);  // 1 + s + s^2
    Series<Rat> comp = compose(outer, inner);
    // 1 + (2t + t^2) + (2t + t^2)^2 = 1 + 2t + 5t^2 + 4t^3 + t^4
    CHECK(comp.c[0] == Rat(1));
    CHECK(comp.c[1] == Rat(2));
    CHECK(comp.c[2] == Rat(5));
    CHECK(comp.c[3] == Rat(4));
    CHECK(comp.c[4] == Rat(1));
  }
}

TEST_CASE("2-adic quadratic factor recovery") {
  SUBCASE("constructed product (x^2 + x + 1)(x^8 + 2)") {
    PolyZ q = poly_from<Int>({Int(1), Int(1), Int(1)});
    PolyZ cof;
    cof.c.assign(9, Int(0));
    cof.c[0] = 2;
    cof.c[8] = 1;
    PolyZ f = mul(q, cof);
    auto r = find_quadratic_factor_2adic(f, 40);
    REQUIRE(r.has_value());
    const Int m = pow_int(Int(2), 40);
    CHECK(mod_pos(r->factor.at(0, Int(0)), m) == 1);
    CHECK(mod_pos(r->factor.at(1, Int(0)), m) == 1);
    CHECK(r->factor.at(2, Int(0)) == 1);
    // remainder of f by the found factor vanishes mod 2^40
    auto [qq, rr] = divrem(f, r->factor);
    for (const auto& c : rr.c) CHECK(mod_pos(c, m) == 0);
  }
  SUBCASE("degree-2 input returns itself") {
    PolyZ f = poly_from<Int>({Int(6), Int(2), Int(1)});
    auto r = find_quadratic_factor_2adic(f, 20);
    REQUIRE(r.has_value());
    CHECK(r->factor == f);
  }
}
