#include "apverify/curves.hpp"

namespace apv {

namespace {

// (u + v sqrt2)^5 split into the 1- and sqrt2-components as forms in (u, v).
void base_quintic(std::array<Int, 6>& g, std::array<Int, 6>& h) {
  const long binom[6] = {1, 5, 10, 10, 5, 1};
  g.fill(0);
  h.fill(0);
  for (int k = 0; k <= 5; ++k) {
    if (k % 2 == 0)
      g[static_cast<std::size_t>(k)] = Int(binom[k]) * pow_int(Int(2), k / 2);
    else
      h[static_cast<std::size_t>(k)] = Int(binom[k]) * pow_int(Int(2), (k - 1) / 2);
  }
}

PolyZ dehomogenize(const std::array<Int, 6>& form) {
  // coefficient of u^{5-i} v^i evaluated at v = 1: x^{5-i} picks index i
  PolyZ p;
  p.c.assign(6, Int(0));
  for (int i = 0; i <= 5; ++i) p.c[static_cast<std::size_t>(5 - i)] = form[static_cast<std::size_t>(i)];
  p.trim();
  return p;
}

Int eval_form(const std::array<Int, 6>& form, const Int& u, const Int& v) {
  Int s = 0;
  for (int i = 0; i <= 5; ++i)
    s += form[static_cast<std::size_t>(i)] * pow_int(u, static_cast<unsigned long>(5 - i)) *
         pow_int(v, static_cast<unsigned long>(i));
  return s;
}

}  // namespace

CurveFamily build_family(int j) {
  if (j < -2 || j > 2) throw MathError("family index out of range [-2, 2]");
  CurveFamily fam;
  fam.j = j;
  std::array<Int, 6> g0, h0;
  base_quintic(g0, h0);
  ZSqrt2 unit = unit_power(j);
  // (g + h sqrt2)(r + s sqrt2) = (r g + 2 s h) + (s g + r h) sqrt2
  for (int i = 0; i <= 5; ++i) {
    auto idx = static_cast<std::size_t>(i);
    fam.g[idx] = unit.a * g0[idx] + 2 * unit.b * h0[idx];
    fam.h[idx] = unit.b * g0[idx] + unit.a * h0[idx];
  }
  PolyZ gx = dehomogenize(fam.g);
  PolyZ hx = dehomogenize(fam.h);
  fam.f = sub(scale(mul(gx, gx), Int(2)), mul(hx, hx));
  return fam;
}

bool reflection_check(int j) {
  CurveFamily pos = build_family(j);
  CurveFamily neg = build_family(-j);
  PolyZ flipped = pos.f;
  for (std::size_t i = 1; i < flipped.c.size(); i += 2) flipped.c[i] = -flipped.c[i];
  return neg.f == flipped;
}

bool sqrt2_split_check(int j) {
  CurveFamily fam = build_family(j);
  PolyZ gx = dehomogenize(fam.g);
  PolyZ hx = dehomogenize(fam.h);
  // (sqrt2 g + h)(sqrt2 g - h) = 2 g^2 - h^2, with the sqrt2 cross terms
  // cancelling identically
  PolyZ cross = sub(mul(gx, hx), mul(hx, gx));
  if (!cross.is_zero()) return false;
  return fam.f == sub(scale(mul(gx, gx), Int(2)), mul(hx, hx));
}

// g_{-j}(u,-v) = (-1)^j g_j(u,v) and h_{-j}(u,-v) = (-1)^{j+1} h_j(u,v).
bool conjugation_check(int j) {
  CurveFamily pos = build_family(j);
  CurveFamily neg = build_family(-j);
  const int sj = (((j % 2) + 2) % 2 == 0) ? +1 : -1;
  for (int i = 0; i <= 5; ++i) {
    auto idx = static_cast<std::size_t>(i);
    const int si = (i % 2 == 0) ? +1 : -1;  // v -> -v on the v^i coefficient
    if (si * neg.g[idx] != sj * pos.g[idx]) return false;
    if (si * neg.h[idx] != -sj * pos.h[idx]) return false;
  }
  return true;
}

HyperellipticCurve::HyperellipticCurve(PolyZ model) : f(std::move(model)) {
  if (f.degree() != 10) throw MathError("expected a degree-10 model");
  Rat disc = discriminant(to_rational(f));
  if (disc == 0) throw MathError("model is not squarefree");
}

HyperellipticCurve curve_for(int j) {
  return HyperellipticCurve(build_family(j).f);
}

std::pair<int, CurvePoint> progression_to_point(const ProgressionWitness& w) {
  if (w.j < -2 || w.j > 2) throw MathError("witness j out of range");
  auto odd = [](const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; };
  if (!odd(w.a) || !odd(w.b) || !odd(w.c) || !odd(w.d))
    throw MathError("witness parity: a, b, c, d must be odd");
  if (!odd(w.u)) throw MathError("witness parity: u must be odd");
  if (mod_pos(w.v, Int(2)) != mod_pos(Int(w.j + 1), Int(2)))
    throw MathError("witness parity: v = j + 1 mod 2 required");
  if (gcd(w.u, w.v) != 1) throw MathError("witness (u, v) not coprime");
  if (gcd(w.a * w.a, w.b * w.b) != 1) throw MathError("progression not primitive");
  CurveFamily fam = build_family(w.j);
  if (eval_form(fam.g, w.u, w.v) != w.b || eval_form(fam.h, w.u, w.v) != w.c)
    throw MathError("witness does not satisfy b = g_j(u,v), c = h_j(u,v)");
  Int d1 = w.b * w.b - w.a * w.a;
  Int d2 = w.c * w.c - w.b * w.b;
  Int d3 = pow_int(w.d, 5) - w.c * w.c;
  if (d1 != d2 || d2 != d3)
    throw MathError("terms are not in arithmetic progression");
  if (w.v == 0) {
    // u = +-1; the branch is the sign of a * u^5 = a * u
    int sign = (w.a * w.u > 0) ? +1 : -1;
    return {w.j, CurvePoint::infinity(sign)};
  }
  Rat x(w.u, w.v);
  x.canonicalize();
  Rat y(w.a, pow_int(w.v, 5));
  y.canonicalize();
  return {w.j, CurvePoint::affine(x, y)};
}

std::optional<ProgressionWitness> point_to_progression(int j,
                                                       const CurvePoint& p) {
  CurveFamily fam = build_family(j);
  Int u, v, a;
  if (p.at_infinity) {
    u = 1;
    v = 0;
    a = p.sign;
  } else {
    u = p.x.get_num();
    v = p.x.get_den();
    Rat av = p.y * Rat(pow_int(v, 5));
    if (av.get_den() != 1) return std::nullopt;
    a = av.get_num();
  }
  // normalize parities: u odd and v = j+1 mod 2; (u, v) -> (-u, -v) is the
  // other representative, matching a at infinity through u^5
  if (mpz_even_p(u.get_mpz_t())) return std::nullopt;
  if (mod_pos(v, Int(2)) != mod_pos(Int(j + 1), Int(2))) return std::nullopt;
  ProgressionWitness w;
  w.j = j;
  w.u = u;
  w.v = v;
  w.a = a;
  w.b = eval_form(fam.g, u, v);
  w.c = eval_form(fam.h, u, v);
  Int d5 = 2 * w.c * w.c - w.b * w.b;
  auto d = exact_root(d5, 5);
  if (!d) return std::nullopt;
  w.d = *d;
  if (w.a * w.a != 2 * w.b * w.b - w.c * w.c) return std::nullopt;
  if (gcd(w.a * w.a, w.b * w.b) != 1) return std::nullopt;
  auto odd = [](const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; };
  if (!odd(w.a) || !odd(w.b) || !odd(w.c) || !odd(w.d)) return std::nullopt;
  return w;
}

std::set<Int> bad_primes(const HyperellipticCurve& curve) {
  Rat discq = discriminant(to_rational(curve.f));
  if (discq.get_den() != 1) throw MathError("integral model expected");
  Int n = discq.get_num() * curve.lc();
  Factorization fac = trial_factor(n);
  if (!fac.complete())
    throw MathError("bad-prime factorization exceeds the trial bound");
  std::set<Int> out;
  for (const auto& [p, e] : fac.factors) out.insert(p);
  return out;
}

}  // namespace apv
