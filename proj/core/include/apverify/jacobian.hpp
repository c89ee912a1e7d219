#pragma once

// Divisor-class arithmetic on the Jacobian of a genus-4 curve y^2 = f(x)
// with deg f = 10 and square leading coefficient, so both points at infinity
// are rational. Classes are stored as
//
//     [ div(u, v) + a*inf+ + b*inf-  -  nu * W ],      W = inf+ + inf-,
//
// where (u, v) is a semi-reduced Mumford pair (u monic, deg v < deg u,
// u | f - v^2), min(a, b) = 0, and deg u + a + b = 2 nu with nu minimal.
// The minimal general-position representative is unique (a degree-2nu
// general-position divisor on this model has a one-element linear system),
// so structural equality on the stored form is class equality.
//
// Cantor composition handles the affine parts; reduction steps follow the
// divisor of y - vt for a lift vt of v whose top coefficients are matched
// against the branch expansion of y at a chosen point at infinity. The
// infinity multiplicities absorb the pole/zero orders of y - vt, tracked
// exactly through a truncated expansion of y in t = 1/x.

#include "apverify/fp.hpp"
#include "apverify/poly.hpp"
#include "apverify/series.hpp"

namespace apv {

inline std::optional<Rat> sqrt_in_field(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (!is_perfect_square(x.get_num()) || !is_perfect_square(x.get_den()))
    return std::nullopt;
  return Rat(isqrt(x.get_num()), isqrt(x.get_den()));
}
inline std::optional<FpElem> sqrt_in_field(const FpElem& x) { return fp_sqrt(x); }

template <class T>
struct JacCurve {
  Poly<T> f;       // degree-10 squarefree model
  T c;             // square root of lc(f); fixes the inf+ branch y/x^5 -> c
  Series<T> s;     // S(t) with S^2 = t^10 f(1/t), S(0) = c
  Poly<T> w_plus;  // polynomial part of the inf+ branch of y

  static JacCurve make(Poly<T> f, int series_order = 26) {
    if (f.degree() != 10) throw MathError("model must have degree 10");
    auto root = sqrt_in_field(f.lc());
    if (!root)
      throw MathError("leading coefficient is not a square in the base field");
    JacCurve jc;
    jc.f = std::move(f);
    jc.c = *root;
    Series<T> fstar = series_from_poly(reverse(jc.f), series_order, jc.c);
    // reverse() drops leading zeros of the reversed tail; re-pad explicitly
    {
      Poly<T> rev;
      rev.c.assign(11, Coeff<T>::zero(jc.c));
      for (std::size_t i = 0; i < jc.f.c.size(); ++i)
        rev.c[10 - i] = jc.f.c[i];
      rev.trim();
      fstar = series_from_poly(rev, series_order, jc.c);
    }
    jc.s = sqrt_with(fstar, jc.c);
    jc.w_plus.c.assign(6, Coeff<T>::zero(jc.c));
    for (int i = 0; i <= 5; ++i)
      jc.w_plus.c[static_cast<std::size_t>(5 - i)] = jc.s.c[static_cast<std::size_t>(i)];
    jc.w_plus.trim();
    return jc;
  }
};

template <class T>
struct JacPoint {
  Poly<T> u;        // monic, deg <= 4
  Poly<T> v;        // deg v < deg u, f = v^2 mod u
  int inf_plus = 0;   // multiplicity a of inf+ in the minimal representative
  int inf_minus = 0;  // multiplicity b of inf-; min(a, b) = 0
  int nu = 0;         // deg u + a + b = 2 nu

  bool is_identity() const { return nu == 0; }
  /// Balance of the degree-4 padded representative [D - 2W].
  int balanced_m() const { return inf_plus + (2 - nu); }

  bool operator==(const JacPoint& o) const {
    return inf_plus == o.inf_plus && inf_minus == o.inf_minus && nu == o.nu &&
           u == o.u && v == o.v;
  }
  bool operator!=(const JacPoint& o) const { return !(*this == o); }
};

/// f - v^2 = 0 mod u (the Mumford membership test).
template <class T>
bool jac_validate(const JacCurve<T>& jc, const Poly<T>& u, const Poly<T>& v) {
  if (u.is_zero()) return false;
  return mod(sub(jc.f, mul(v, v)), u).is_zero();
}

namespace jacdetail {

template <class T>
struct State {
  Poly<T> u, v;  // u | f - v^2, v any lift
  long m = 0, n = 0, tau = 0;  // deg u + m + n = 2 tau
};

// ord of y - vt at the sign branch of infinity (negative = pole). vt must
// have degree <= 5; higher degrees never interact with the branch series.
template <class T>
long ord_at_infinity(const JacCurve<T>& jc, const Poly<T>& vt, int sign) {
  if (vt.degree() > 5) return -vt.degree();
  // t^5 (y - vt) on the branch = sign*S(t) - sum vt_i t^{5-i}
  std::vector<T> coeffs(static_cast<std::size_t>(jc.s.order),
                        Coeff<T>::zero(jc.c));
  for (int i = 0; i < jc.s.order; ++i)
    coeffs[static_cast<std::size_t>(i)] =
        (sign > 0) ? jc.s.c[static_cast<std::size_t>(i)]
                   : -jc.s.c[static_cast<std::size_t>(i)];
  for (long i = 0; i <= vt.degree(); ++i)
    coeffs[static_cast<std::size_t>(5 - i)] =
        coeffs[static_cast<std::size_t>(5 - i)] - vt.c[static_cast<std::size_t>(i)];
  for (int k = 0; k < jc.s.order; ++k)
    if (!Coeff<T>::is_zero(coeffs[static_cast<std::size_t>(k)])) return k - 5;
  throw MathError("branch series precision exhausted in ord computation");
}

// Lift of v mod u of degree <= 5 matching the sign branch as far as the
// degree freedom allows (top coefficients x^5 .. x^{deg u}).
template <class T>
Poly<T> matched_lift(const JacCurve<T>& jc, const Poly<T>& u, const Poly<T>& v,
                     int sign) {
  Poly<T> w = (sign > 0) ? jc.w_plus : neg(jc.w_plus);
  Poly<T> q = divrem(sub(w, v), u).first;
  return add(v, mul(q, u));
}

// One reduction step along div(y - vt); updates the state in place.
template <class T>
void reduce_step(const JacCurve<T>& jc, State<T>& st, const Poly<T>& vt) {
  Poly<T> F = sub(jc.f, mul(vt, vt));
  if (F.is_zero()) throw MathError("vt^2 = f impossible for squarefree f");
  Poly<T> unew = divexact(F, st.u);
  unew = monic(unew);
  long ord_p, ord_m;
  if (vt.degree() > 5) {
    ord_p = ord_m = -vt.degree();
  } else {
    ord_p = ord_at_infinity(jc, vt, +1);
    ord_m = ord_at_infinity(jc, vt, -1);
  }
  st.m -= ord_p;
  st.n -= ord_m;
  st.tau += unew.degree();
  st.u = unew;
  st.v = st.u.degree() > 0 ? mod(neg(vt), st.u) : Poly<T>{};
  if (st.m < 0 || st.n < 0) {
    long d = std::max(-st.m, -st.n);
    st.m += d;
    st.n += d;
    st.tau += d;
  }
}

template <class T>
void remove_infinity_fibres(State<T>& st) {
  long k = std::min(st.m, st.n);
  st.m -= k;
  st.n -= k;
  st.tau -= k;
}

template <class T>
JacPoint<T> normalize(const JacCurve<T>& jc, State<T> st) {
  for (int guard = 0; ; ++guard) {
    if (guard > 64) throw MathError("reduction failed to terminate");
    long d = st.u.degree();
    if (d >= 6) {
      reduce_step(jc, st, st.v);
      continue;
    }
    if (d == 5) {
      int sign = (st.m > st.n) ? +1 : -1;
      reduce_step(jc, st, matched_lift(jc, st.u, st.v, sign));
      continue;
    }
    remove_infinity_fibres(st);
    if (d + st.m + st.n <= 4) break;
    int sign = (st.m > 0) ? +1 : -1;
    reduce_step(jc, st, matched_lift(jc, st.u, st.v, sign));
  }
  JacPoint<T> out;
  out.u = st.u;
  out.v = st.u.degree() > 0 ? mod(st.v, st.u) : Poly<T>{};
  out.inf_plus = static_cast<int>(st.m);
  out.inf_minus = static_cast<int>(st.n);
  out.nu = static_cast<int>(st.tau);
  return out;
}

// Cantor composition of the affine parts; infinity data adds, with gcd
// cancellations turning into whole fibres.
template <class T>
State<T> compose(const JacCurve<T>& jc, const JacPoint<T>& p,
                 const JacPoint<T>& q) {
  State<T> st;
  st.m = p.inf_plus + q.inf_plus;
  st.n = p.inf_minus + q.inf_minus;
  if (p.u.degree() <= 0) {
    st.u = q.u.degree() > 0 ? q.u : poly_const(Coeff<T>::one(jc.c));
    st.v = q.v;
    st.tau = p.nu + q.nu;
    return st;
  }
  if (q.u.degree() <= 0) {
    st.u = p.u;
    st.v = p.v;
    st.tau = p.nu + q.nu;
    return st;
  }
  auto [d1, e1, e2] = xgcd(p.u, q.u);
  Poly<T> vsum = add(p.v, q.v);
  auto [d, c1, c2] = xgcd(d1, vsum);
  // d = s1 u1 + s2 u2 + s3 (v1 + v2)
  Poly<T> s1 = mul(c1, e1), s2 = mul(c1, e2), s3 = c2;
  Poly<T> unew = divexact(mul(p.u, q.u), mul(d, d));
  unew = monic(unew);
  Poly<T> num = add(add(mul(mul(s1, p.u), q.v), mul(mul(s2, q.u), p.v)),
                    mul(s3, add(mul(p.v, q.v), jc.f)));
  Poly<T> vnew = mod(divexact(num, d), unew);
  st.u = unew;
  st.v = vnew;
  st.tau = p.nu + q.nu - d.degree();
  return st;
}

}  // namespace jacdetail

template <class T>
JacPoint<T> jac_identity(const JacCurve<T>& jc) {
  JacPoint<T> p;
  p.u = poly_const(Coeff<T>::one(jc.c));
  return p;
}

/// iota(P) = [P - inf-]: affine point (x0, y0).
template <class T>
JacPoint<T> jac_embed_affine(const JacCurve<T>& jc, const T& x0, const T& y0) {
  if (!(eval(jc.f, x0) == y0 * y0))
    throw MathError("point does not satisfy the curve equation");
  JacPoint<T> p;
  p.u = poly_from<T>({-x0, Coeff<T>::one(x0)});
  p.v = poly_const(y0);
  p.inf_plus = 1;
  p.inf_minus = 0;
  p.nu = 1;
  return p;
}

/// iota at infinity: sign = -1 gives the identity (the basepoint), sign = +1
/// gives [inf+ - inf-].
template <class T>
JacPoint<T> jac_embed_infinity(const JacCurve<T>& jc, int sign) {
  if (sign < 0) return jac_identity(jc);
  JacPoint<T> p;
  p.u = poly_const(Coeff<T>::one(jc.c));
  p.inf_plus = 2;
  p.inf_minus = 0;
  p.nu = 1;
  return p;
}

template <class T>
JacPoint<T> jac_make(const JacCurve<T>& jc, const Poly<T>& u, const Poly<T>& v,
                     int inf_plus = 0, int inf_minus = 0) {
  if (u.is_zero() || !(u.lc() == Coeff<T>::one(jc.c)))
    throw MathError("u must be monic");
  if (!jac_validate(jc, u, v)) throw MathError("f != v^2 mod u");
  jacdetail::State<T> st;
  st.u = u;
  st.v = v;
  st.m = inf_plus;
  st.n = inf_minus;
  long total = u.degree() + inf_plus + inf_minus;
  if (total % 2 != 0) {
    // pad with one basepoint fibre to make the degree even
    st.m += 1;
    st.n += 1;
    total += 2;
  }
  st.tau = total / 2;
  return jacdetail::normalize(jc, st);
}

template <class T>
JacPoint<T> jac_add(const JacCurve<T>& jc, const JacPoint<T>& p,
                    const JacPoint<T>& q) {
  return jacdetail::normalize(jc, jacdetail::compose(jc, p, q));
}

template <class T>
JacPoint<T> jac_neg(const JacCurve<T>& jc, const JacPoint<T>& p) {
  JacPoint<T> r;
  r.u = p.u;
  r.v = p.u.degree() > 0 ? mod(neg(p.v), p.u) : Poly<T>{};
  r.inf_plus = p.inf_minus;
  r.inf_minus = p.inf_plus;
  r.nu = p.nu;
  (void)jc;
  return r;
}

template <class T>
JacPoint<T> jac_sub(const JacCurve<T>& jc, const JacPoint<T>& p,
                    const JacPoint<T>& q) {
  return jac_add(jc, p, jac_neg(jc, q));
}

template <class T>
JacPoint<T> jac_scalar_mul(const JacCurve<T>& jc, Int k, const JacPoint<T>& p) {
  JacPoint<T> base = p;
  if (k < 0) {
    base = jac_neg(jc, p);
    k = -k;
  }
  JacPoint<T> acc = jac_identity(jc);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = jac_add(jc, acc, base);
    k >>= 1;
    if (k > 0) base = jac_add(jc, base, base);
  }
  return acc;
}

/// Rebased shape [D - 4 inf-]: D = div(A, B) + k inf- with deg A + k = 4.
struct RebasedDivisor {
  PolyQ a;             // monic, the x-polynomial of the affine support
  PolyQ b;             // B with B^2 = f mod A, the y-interpolation
  int inf_minus_mult;  // k
};

struct DegenerateRebase : MathError {
  DegenerateRebase() : MathError("class has no [D - 4 inf-] representative") {}
};

/// Writes P = [D - 4 inf-] with D effective of degree 4 supported on affine
/// points and inf-. Throws DegenerateRebase when the (unique) degree-4
/// representative of the shifted class contains inf+.
inline RebasedDivisor rebase_at_infinity(const JacCurve<Rat>& jc,
                                         const JacPoint<Rat>& p) {
  JacPoint<Rat> zeta = jac_embed_infinity(jc, +1);
  JacPoint<Rat> s = jac_sub(jc, jac_sub(jc, p, zeta), zeta);
  if (s.inf_plus != 0 || s.nu != 2) throw DegenerateRebase();
  RebasedDivisor out;
  out.a = s.u;
  out.b = s.v;
  out.inf_minus_mult = s.inf_minus;
  return out;
}

/// Reduction of a class mod an odd prime of good reduction. The stored
/// representative must be p-integral; kernel-of-reduction classes typically
/// are not, which is reported through MathError as a distinct condition.
JacPoint<FpElem> jac_reduce_mod_p(const JacCurve<Rat>& jcq,
                                  const JacPoint<Rat>& p,
                                  const JacCurve<FpElem>& jcp);

}  // namespace apv
