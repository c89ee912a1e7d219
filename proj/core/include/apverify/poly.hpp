#pragma once

// Dense univariate polynomials over a generic coefficient domain.
//
// Coefficients are stored in ascending degree order with no trailing zeros;
// the zero polynomial has an empty coefficient vector and degree() == -1.
// Coefficient types must provide +, -, *, == and a Coeff<T> trait. The trait
// takes a "like" exemplar so that context-carrying coefficients (prime
// fields, p-adics) can mint constants of the right domain.

#include "apverify/ints.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

namespace apv {

template <class T>
struct Coeff;  // specialized per coefficient type

template <>
struct Coeff<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static Rat from_long(const Rat&, long n) { return Rat(n); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) {
    if (x == 0) throw MathError("division by zero");
    return Rat(1) / x;
  }
};

template <>
struct Coeff<Int> {
  static Int zero(const Int&) { return Int(0); }
  static Int one(const Int&) { return Int(1); }
  static Int from_long(const Int&, long n) { return Int(n); }
  static bool is_zero(const Int& x) { return x == 0; }
  static Int inv(const Int& x) {
    if (x == 1) return Int(1);
    if (x == -1) return Int(-1);
    throw MathError("non-unit integer inverse");
  }
};

template <class T>
struct Poly {
  std::vector<T> c;  // ascending, trimmed

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && Coeff<T>::is_zero(c.back())) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }

  const T& lc() const {
    if (c.empty()) throw MathError("leading coefficient of zero polynomial");
    return c.back();
  }

  /// Coefficient of x^i (zero beyond the stored range).
  T at(std::size_t i, const T& like) const {
    return i < c.size() ? c[i] : Coeff<T>::zero(like);
  }

  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

template <class T>
Poly<T> poly_zero() { return Poly<T>{}; }

template <class T>
Poly<T> poly_const(const T& v) {
  Poly<T> p;
  p.c.push_back(v);
  p.trim();
  return p;
}

/// c0 + c1 x + ... from an initializer-style vector (trailing zeros ok).
template <class T>
Poly<T> poly_from(std::vector<T> v) { return Poly<T>(std::move(v)); }

template <class T>
Poly<T> poly_x(const T& like) {
  Poly<T> p;
  p.c = {Coeff<T>::zero(like), Coeff<T>::one(like)};
  return p;
}

/// x^n with coefficient `v`.
template <class T>
Poly<T> poly_monomial(const T& v, std::size_t n) {
  Poly<T> p;
  p.c.assign(n + 1, Coeff<T>::zero(v));
  p.c[n] = v;
  p.trim();
  return p;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r;
  const std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size()) r.c.push_back(a.c[i] + b.c[i]);
    else if (i < a.c.size()) r.c.push_back(a.c[i]);
    else r.c.push_back(b.c[i]);
  }
  r.trim();
  return r;
}

template <class T>
Poly<T> neg(const Poly<T>& a) {
  Poly<T> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <class T>
Poly<T> sub(const Poly<T>& a, const Poly<T>& b) { return add(a, neg(b)); }

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<T>{};
  Poly<T> r;
  const T z = Coeff<T>::zero(a.c[0]);
  r.c.assign(a.c.size() + b.c.size() - 1, z);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (Coeff<T>::is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& s) {
  Poly<T> r = a;
  for (auto& x : r.c) x = x * s;
  r.trim();
  return r;
}

/// (q, r) with a = q b + r and deg r < deg b. Requires invertible lc(b).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  Poly<T> q, r = a;
  if (a.is_zero() || a.degree() < b.degree()) return {q, r};
  const T binv = Coeff<T>::inv(b.lc());
  const T z = Coeff<T>::zero(b.lc());
  q.c.assign(a.c.size() - b.c.size() + 1, z);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const long k = r.degree() - b.degree();
    const T t = r.lc() * binv;
    q.c[k] = q.c[k] + t;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[k + i] = r.c[k + i] - t * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class T>
Poly<T> mod(const Poly<T>& a, const Poly<T>& b) { return divrem(a, b).second; }

/// Exact quotient; throws if the division leaves a remainder.
template <class T>
Poly<T> divexact(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return scale(a, Coeff<T>::inv(a.lc()));
}

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended gcd: returns (g, s, t) monic with s a + t b = g.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> xgcd(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() && b.is_zero()) return {Poly<T>{}, Poly<T>{}, Poly<T>{}};
  const T one = Coeff<T>::one(a.is_zero() ? b.c[0] : a.c[0]);
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = poly_const(one), s1, t0, t1 = poly_const(one);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    Poly<T> s2 = sub(s0, mul(q, s1));
    Poly<T> t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const T u = Coeff<T>::inv(r0.lc());
  return {scale(r0, u), scale(s0, u), scale(t0, u)};
}

template <class T>
T eval(const Poly<T>& a, const T& x) {
  T r = Coeff<T>::zero(x);
  for (std::size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
  return r;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  Poly<T> r;
  if (a.c.size() <= 1) return r;
  r.c.reserve(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(a.c[i] * Coeff<T>::from_long(a.c[i], static_cast<long>(i)));
  r.trim();
  return r;
}

template <class T>
Poly<T> compose(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r;
  for (std::size_t i = a.c.size(); i-- > 0;)
    r = add(mul(r, b), poly_const(a.c[i]));
  return r;
}

/// x^n a(1/x) for n = deg a (coefficient reversal).
template <class T>
Poly<T> reverse(const Poly<T>& a) {
  Poly<T> r = a;
  std::reverse(r.c.begin(), r.c.end());
  r.trim();
  return r;
}

/// Resultant over a field via the Euclidean polynomial remainder sequence.
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero() || b.is_zero()) {
    const T z = a.is_zero() ? (b.is_zero() ? T{} : Coeff<T>::zero(b.c[0]))
                            : Coeff<T>::zero(a.c[0]);
    return z;
  }
  T r = Coeff<T>::one(a.c[0]);
  bool negate = false;
  while (b.degree() > 0) {
    Poly<T> rem = mod(a, b);
    if (rem.is_zero()) return Coeff<T>::zero(a.c[0]);
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) negate = !negate;
    T lcb = b.lc();
    long e = a.degree() - rem.degree();
    for (long i = 0; i < e; ++i) r = r * lcb;
    a = std::move(b);
    b = std::move(rem);
  }
  // b is a nonzero constant
  T lcb = b.c[0];
  for (long i = 0; i < a.degree(); ++i) r = r * lcb;
  if (negate) r = -r;
  return r;
}

/// disc(a) = (-1)^{d(d-1)/2} res(a, a') / lc(a).
template <class T>
T discriminant(const Poly<T>& a) {
  if (a.degree() < 1) throw MathError("discriminant needs degree >= 1");
  T res = resultant(a, derivative(a));
  T d = res * Coeff<T>::inv(a.lc());
  const long n = a.degree();
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

template <class T, class F>
auto map_poly(const Poly<T>& a, F&& f) -> Poly<decltype(f(a.c[0]))> {
  Poly<decltype(f(a.c[0]))> r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(f(x));
  r.trim();
  return r;
}

using PolyQ = Poly<Rat>;
using PolyZ = Poly<Int>;

inline PolyQ to_rational(const PolyZ& a) {
  return map_poly(a, [](const Int& x) { return Rat(x); });
}

/// Clears denominators and divides by the content: primitive integer model.
inline PolyZ primitive_part(const PolyQ& a) {
  Int den = 1;
  for (const auto& x : a.c) den = lcm(den, x.get_den());
  PolyZ r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(Int(x.get_num() * (den / x.get_den())));
  r.trim();
  Int cont = 0;
  for (const auto& x : r.c) cont = gcd(cont, x);
  if (cont > 1)
    for (auto& x : r.c) x /= cont;
  return r;
}

}  // namespace apv
