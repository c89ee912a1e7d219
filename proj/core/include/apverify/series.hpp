#pragma once

// Truncated power series in one variable: coefficients c[0..order-1], the
// series being known modulo t^order. Truncation orders propagate through
// arithmetic; composition requires a positive-valuation inner series.

#include "apverify/poly.hpp"

namespace apv {

template <class T>
struct Series {
  std::vector<T> c;
  int order = 0;  // known mod t^order

  Series() = default;
  Series(std::vector<T> coeffs, int ord) : c(std::move(coeffs)), order(ord) {
    if (ord < 0) throw MathError("negative truncation order");
    c.resize(static_cast<std::size_t>(ord), c.empty() ? T{} : Coeff<T>::zero(c[0]));
  }

  T at(std::size_t i) const {
    if (static_cast<int>(i) >= order)
      throw MathError("coefficient beyond truncation order");
    return c[i];
  }
};

template <class T>
Series<T> series_from_poly(const Poly<T>& p, int order, const T& like) {
  std::vector<T> c(static_cast<std::size_t>(order), Coeff<T>::zero(like));
  for (std::size_t i = 0; i < p.c.size() && static_cast<int>(i) < order; ++i)
    c[i] = p.c[i];
  return Series<T>(std::move(c), order);
}

template <class T>
Series<T> add(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order, b.order);
  std::vector<T> c(a.c.begin(), a.c.begin() + n);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + b.c[static_cast<std::size_t>(i)];
  return Series<T>(std::move(c), n);
}

template <class T>
Series<T> neg(const Series<T>& a) {
  std::vector<T> c = a.c;
  for (auto& x : c) x = -x;
  return Series<T>(std::move(c), a.order);
}

template <class T>
Series<T> sub(const Series<T>& a, const Series<T>& b) { return add(a, neg(b)); }

template <class T>
Series<T> mul(const Series<T>& a, const Series<T>& b) {
  const int n = std::min(a.order, b.order);
  if (n == 0) return Series<T>({}, 0);
  const T z = Coeff<T>::zero(a.c.empty() ? b.c[0] : a.c[0]);
  std::vector<T> c(static_cast<std::size_t>(n), z);
  for (int i = 0; i < n; ++i) {
    if (Coeff<T>::is_zero(a.c[static_cast<std::size_t>(i)])) continue;
    for (int j = 0; i + j < n; ++j)
      c[static_cast<std::size_t>(i + j)] =
          c[static_cast<std::size_t>(i + j)] +
          a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
  }
  return Series<T>(std::move(c), n);
}

template <class T>
Series<T> scale(const Series<T>& a, const T& s) {
  std::vector<T> c = a.c;
  for (auto& x : c) x = x * s;
  return Series<T>(std::move(c), a.order);
}

/// Multiplicative inverse; the constant term must be a unit.
template <class T>
Series<T> inverse(const Series<T>& a) {
  if (a.order == 0) return a;
  if (Coeff<T>::is_zero(a.c[0]))
    throw MathError("series inverse needs a unit constant term");
  const T z = Coeff<T>::zero(a.c[0]);
  const T c0inv = Coeff<T>::inv(a.c[0]);
  std::vector<T> r(static_cast<std::size_t>(a.order), z);
  r[0] = c0inv;
  for (int k = 1; k < a.order; ++k) {
    T s = z;
    for (int i = 1; i <= k; ++i)
      s = s + a.c[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = -(s * c0inv);
  }
  return Series<T>(std::move(r), a.order);
}

/// Square root with prescribed root of the constant term.
template <class T>
Series<T> sqrt_with(const Series<T>& a, const T& root0) {
  if (a.order == 0) return a;
  if (!(root0 * root0 == a.c[0]))
    throw MathError("provided constant root does not square to c0");
  if (Coeff<T>::is_zero(root0))
    throw MathError("series sqrt needs a unit constant term");
  const T z = Coeff<T>::zero(a.c[0]);
  const T half = Coeff<T>::inv(root0 + root0);
  std::vector<T> r(static_cast<std::size_t>(a.order), z);
  r[0] = root0;
  for (int k = 1; k < a.order; ++k) {
    T s = a.c[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i)
      s = s - r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = s * half;
  }
  return Series<T>(std::move(r), a.order);
}

/// Square root over Q when the constant term is a rational square.
inline Series<Rat> sqrt(const Series<Rat>& a) {
  if (a.order == 0) return a;
  const Rat c0 = a.c[0];
  if (c0 <= 0) throw MathError("series sqrt needs a positive rational c0");
  if (!is_perfect_square(c0.get_num()) || !is_perfect_square(c0.get_den()))
    throw MathError("constant term is not a rational square");
  Rat r0(isqrt(c0.get_num()), isqrt(c0.get_den()));
  return sqrt_with(a, r0);
}

/// Composition a(b(t)); requires b(0) = 0.
template <class T>
Series<T> compose(const Series<T>& a, const Series<T>& b) {
  if (b.order > 0 && !Coeff<T>::is_zero(b.c[0]))
    throw MathError("series composition needs positive inner valuation");
  const int n = std::min(a.order, b.order);
  const T z = Coeff<T>::zero(a.c.empty() ? b.c[0] : a.c[0]);
  Series<T> r(std::vector<T>(static_cast<std::size_t>(n), z), n);
  for (std::size_t i = a.c.size(); i-- > 0;) {
    r = mul(r, Series<T>(std::vector<T>(b.c.begin(), b.c.begin() + n), n));
    if (static_cast<int>(i) < a.order)
      r.c[0] = r.c[0] + a.c[i];
  }
  return r;
}

/// Termwise integration: sum c_k t^k dt -> sum c_k t^{k+1} / (k+1).
/// Over p-adic coefficients the divisions surface their precision loss.
template <class T>
Series<T> integrate(const Series<T>& a) {
  if (a.order == 0) return Series<T>({}, 1);
  const T z = Coeff<T>::zero(a.c[0]);
  std::vector<T> c(static_cast<std::size_t>(a.order) + 1, z);
  for (int k = 0; k < a.order; ++k)
    c[static_cast<std::size_t>(k + 1)] =
        a.c[static_cast<std::size_t>(k)] *
        Coeff<T>::inv(Coeff<T>::from_long(z, k + 1));
  return Series<T>(std::move(c), a.order + 1);
}

template <class T>
Series<T> derivative(const Series<T>& a) {
  if (a.order <= 1) return Series<T>({}, std::max(0, a.order - 1));
  const T z = Coeff<T>::zero(a.c[0]);
  std::vector<T> c(static_cast<std::size_t>(a.order) - 1, z);
  for (int k = 1; k < a.order; ++k)
    c[static_cast<std::size_t>(k - 1)] =
        a.c[static_cast<std::size_t>(k)] * Coeff<T>::from_long(z, k);
  return Series<T>(std::move(c), a.order - 1);
}

}  // namespace apv
