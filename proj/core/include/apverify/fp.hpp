#pragma once

// Prime field F_p with self-describing elements (the modulus rides along),
// so F_p coefficients plug into the generic polynomial and series code.
// Intended for desk-scale p; the point-counting hot loops use fq.hpp instead.

#include "apverify/poly.hpp"

#include <cstdint>

namespace apv {

struct FpElem {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 marks an unattached zero

  FpElem() = default;
  FpElem(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  static FpElem from_int(const Int& n, std::uint64_t prime) {
    Int r = mod_pos(n, Int(static_cast<unsigned long>(prime)));
    return FpElem(r.get_ui(), prime);
  }
  static FpElem from_rat(const Rat& x, std::uint64_t prime) {
    Int den = mod_pos(x.get_den(), Int(static_cast<unsigned long>(prime)));
    if (den == 0) throw MathError("denominator not invertible mod p");
    Int num = mod_pos(x.get_num(), Int(static_cast<unsigned long>(prime)));
    Int r = mod_pos(num * mod_inverse(den, Int(static_cast<unsigned long>(prime))),
                    Int(static_cast<unsigned long>(prime)));
    return FpElem(r.get_ui(), prime);
  }

  bool is_zero() const { return v == 0; }
};

inline void check_same_field(const FpElem& a, const FpElem& b) {
  if (a.p != b.p && a.p != 0 && b.p != 0) throw MathError("F_p domain mismatch");
}

inline std::uint64_t fp_prime(const FpElem& a, const FpElem& b) {
  return a.p ? a.p : b.p;
}

inline FpElem operator+(const FpElem& a, const FpElem& b) {
  check_same_field(a, b);
  const std::uint64_t p = fp_prime(a, b);
  if (!p) return FpElem{};
  return FpElem((a.v + b.v) % p, p);
}
inline FpElem operator-(const FpElem& a) {
  if (!a.p) return a;
  return FpElem(a.v == 0 ? 0 : a.p - a.v, a.p);
}
inline FpElem operator-(const FpElem& a, const FpElem& b) { return a + (-b); }
inline FpElem operator*(const FpElem& a, const FpElem& b) {
  check_same_field(a, b);
  const std::uint64_t p = fp_prime(a, b);
  if (!p) return FpElem{};
  return FpElem((static_cast<unsigned __int128>(a.v) * b.v) % p, p);
}
inline bool operator==(const FpElem& a, const FpElem& b) {
  if (a.p == 0 || b.p == 0) return a.v == 0 && b.v == 0;
  return a.p == b.p && a.v == b.v;
}
inline bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

inline FpElem fp_pow(FpElem a, Int e) {
  if (!a.p) return a;
  const std::uint64_t p = a.p;
  if (e < 0) throw MathError("negative exponent");
  FpElem r(1, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

inline FpElem fp_inv(const FpElem& a) {
  if (a.v == 0) throw MathError("inverse of zero in F_p");
  return fp_pow(a, Int(static_cast<unsigned long>(a.p)) - 2);
}

inline bool fp_is_square(const FpElem& a) {
  if (a.v == 0) return true;
  if (a.p == 2) return true;
  return fp_pow(a, (Int(static_cast<unsigned long>(a.p)) - 1) / 2).v == 1;
}

/// Tonelli-Shanks; returns the smaller of the two roots for determinism.
inline std::optional<FpElem> fp_sqrt(const FpElem& a) {
  const std::uint64_t p = a.p;
  if (p == 2) throw MathError("p = 2 rejected");
  if (a.v == 0) return FpElem(0, p);
  if (!fp_is_square(a)) return std::nullopt;
  const Int P(static_cast<unsigned long>(p));
  Int q = P - 1;
  long s = 0;
  while (mpz_even_p(q.get_mpz_t())) { q >>= 1; ++s; }
  FpElem z(2, p);
  while (fp_is_square(z)) z = z + FpElem(1, p);
  FpElem m_c = fp_pow(z, q);
  FpElem t = fp_pow(a, q);
  FpElem r = fp_pow(a, (q + 1) / 2);
  long m = s;
  while (t.v != 1) {
    FpElem tt = t;
    long i = 0;
    while (tt.v != 1) { tt = tt * tt; ++i; }
    FpElem b = m_c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b;
    m_c = b * b;
    t = t * m_c;
    r = r * b;
    m = i;
  }
  if (r.v > p - r.v) r = -r;
  return r;
}

template <>
struct Coeff<FpElem> {
  static FpElem zero(const FpElem& like) { return FpElem(0, like.p); }
  static FpElem one(const FpElem& like) { return FpElem(1, like.p); }
  static FpElem from_long(const FpElem& like, long n) {
    long r = n % static_cast<long>(like.p);
    if (r < 0) r += static_cast<long>(like.p);
    return FpElem(static_cast<std::uint64_t>(r), like.p);
  }
  static bool is_zero(const FpElem& x) { return x.v == 0; }
  static FpElem inv(const FpElem& x) { return fp_inv(x); }
};

using PolyFp = Poly<FpElem>;

inline PolyFp reduce_mod_p(const PolyZ& a, std::uint64_t p) {
  return map_poly(a, [&](const Int& x) { return FpElem::from_int(x, p); });
}

inline PolyFp reduce_mod_p(const PolyQ& a, std::uint64_t p) {
  return map_poly(a, [&](const Rat& x) { return FpElem::from_rat(x, p); });
}

}  // namespace apv
