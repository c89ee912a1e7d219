#pragma once

// Arithmetic in Z[sqrt(2)] as coefficient pairs a + b*sqrt(2). Just enough
// for expanding (1 + sqrt2)^j (u + v sqrt2)^5 and the conjugation identities.

#include "apverify/ints.hpp"

namespace apv {

struct ZSqrt2 {
  Int a = 0, b = 0;  // a + b sqrt(2)

  ZSqrt2() = default;
  ZSqrt2(Int x, Int y) : a(std::move(x)), b(std::move(y)) {}
};

inline ZSqrt2 operator+(const ZSqrt2& x, const ZSqrt2& y) {
  return {x.a + y.a, x.b + y.b};
}
inline ZSqrt2 operator-(const ZSqrt2& x, const ZSqrt2& y) {
  return {x.a - y.a, x.b - y.b};
}
inline ZSqrt2 operator*(const ZSqrt2& x, const ZSqrt2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline bool operator==(const ZSqrt2& x, const ZSqrt2& y) {
  return x.a == y.a && x.b == y.b;
}

inline ZSqrt2 conj(const ZSqrt2& x) { return {x.a, -x.b}; }

/// (1 + sqrt2)^j for any sign of j; the inverse of 1 + sqrt2 is sqrt2 - 1.
inline ZSqrt2 unit_power(long j) {
  ZSqrt2 base = j >= 0 ? ZSqrt2(1, 1) : ZSqrt2(-1, 1);
  long e = j >= 0 ? j : -j;
  ZSqrt2 r(1, 0);
  for (long i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace apv
