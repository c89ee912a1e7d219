#pragma once

// Fixed-precision p-adic arithmetic with explicit precision accounting.
//
// A PadicNumber is known modulo p^N (absolute precision N) and stored as
// unit * p^v with the unit kept modulo p^{N-v}. Operations propagate the
// worst-case precision: sums work at the minimum absolute precision,
// products at the minimum relative precision. The zero-to-precision element
// (unit 0, v = N) represents "0 mod p^N".

#include "apverify/poly.hpp"

namespace apv {

class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber zero_at(const Int& p, long precision) {
    PadicNumber x;
    x.p_ = p;
    x.prec_ = precision;
    x.v_ = precision;
    x.unit_ = 0;
    return x;
  }

  static PadicNumber from_int(const Int& a, const Int& p, long precision);
  static PadicNumber from_rat(const Rat& a, const Int& p, long precision);

  const Int& prime() const { return p_; }
  long precision() const { return prec_; }
  /// Valuation; for the zero-to-precision element this is the precision.
  long valuation() const { return v_; }
  const Int& unit() const { return unit_; }
  bool is_zero_to_precision() const { return unit_ == 0; }
  long relative_precision() const { return unit_ == 0 ? 0 : prec_ - v_; }

  /// Integer lift in [0, p^precision).
  Int lift() const;

  /// The value reduced mod p^k (k <= precision required).
  Int lift_mod(long k) const;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

  PadicNumber inverse() const;
  /// Truncate to a lower absolute precision.
  PadicNumber truncated(long precision) const;

  std::string str() const;

 private:
  static PadicNumber normalized(const Int& value, const Int& p, long precision);
  static PadicNumber make(const Int& p, long v, const Int& unit, long precision);

  Int p_ = 0;
  long prec_ = 0;
  long v_ = 0;
  Int unit_ = 0;

  friend std::optional<PadicNumber> padic_sqrt(const PadicNumber& a);
};

/// a == b to the smaller of the two precisions.
bool equal_to_precision(const PadicNumber& a, const PadicNumber& b);

/// Square testing in Q_p. Requires enough relative precision to decide
/// (1 digit for odd p, 3 digits for p = 2); throws MathError otherwise.
bool qp_is_square(const PadicNumber& a);

/// Square root for odd p (even valuation, unit a residue); deterministic
/// choice: the root whose unit has the smaller integer lift.
std::optional<PadicNumber> padic_sqrt(const PadicNumber& a);

/// Hensel lifting of a simple root: requires |f(x0)| < |f'(x0)|^2.
/// Returns the root to absolute precision `precision`.
PadicNumber hensel_lift_root(const PolyZ& f, const PadicNumber& x0,
                             long precision);

/// Power sums p_1..p_count of the roots of a monic polynomial, by Newton's
/// identities, exactly over the coefficient field.
template <class T>
std::vector<T> power_sums(const Poly<T>& a, int count) {
  if (a.is_zero() || !(a.lc() == Coeff<T>::one(a.lc())))
    throw MathError("power sums require a monic polynomial");
  const long n = a.degree();
  const T zero = Coeff<T>::zero(a.lc());
  // e_i with signs: a = x^n + c_{n-1} x^{n-1} + ... ; e_i = (-1)^i c_{n-i}
  std::vector<T> e(static_cast<std::size_t>(n) + 1, zero);
  for (long i = 1; i <= n; ++i) {
    T ci = a.at(static_cast<std::size_t>(n - i), zero);
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? ci : -ci;
  }
  std::vector<T> p;
  p.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    T s = zero;
    for (int i = 1; i < k && i <= n; ++i) {
      T t = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i - 1)];
      if (i % 2 == 1)
        s = s + t;
      else
        s = s - t;
    }
    if (k <= n) {
      T t = e[static_cast<std::size_t>(k)] * Coeff<T>::from_long(zero, k);
      if (k % 2 == 1)
        s = s + t;
      else
        s = s - t;
    }
    p.push_back(s);
  }
  return p;
}

struct QuadraticFactor {
  PolyZ factor;    // monic quadratic, coefficients reduced mod 2^precision
  PolyZ cofactor;  // f / factor to the same precision
  long precision;
};

/// Finds a monic quadratic factor of f over Z_2 to the requested precision by
/// exhaustive seeding mod 2^seed_bits plus two-variable Newton iteration on
/// the division remainder. Returns nullopt when no seed converges.
std::optional<QuadraticFactor> find_quadratic_factor_2adic(
    const PolyZ& f, long precision, int seed_bits = 6);

}  // namespace apv
