#pragma once

// Exact integer and rational arithmetic. Int/Rat are GMP types; everything
// downstream (polynomials, lattices, p-adics) is built on top of them.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apv {

using Int = mpz_class;
using Rat = mpq_class;

struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_from(long v) { return Int(v); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
  if (a < 0) throw MathError("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/// Exact n-th root when it exists.
inline std::optional<Int> exact_root(const Int& a, unsigned long n) {
  Int r;
  int exactp = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (exactp) return r;
  return std::nullopt;
}

/// v_p(a) for a != 0; throws on a == 0.
inline long valuation(const Int& a, const Int& p) {
  if (a == 0) throw MathError("valuation of zero");
  Int t = a;
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    t = q;
    ++v;
  }
}

/// (v_p(x), unit) with x = unit * p^v for rational x != 0.
inline std::pair<long, Rat> rat_valuation(const Rat& x, const Int& p) {
  if (x == 0) throw MathError("valuation of zero");
  long vn = (x.get_num() == 0) ? 0 : valuation(x.get_num(), p);
  long vd = valuation(x.get_den(), p);
  Rat unit = x / Rat(pow_int(p, static_cast<unsigned long>(vn >= vd ? vn - vd : 0)));
  if (vn < vd) unit = x * Rat(pow_int(p, static_cast<unsigned long>(vd - vn)));
  return {vn - vd, unit};
}

inline Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw MathError("not invertible modulo m");
  return r;
}

inline Int pow_mod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Trial division up to `bound`. Returns (prime, exponent) pairs and the
/// remaining cofactor (1 when fully factored).
struct Factorization {
  std::vector<std::pair<Int, int>> factors;
  Int cofactor = 1;
  bool complete() const { return cofactor == 1; }
};

inline Factorization trial_factor(Int n, unsigned long bound = 1000000) {
  Factorization out;
  if (n < 0) n = -n;
  if (n == 0) throw MathError("factoring zero");
  for (Int p = 2; p * p <= n && p <= Int(bound); p = (p == 2 ? Int(3) : p + 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.factors.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (n <= Int(bound) || is_probable_prime(n)) {
      out.factors.emplace_back(n, 1);
    } else {
      out.cofactor = n;
    }
  }
  return out;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

/// Decimal serialization: plain for integers, "n/d" otherwise.
inline std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace apv
