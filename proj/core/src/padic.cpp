#include "apverify/padic.hpp"

#include "apverify/fp.hpp"

#include <sstream>

namespace apv {

PadicNumber PadicNumber::normalized(const Int& value, const Int& p,
                                    long precision) {
  PadicNumber x;
  x.p_ = p;
  x.prec_ = precision;
  Int pk = pow_int(p, static_cast<unsigned long>(precision));
  Int c = mod_pos(value, pk);
  if (c == 0) {
    x.v_ = precision;
    x.unit_ = 0;
    return x;
  }
  x.v_ = apv::valuation(c, p);
  Int rest = c / pow_int(p, static_cast<unsigned long>(x.v_));
  x.unit_ = mod_pos(rest, pow_int(p, static_cast<unsigned long>(precision - x.v_)));
  return x;
}

PadicNumber PadicNumber::make(const Int& p, long v, const Int& unit,
                              long precision) {
  PadicNumber x;
  x.p_ = p;
  x.prec_ = precision;
  if (unit == 0 || v >= precision) {
    x.v_ = precision;
    x.unit_ = 0;
    return x;
  }
  x.v_ = v;
  x.unit_ = mod_pos(unit, pow_int(p, static_cast<unsigned long>(precision - v)));
  return x;
}

PadicNumber PadicNumber::from_int(const Int& a, const Int& p, long precision) {
  if (precision <= 0) throw MathError("precision must be positive");
  return normalized(a, p, precision);
}

PadicNumber PadicNumber::from_rat(const Rat& a, const Int& p, long precision) {
  if (precision <= 0) throw MathError("precision must be positive");
  if (a == 0) return zero_at(p, precision);
  long vd = apv::valuation(a.get_den(), p);
  long vn = apv::valuation(a.get_num(), p);
  long v = vn - vd;
  if (v >= precision) return zero_at(p, precision);
  Int num = a.get_num() / pow_int(p, static_cast<unsigned long>(vn));
  Int den = a.get_den() / pow_int(p, static_cast<unsigned long>(vd));
  Int m = pow_int(p, static_cast<unsigned long>(precision - v));
  Int u = mod_pos(num * mod_inverse(den, m), m);
  return make(p, v, u, precision);
}

Int PadicNumber::lift() const {
  if (unit_ == 0) return 0;
  if (v_ < 0) throw MathError("lift of a p-adic number with a pole");
  return unit_ * pow_int(p_, static_cast<unsigned long>(v_));
}

Int PadicNumber::lift_mod(long k) const {
  if (k > prec_) throw MathError("requested precision exceeds stored precision");
  return mod_pos(lift(), pow_int(p_, static_cast<unsigned long>(k)));
}

static void check_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) throw MathError("p-adic prime mismatch");
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const Int& p = a.prime();
  const long n = std::min(a.precision(), b.precision());
  const long m = std::min({a.valuation(), b.valuation(), 0L});
  // work with integer values scaled by p^{-m}
  Int ca = a.is_zero_to_precision()
               ? Int(0)
               : a.unit() * pow_int(p, static_cast<unsigned long>(a.valuation() - m));
  Int cb = b.is_zero_to_precision()
               ? Int(0)
               : b.unit() * pow_int(p, static_cast<unsigned long>(b.valuation() - m));
  if (n - m <= 0) return PadicNumber::zero_at(p, n);
  PadicNumber r = PadicNumber::normalized(ca + cb, p, n - m);
  return PadicNumber::make(p, r.valuation() + m, r.unit(), n);
}

PadicNumber operator-(const PadicNumber& a) {
  if (a.is_zero_to_precision()) return a;
  Int m = pow_int(a.prime(),
                  static_cast<unsigned long>(a.precision() - a.valuation()));
  return PadicNumber::make(a.prime(), a.valuation(), m - a.unit(), a.precision());
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) {
  return a + (-b);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  const Int& p = a.prime();
  const long v = a.valuation() + b.valuation();
  const long r = std::min(a.relative_precision(), b.relative_precision());
  if (r <= 0) return PadicNumber::zero_at(p, v);
  Int m = pow_int(p, static_cast<unsigned long>(r));
  return PadicNumber::make(p, v, mod_pos(a.unit() * b.unit(), m), v + r);
}

PadicNumber PadicNumber::inverse() const {
  if (is_zero_to_precision()) throw MathError("inverse of p-adic zero");
  long r = relative_precision();
  Int m = pow_int(p_, static_cast<unsigned long>(r));
  return make(p_, -v_, mod_inverse(unit_, m), -v_ + r);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  return a * b.inverse();
}

PadicNumber PadicNumber::truncated(long precision) const {
  if (precision >= prec_) return *this;
  if (is_zero_to_precision() || v_ >= precision) return zero_at(p_, precision);
  return make(p_, v_, unit_, precision);
}

std::string PadicNumber::str() const {
  std::ostringstream os;
  if (is_zero_to_precision()) {
    os << "O(" << p_.get_str() << "^" << prec_ << ")";
    return os.str();
  }
  os << unit_.get_str() << "*" << p_.get_str() << "^" << v_ << " + O("
     << p_.get_str() << "^" << prec_ << ")";
  return os.str();
}

bool equal_to_precision(const PadicNumber& a, const PadicNumber& b) {
  check_same_prime(a, b);
  return (a - b).is_zero_to_precision();
}

bool qp_is_square(const PadicNumber& a) {
  if (a.is_zero_to_precision())
    throw MathError("insufficient precision: value is zero to precision");
  const bool two = (a.prime() == 2);
  if (a.relative_precision() < (two ? 3 : 1))
    throw MathError("insufficient precision to decide squareness");
  if (a.valuation() % 2 != 0) return false;
  if (two) return mod_pos(a.unit(), Int(8)) == 1;
  return pow_mod(a.unit(), (a.prime() - 1) / 2, a.prime()) == 1;
}

std::optional<PadicNumber> padic_sqrt(const PadicNumber& a) {
  if (a.is_zero_to_precision())
    return PadicNumber::zero_at(a.prime(), (a.precision() + 1) / 2);
  if (!qp_is_square(a)) return std::nullopt;
  if (a.prime() == 2) {
    // unit = 1 mod 8; lift bit by bit: the choice at each level is forced
    const long r = a.relative_precision();
    Int z(1);
    for (long k = 3; k < r; ++k) {
      Int mk1 = pow_int(Int(2), static_cast<unsigned long>(k + 1));
      Int diff = mod_pos(a.unit() - z * z, mk1);
      if (diff != 0)
        z += pow_int(Int(2), static_cast<unsigned long>(k - 1));
    }
    Int m = pow_int(Int(2), static_cast<unsigned long>(std::max(1L, r - 1)));
    z = mod_pos(z, m);
    Int other = mod_pos(m - z, m);
    if (other < z) z = other;
    return PadicNumber::make(Int(2), a.valuation() / 2, z,
                             a.valuation() / 2 + std::max(1L, r - 1));
  }
  const Int& p = a.prime();
  const long r = a.relative_precision();
  Int m = pow_int(p, static_cast<unsigned long>(r));
  FpElem a0 = FpElem::from_int(a.unit(), p.get_ui());
  auto root0 = fp_sqrt(a0);
  if (!root0) return std::nullopt;
  Int x(static_cast<unsigned long>(root0->v));
  long have = 1;
  while (have < r) {
    have = std::min(2 * have, r);
    Int mk = pow_int(p, static_cast<unsigned long>(have));
    Int den = mod_pos(2 * x, mk);
    x = mod_pos(x - (x * x - a.unit()) * mod_inverse(den, mk), mk);
  }
  x = mod_pos(x, m);
  Int other = mod_pos(m - x, m);
  if (other < x) x = other;
  return PadicNumber::make(p, a.valuation() / 2, x, a.valuation() / 2 + r);
}

PadicNumber hensel_lift_root(const PolyZ& f, const PadicNumber& x0,
                             long precision) {
  const Int& p = x0.prime();
  if (x0.valuation() < 0) throw MathError("Hensel seed must be p-integral");
  PolyZ df = derivative(f);
  Int x = x0.lift();
  Int fx = eval(f, x);
  Int dfx = eval(df, x);
  const long big = precision + 1000;
  long vf = (fx == 0) ? big : valuation(fx, p);
  long vdf = (dfx == 0) ? big : valuation(dfx, p);
  if (vdf >= big || vf <= 2 * vdf)
    throw MathError("Hensel condition |f(x0)| < |f'(x0)|^2 violated");
  long correct = vf - vdf;  // digits of x agreeing with the true root
  while (correct < precision) {
    long work = std::min(2 * correct, precision) + 2 * vdf;
    Int mk = pow_int(p, static_cast<unsigned long>(work));
    Int fxk = mod_pos(eval(f, x), mk);
    if (fxk != 0) {
      Int dfxk = eval(df, x);
      long vd = valuation(dfxk, p);
      Int unitd = dfxk / pow_int(p, static_cast<unsigned long>(vd));
      Int num = fxk / pow_int(p, static_cast<unsigned long>(vd));
      Int corr = mod_pos(num * mod_inverse(unitd, mk), mk);
      x = mod_pos(x - corr, mk);
    }
    correct = std::min(2 * correct, precision);
  }
  Int pk = pow_int(p, static_cast<unsigned long>(precision));
  if (mod_pos(eval(f, x), pk) != 0)
    throw MathError("Hensel iteration failed to converge");
  return PadicNumber::from_int(mod_pos(x, pk), p, precision);
}

std::optional<QuadraticFactor> find_quadratic_factor_2adic(const PolyZ& f,
                                                           long precision,
                                                           int seed_bits) {
  if (f.is_zero() || f.degree() < 2)
    throw MathError("need degree >= 2 for quadratic factor search");
  if (f.degree() == 2) {
    if (mpz_even_p(f.lc().get_mpz_t()))
      throw MathError("leading coefficient must be a 2-adic unit");
    Int m = pow_int(Int(2), static_cast<unsigned long>(precision));
    Int li = mod_inverse(f.lc(), m);
    PolyZ q = map_poly(f, [&](const Int& c) { return mod_pos(c * li, m); });
    PolyZ co = poly_const(mod_pos(f.lc(), m));
    return QuadraticFactor{q, co, precision};
  }

  const long W = precision + 8;
  const Int mW = pow_int(Int(2), static_cast<unsigned long>(W));
  const Int mN = pow_int(Int(2), static_cast<unsigned long>(precision));

  auto try_seed = [&](Int a, Int b) -> std::optional<QuadraticFactor> {
    long best_residual = -1;
    for (int iter = 0; iter < 96; ++iter) {
      PolyZ q = poly_from<Int>({mod_pos(b, mW), mod_pos(a, mW), Int(1)});
      auto [Q, R] = divrem(f, q);
      Int r0 = mod_pos(R.at(0, Int(0)), mW);
      Int r1 = mod_pos(R.at(1, Int(0)), mW);
      if (mod_pos(r0, mN) == 0 && mod_pos(r1, mN) == 0) {
        PolyZ qq = map_poly(q, [&](const Int& c) { return mod_pos(c, mN); });
        PolyZ co = map_poly(Q, [&](const Int& c) { return mod_pos(c, mN); });
        return QuadraticFactor{qq, co, precision};
      }
      long vres = std::min(r0 == 0 ? W : valuation(r0, Int(2)),
                           r1 == 0 ? W : valuation(r1, Int(2)));
      if (vres <= best_residual) return std::nullopt;  // stalled outside a basin
      best_residual = vres;
      // dR/da = -(x Q mod q), dR/db = -(Q mod q)
      PolyZ qa = mod(mul(poly_x(Int(0)), Q), q);
      PolyZ qb = mod(Q, q);
      Int j00 = -qa.at(0, Int(0)), j01 = -qb.at(0, Int(0));
      Int j10 = -qa.at(1, Int(0)), j11 = -qb.at(1, Int(0));
      Int detj = mod_pos(j00 * j11 - j01 * j10, mW);
      if (detj == 0) return std::nullopt;
      // Newton step J delta = -R, allowing a non-unit resultant: divide the
      // adjugate solve by the 2-part of the determinant when possible
      long rho = valuation(detj, Int(2));
      if (2 * rho + 1 > vres) return std::nullopt;  // outside the basin
      Int na = -(j11 * r0 - j01 * r1);
      Int nb = -(-j10 * r0 + j00 * r1);
      Int tp = pow_int(Int(2), static_cast<unsigned long>(rho));
      if (mod_pos(na, tp) != 0 || mod_pos(nb, tp) != 0) return std::nullopt;
      Int dunit = detj / tp;
      Int dinv = mod_inverse(dunit, mW);
      a = mod_pos(a + dinv * (na / tp), mW);
      b = mod_pos(b + dinv * (nb / tp), mW);
    }
    return std::nullopt;
  };

  const long seeds = 1L << seed_bits;
  for (long a = 0; a < seeds; ++a)
    for (long b = 0; b < seeds; ++b)
      if (auto r = try_seed(Int(a), Int(b))) return r;
  return std::nullopt;
}

}  // namespace apv
