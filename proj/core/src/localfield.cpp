#include "apverify/localfield.hpp"

#include "apverify/padic.hpp"

#include <algorithm>

namespace apv {

namespace {

Rat det_rat(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    Rat inv = Rat(1) / m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat factor = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

}  // namespace

EtaleAlgebra2::EtaleAlgebra2(PolyZ modulus) : m_(std::move(modulus)) {
  if (m_.degree() < 2 || m_.degree() > 4)
    throw MathError("modulus degree out of the supported range [2, 4]");
  if (m_.lc() != 1) throw MathError("modulus must be monic");
  Rat d = discriminant(to_rational(m_));
  if (d == 0) throw MathError("modulus is not squarefree");
  disc_v2_ = valuation(d.get_num(), Int(2)) - valuation(d.get_den(), Int(2));
  if (disc_v2_ < 0) throw MathError("integral modulus has integral discriminant");
}

PolyQ EtaleAlgebra2::charpoly(const PolyQ& alpha) const {
  const long n = degree();
  PolyQ mq = to_rational(m_);
  PolyQ a = mod(alpha, mq);
  // columns of multiplication by alpha on 1, x, ..., x^{n-1}
  std::vector<std::vector<Rat>> mult(static_cast<std::size_t>(n),
                                     std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  PolyQ cur = a;
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < n; ++i)
      mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          cur.at(static_cast<std::size_t>(i), Rat(0));
    cur = mod(mul(cur, poly_x(Rat(0))), mq);
  }
  // interpolate det(tI - M) at t = 0..n
  std::vector<Rat> nodes, values;
  for (long t = 0; t <= n; ++t) {
    std::vector<std::vector<Rat>> tm = mult;
    for (auto& row : tm)
      for (auto& x : row) x = -x;
    for (long i = 0; i < n; ++i) tm[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += Rat(t);
    nodes.push_back(Rat(t));
    values.push_back(det_rat(tm));
  }
  PolyQ out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    PolyQ li = poly_const(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      li = mul(li, poly_from<Rat>({-nodes[j], Rat(1)}));
      denom *= nodes[i] - nodes[j];
    }
    out = add(out, scale(li, Rat(values[i] / denom)));
  }
  return out;
}

std::vector<Rat> newton_polygon_slopes(const PolyQ& f, const Int& p) {
  if (f.is_zero()) throw MathError("Newton polygon of zero");
  std::vector<std::pair<long, Rat>> pts;  // (i, v_p(c_i))
  for (long i = 0; i <= f.degree(); ++i) {
    Rat c = f.at(static_cast<std::size_t>(i), Rat(0));
    if (c == 0) continue;
    long v = valuation(c.get_num(), p) - valuation(c.get_den(), p);
    pts.emplace_back(i, Rat(v));
  }
  // lower convex hull, left to right
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep if b is strictly below segment a->pt
      Rat lhs = (b.second - a.second) * Rat(pt.first - a.first);
      Rat rhs = (pt.second - a.second) * Rat(b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Rat> out;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    long len = hull[s + 1].first - hull[s].first;
    Rat slope = (hull[s + 1].second - hull[s].second) / Rat(len);
    for (long i = 0; i < len; ++i) out.push_back(-slope);  // root valuations
  }
  return out;
}

namespace {

constexpr long kWorkPrec = 420;  // 2-adic digits carried through the tests

PadicNumber as_q2(const Int& value) {
  return PadicNumber::from_int(value, Int(2), kWorkPrec);
}

bool q2_square_checked(const PadicNumber& x) {
  if (x.is_zero_to_precision())
    throw MathError("insufficient 2-adic precision in square test");
  return qp_is_square(x);
}

// Squares in Q_2(theta), theta^2 + a theta + b = 0, with the coefficients
// known mod 2^kWorkPrec. Scaling by 4 moves alpha = A + B theta into the
// pi-basis with integral coordinates: 4 alpha = (4A - 2aB) + (2B) pi, where
// pi = sqrt(a^2 - 4b).
bool square_in_quadratic(const PolyZ& beta, const PolyZ& q, const PolyZ& m) {
  PolyZ rem = mod(mod(beta, m), q);
  Int A = rem.at(0, Int(0));
  Int B = rem.at(1, Int(0));
  Int a = q.at(1, Int(0));
  Int b = q.at(0, Int(0));
  PadicNumber delta = as_q2(a * a - 4 * b);
  PadicNumber app = as_q2(4 * A - 2 * a * B);  // A'' (pi-coordinate basis)
  PadicNumber bpp = as_q2(2 * B);              // B''

  if (delta.is_zero_to_precision())
    throw MathError("quadratic modulus is not separable to working precision");
  if (qp_is_square(delta)) {
    // split algebra: evaluate at both roots (-a +- pi0)/2; scale by 4
    auto pi0 = padic_sqrt(delta);
    PadicNumber av = as_q2(4 * A) - as_q2(2 * B * a);
    PadicNumber bv = as_q2(2 * B);
    PadicNumber plus = av + bv * (*pi0);
    PadicNumber minus = av - bv * (*pi0);
    return q2_square_checked(plus) && q2_square_checked(minus);
  }
  if (bpp.is_zero_to_precision()) {
    // alpha lies in Q_2: square in the field iff alpha or delta*alpha is
    if (app.is_zero_to_precision())
      throw MathError("insufficient 2-adic precision in square test");
    return qp_is_square(app) || qp_is_square(app * delta);
  }
  PadicNumber norm = app * app - delta * bpp * bpp;
  if (norm.is_zero_to_precision())
    throw MathError("insufficient 2-adic precision in square test");
  if (!qp_is_square(norm)) return false;
  auto nu = padic_sqrt(norm);
  PadicNumber half = as_q2(Int(2)).inverse();
  PadicNumber t1 = (app + *nu) * half;
  PadicNumber t2 = (app - *nu) * half;
  return q2_square_checked(t1) || q2_square_checked(t2);
}

}  // namespace

bool EtaleAlgebra2::is_square(const PolyQ& alpha) const {
  const long n = degree();
  PolyQ mq = to_rational(m_);
  PolyQ a = mod(alpha, mq);
  if (a.is_zero()) return true;

  // clear denominators by a square
  Int den(1);
  for (const auto& c : a.c) den = lcm(den, c.get_den());
  PolyZ beta;
  for (long i = 0; i <= a.degree(); ++i) {
    Rat c = a.at(static_cast<std::size_t>(i), Rat(0)) * Rat(den * den);
    beta.c.push_back(c.get_num());
  }
  beta.trim();

  PolyQ chi = charpoly(to_rational(beta));
  if (chi.at(0, Rat(0)) == 0)
    throw MathError("square test requires a non-zero-divisor");

  if (n == 2) return square_in_quadratic(beta, m_, m_);

  if (n == 4) {
    for (int seed_bits : {6, 8, 10}) {
      auto split = find_quadratic_factor_2adic(m_, kWorkPrec, seed_bits);
      if (!split) continue;
      const PolyZ& q1 = split->factor;
      PolyZ q2 = map_poly(split->cofactor, [&](const Int& c) {
        return mod_pos(c, pow_int(Int(2), kWorkPrec));
      });
      if (q2.degree() != 2 || q2.lc() != 1)
        throw MathError("unexpected cofactor shape in quartic split");
      return square_in_quadratic(beta, q1, m_) &&
             square_in_quadratic(beta, q2, m_);
    }
    throw MathError(
        "quartic modulus did not split into quadratics over Q_2 within the "
        "seed budget; extension unsupported");
  }
  throw MathError("unsupported etale degree for the square test");
}

}  // namespace apv
