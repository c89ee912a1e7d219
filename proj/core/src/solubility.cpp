#include "apverify/solubility.hpp"

#include "apverify/localfield.hpp"
#include "apverify/padic.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace apv {

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<PolyQ> sturm_chain(const PolyQ& f) {
  std::vector<PolyQ> chain{f, derivative(f)};
  while (!chain.back().is_zero()) {
    const PolyQ& a = chain[chain.size() - 2];
    const PolyQ& b = chain.back();
    PolyQ r = neg(mod(a, b));
    if (r.is_zero()) break;
    chain.push_back(r);
  }
  return chain;
}

int sign_variations(const std::vector<PolyQ>& chain, const Rat& x, int at_inf) {
  int prev = 0, var = 0;
  for (const auto& g : chain) {
    int s;
    if (at_inf != 0) {
      if (g.is_zero()) continue;
      s = sign_of(g.lc());
      if (at_inf < 0 && g.degree() % 2 == 1) s = -s;
    } else {
      s = sign_of(eval(g, x));
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int count_real_roots(const PolyQ& f) {
  if (f.degree() < 1) return 0;
  auto chain = sturm_chain(f);
  return sign_variations(chain, Rat(0), -1) - sign_variations(chain, Rat(0), +1);
}

LocalSolubilityResult has_real_points(const HyperellipticCurve& curve) {
  LocalSolubilityResult out;
  out.place = 0;
  PolyQ f = to_rational(curve.f);
  if (curve.lc() > 0) {
    // Cauchy bound: f > 0 for x >= B
    Rat maxc(0);
    for (const auto& c : f.c) {
      Rat a = abs(c);
      if (a > maxc) maxc = a;
    }
    Rat bound = Rat(1) + maxc / Rat(curve.lc());
    out.status = Solubility::soluble;
    std::ostringstream os;
    os << "f(x) > 0 for x >= " << to_string(bound) << " (leading coefficient positive)";
    out.witness = os.str();
    return out;
  }
  int roots = count_real_roots(f);
  if (roots > 0) {
    out.status = Solubility::soluble;
    out.witness = "f has a real zero (Sturm count " + std::to_string(roots) + ")";
  } else {
    out.status = Solubility::insoluble;
    out.witness = "f < 0 on all of R and the leading coefficient is negative";
  }
  return out;
}

namespace {

struct QpSearch {
  Int p;
  int margin;  // residue digits needed to settle a unit square class
  int depth_limit;
  PolyZ g;
  PolyZ dg;
  int max_depth_seen = 0;

  bool unit_square(const Int& unit) const {
    if (p == 2) return mod_pos(unit, Int(8)) == 1;
    return pow_mod(mod_pos(unit, p), (p - 1) / 2, p) == 1;
  }

  // decide on the disc x = x0 mod p^k; three-valued
  Solubility disc(const Int& x0, int k, std::string* witness) {
    max_depth_seen = std::max(max_depth_seen, k);
    Int c = eval(g, x0);
    if (c == 0) {
      *witness = "exact zero of f at " + to_string(x0);
      return Solubility::soluble;
    }
    long v = valuation(c, p);
    if (v + margin <= k) {
      // the value class is constant on the disc
      if (v % 2 == 0 && unit_square(c / pow_int(p, static_cast<unsigned long>(v)))) {
        *witness = "square value on the disc " + to_string(x0) + " + O(p^" +
                   std::to_string(k) + ")";
        return Solubility::soluble;
      }
      return Solubility::insoluble;
    }
    Int d = eval(dg, x0);
    if (d != 0) {
      long vd = valuation(d, p);
      if (v > 2 * vd) {
        *witness = "Hensel zero of f near " + to_string(x0) + " (v=" +
                   std::to_string(v) + ", v'=" + std::to_string(vd) + ")";
        return Solubility::soluble;
      }
    }
    if (k >= depth_limit) return Solubility::inconclusive;
    bool saw_inconclusive = false;
    const Int pk = pow_int(p, static_cast<unsigned long>(k));
    for (Int r = 0; r < p; r += 1) {
      Solubility s = disc(x0 + r * pk, k + 1, witness);
      if (s == Solubility::soluble) return s;
      if (s == Solubility::inconclusive) saw_inconclusive = true;
    }
    return saw_inconclusive ? Solubility::inconclusive : Solubility::insoluble;
  }
};

}  // namespace

LocalSolubilityResult has_qp_points(const HyperellipticCurve& curve,
                                    const Int& p, int depth_limit) {
  if (!is_probable_prime(p)) throw MathError("p must be prime");
  LocalSolubilityResult out;
  out.place = p;
  if (depth_limit <= 0) {
    Rat disc = discriminant(to_rational(curve.f));
    long vdisc = valuation(disc.get_num(), p) - valuation(disc.get_den(), p);
    if (vdisc < 0) vdisc = 0;
    depth_limit = static_cast<int>(2 * (vdisc + 4));
  }

  PolyZ fstar;  // t^10 f(1/t)
  fstar.c.assign(11, Int(0));
  for (long i = 0; i <= curve.f.degree(); ++i)
    fstar.c[static_cast<std::size_t>(10 - i)] = curve.f.c[static_cast<std::size_t>(i)];
  fstar.trim();

  QpSearch affine{p, p == 2 ? 3 : 1, depth_limit, curve.f, derivative(curve.f)};
  QpSearch infinity{p, p == 2 ? 3 : 1, depth_limit, fstar, derivative(fstar)};

  std::string witness;
  bool saw_inconclusive = false;
  for (Int x0 = 0; x0 < p; x0 += 1) {
    Solubility s = affine.disc(x0, 1, &witness);
    if (s == Solubility::soluble) {
      out.status = s;
      out.witness = "affine disc x = " + to_string(x0) + " mod p: " + witness;
      out.depth_used = affine.max_depth_seen;
      return out;
    }
    if (s == Solubility::inconclusive) saw_inconclusive = true;
  }
  Solubility s = infinity.disc(Int(0), 1, &witness);
  out.depth_used = std::max(affine.max_depth_seen, infinity.max_depth_seen);
  if (s == Solubility::soluble) {
    out.status = s;
    out.witness = "disc at infinity (t = 1/x): " + witness;
    return out;
  }
  if (s == Solubility::inconclusive) saw_inconclusive = true;
  out.status =
      saw_inconclusive ? Solubility::inconclusive : Solubility::insoluble;
  out.witness = saw_inconclusive ? "depth limit reached on some disc"
                                 : "every residue disc carries non-square values";
  return out;
}

namespace {

unsigned search_threads() {
  if (const char* env = std::getenv("APVERIFY_THREADS")) {
    long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(std::min(n, 16L));
  }
  return 1;
}

// squares bitset modulo 64 * 63 * 65 * 11
constexpr std::uint64_t kFilterMod = 2882880;

const std::vector<bool>& square_filter() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(kFilterMod, false);
    for (std::uint64_t z = 0; z < kFilterMod; ++z) t[(z * z) % kFilterMod] = true;
    return t;
  }();
  return table;
}

}  // namespace

std::vector<CurvePoint> search_rational_points(const HyperellipticCurve& curve,
                                               long height_bound) {
  if (height_bound < 1) throw MathError("height bound must be >= 1");
  const auto& filter = square_filter();
  std::vector<std::uint64_t> cmod;
  for (long i = 0; i <= 10; ++i)
    cmod.push_back(mod_pos(curve.f.at(static_cast<std::size_t>(i), Int(0)),
                           Int(static_cast<unsigned long>(kFilterMod)))
                       .get_ui());

  auto scan_v_range = [&](long vlo, long vhi, std::vector<CurvePoint>& found) {
    for (long v = vlo; v < vhi; ++v) {
      const std::uint64_t vm = static_cast<std::uint64_t>(v) % kFilterMod;
      // powers of v mod filter
      std::uint64_t vpow[11];
      vpow[0] = 1;
      for (int i = 1; i <= 10; ++i) vpow[i] = (vpow[i - 1] * vm) % kFilterMod;
      for (long u = -height_bound; u <= height_bound; ++u) {
        if (std::gcd(std::abs(u), v) != 1) continue;
        const std::uint64_t um =
            static_cast<std::uint64_t>(((u % static_cast<long>(kFilterMod)) +
                                        static_cast<long>(kFilterMod))) %
            kFilterMod;
        std::uint64_t acc = 0, upow = 1;
        for (int i = 0; i <= 10; ++i) {
          acc = (acc + cmod[static_cast<std::size_t>(i)] * ((upow * vpow[10 - i]) % kFilterMod)) %
                kFilterMod;
          upow = (upow * um) % kFilterMod;
        }
        if (!filter[acc]) continue;
        // exact confirmation
        Int uu(u), vv(v), value(0);
        for (int i = 0; i <= 10; ++i)
          value += curve.f.at(static_cast<std::size_t>(i), Int(0)) *
                   pow_int(uu, static_cast<unsigned long>(i)) *
                   pow_int(vv, static_cast<unsigned long>(10 - i));
        if (value < 0 || !is_perfect_square(value)) continue;
        Int y0 = isqrt(value);
        Rat x(uu, vv);
        x.canonicalize();
        Rat y(y0, pow_int(vv, 5));
        y.canonicalize();
        found.push_back(CurvePoint::affine(x, y));
        if (y0 != 0) found.push_back(CurvePoint::affine(x, -y));
      }
    }
  };

  std::vector<CurvePoint> points;
  if (curve.rational_infinity()) {
    points.push_back(CurvePoint::infinity(+1));
    points.push_back(CurvePoint::infinity(-1));
  }

  const unsigned nthreads = search_threads();
  if (nthreads <= 1) {
    scan_v_range(1, height_bound + 1, points);
  } else {
    std::vector<std::vector<CurvePoint>> parts(nthreads);
    std::vector<std::thread> pool;
    const long chunk = (height_bound + static_cast<long>(nthreads)) / static_cast<long>(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        long lo = 1 + static_cast<long>(t) * chunk;
        long hi = std::min(height_bound + 1, lo + chunk);
        if (lo < hi) scan_v_range(lo, hi, parts[t]);
      });
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      points.insert(points.end(), part.begin(), part.end());
  }
  std::sort(points.begin(), points.end());
  return points;
}

Q2WitnessReport verify_q2_divisor_witnesses() {
  const PolyZ f1 = build_family(1).f;
  Q2WitnessReport rep;

  auto q2_square = [&](const Rat& x) {
    PadicNumber v = PadicNumber::from_rat(x, Int(2), 12);
    return qp_is_square(v);
  };
  rep.d1_half_ok = q2_square(eval(to_rational(f1), Rat(1, 2)));
  rep.d1_quarter_ok = q2_square(eval(to_rational(f1), Rat(1, 4)));

  EtaleAlgebra2 quad(poly_from<Int>({Int(6), Int(-2), Int(1)}));
  rep.d2_ok = quad.is_square(to_rational(f1));

  EtaleAlgebra2 quartic(
      poly_from<Int>({Int(36), Int(0), Int(12), Int(4), Int(1)}));
  rep.d3_ok = quartic.is_square(to_rational(f1));
  return rep;
}

}  // namespace apv
