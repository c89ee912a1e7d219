#include "apverify/counting.hpp"

#include "apverify/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace apv {

namespace {

void require_good_prime(const PolyZ& f, std::uint32_t p) {
  if (p == 2 || !is_probable_prime(Int(p))) throw MathError("p must be an odd prime");
  PolyFp fp = reduce_mod_p(f, p);
  if (fp.degree() != f.degree()) throw MathError("bad prime: degree drop");
  if (gcd(fp, derivative(fp)).degree() != 0)
    throw MathError("bad prime: model not squarefree mod p");
}

unsigned thread_budget() {
  if (const char* env = std::getenv("APVERIFY_THREADS")) {
    long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

}  // namespace

Int count_curve_points(const PolyZ& f, std::uint32_t p, std::uint32_t k) {
  require_good_prime(f, p);
  if (k < 1 || k > 4) throw MathError("k out of range [1, 4]");
  FqCtx F(p, k);
  const std::uint64_t q = F.q();

  // coefficient table of f over F_q
  std::vector<FqCtx::Raw> coeff;
  for (long i = 0; i <= f.degree(); ++i) coeff.push_back(F.from_int(f.c[static_cast<std::size_t>(i)]));

  // squares table over the whole field
  std::vector<std::uint8_t> is_sq(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    FqCtx::Raw z = F.from_index(i);
    is_sq[F.to_index(F.mul(z, z))] = 1;
  }

  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      FqCtx::Raw x = F.from_index(i);
      FqCtx::Raw y = coeff.back();
      for (std::size_t j = coeff.size() - 1; j-- > 0;)
        y = F.add(F.mul(y, x), coeff[j]);
      if (F.is_zero(y))
        acc += 1;
      else if (is_sq[F.to_index(y)])
        acc += 2;
    }
    return acc;
  };

  const unsigned nthreads = std::min<unsigned>(thread_budget(), 16);
  std::uint64_t affine = 0;
  if (nthreads <= 1 || q < 4096) {
    affine = count_range(0, q);
  } else {
    std::vector<std::uint64_t> partial(nthreads, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (q + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        std::uint64_t lo = t * chunk, hi = std::min(q, lo + chunk);
        if (lo < hi) partial[t] = count_range(lo, hi);
      });
    for (auto& th : pool) th.join();
    for (auto v : partial) affine += v;
  }

  Int total(static_cast<unsigned long>(affine));
  if (F.is_square(F.from_int(f.lc()))) total += 2;  // the two points at infinity
  return total;
}

LPolynomial l_polynomial(const PolyZ& f, std::uint32_t p) {
  require_good_prime(f, p);
  std::vector<Int> counts;
  for (std::uint32_t k = 1; k <= 4; ++k) counts.push_back(count_curve_points(f, p, k));

  const Int P(p);
  // power sums of the Frobenius eigenvalues
  std::vector<Int> s;
  for (std::uint32_t k = 1; k <= 4; ++k)
    s.push_back(pow_int(P, k) + 1 - counts[k - 1]);

  // Newton: m e_m = sum_{i=1..m} (-1)^{i-1} s_i e_{m-i}
  std::vector<Int> e{Int(1)};
  for (int m = 1; m <= 4; ++m) {
    Int acc = 0;
    for (int i = 1; i <= m; ++i) {
      Int t = s[static_cast<std::size_t>(i - 1)] * e[static_cast<std::size_t>(m - i)];
      if (i % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    if (acc % m != 0) throw MathError("counts are inconsistent (non-integral L)");
    e.push_back(acc / m);
  }

  LPolynomial L;
  L.p = p;
  L.a.assign(9, Int(0));
  L.a[0] = 1;
  for (int m = 1; m <= 4; ++m) L.a[static_cast<std::size_t>(m)] = (m % 2 == 0) ? e[static_cast<std::size_t>(m)] : -e[static_cast<std::size_t>(m)];
  for (int i = 0; i <= 3; ++i)
    L.a[static_cast<std::size_t>(8 - i)] = pow_int(P, static_cast<unsigned long>(4 - i)) * L.a[static_cast<std::size_t>(i)];

  // Weil bounds |a_i| <= C(8, i) p^{i/2}
  const long binom[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int i = 0; i <= 8; ++i) {
    Int bound2 = Int(binom[i]) * Int(binom[i]) * pow_int(P, static_cast<unsigned long>(i));
    if (L.a[static_cast<std::size_t>(i)] * L.a[static_cast<std::size_t>(i)] > bound2)
      throw MathError("Weil bound violated: counting bug");
  }
  if (counts[0] != P + 1 + L.a[1])
    throw MathError("count/L-coefficient mismatch");
  if (L.value_at_1() <= 0) throw MathError("nonpositive Jacobian order");
  return L;
}

std::string jac_point_key(const JacPoint<FpElem>& x) {
  std::ostringstream os;
  os << x.nu << "|" << x.inf_plus << "|" << x.inf_minus << "|u";
  for (const auto& c : x.u.c) os << ":" << c.v;
  os << "|v";
  for (const auto& c : x.v.c) os << ":" << c.v;
  return os.str();
}

namespace {

using Pt = JacPoint<FpElem>;

// Monic polynomial factorization over F_p for degree <= 4 (roots plus a
// quadratic divisor scan); inputs are squarefree.
std::vector<PolyFp> factor_squarefree(const PolyFp& u, std::uint64_t p) {
  std::vector<PolyFp> out;
  PolyFp rest = u;
  for (std::uint64_t r = 0; r < p && rest.degree() > 0; ++r) {
    FpElem x(r, p);
    while (rest.degree() > 0 && Coeff<FpElem>::is_zero(eval(rest, x))) {
      PolyFp lin = poly_from<FpElem>({-x, FpElem(1, p)});
      rest = divexact(rest, lin);
      out.push_back(lin);
    }
  }
  if (rest.degree() == 4) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        PolyFp quad = poly_from<FpElem>({FpElem(b, p), FpElem(a, p), FpElem(1, p)});
        auto [qq, rr] = divrem(rest, quad);
        if (rr.is_zero()) {
          out.push_back(quad);
          out.push_back(qq);
          rest = poly_const(FpElem(1, p));
          goto done;
        }
      }
  }
done:
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// Square root of (f mod u_i) in F_p[x]/(u_i) for irreducible u_i.
std::optional<PolyFp> sqrt_mod_irreducible(const PolyFp& f, const PolyFp& ui,
                                           std::uint64_t p) {
  if (ui.degree() == 1) {
    FpElem x0 = -ui.c[0];
    auto r = fp_sqrt(eval(f, x0));
    if (!r) return std::nullopt;
    return poly_const(*r);
  }
  std::vector<std::uint32_t> mod_coeffs;
  for (const auto& c : ui.c) mod_coeffs.push_back(static_cast<std::uint32_t>(c.v));
  FqCtx F(static_cast<std::uint32_t>(p), mod_coeffs);
  PolyFp fr = mod(f, ui);
  FqCtx::Raw a = F.zero();
  for (long i = 0; i <= fr.degree(); ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(fr.c[static_cast<std::size_t>(i)].v);
  auto r = F.sqrt(a);
  if (!r) return std::nullopt;
  PolyFp out;
  for (std::uint32_t i = 0; i < F.k(); ++i) out.c.push_back(FpElem((*r)[i], p));
  out.trim();
  return out;
}

// CRT in F_p[x]: value v_i modulo pairwise-coprime moduli u_i.
PolyFp poly_crt(const std::vector<PolyFp>& vals, const std::vector<PolyFp>& mods) {
  PolyFp v = vals[0];
  PolyFp m = mods[0];
  for (std::size_t i = 1; i < vals.size(); ++i) {
    auto [g, s, t] = xgcd(m, mods[i]);
    if (g.degree() != 0) throw MathError("crt moduli not coprime");
    // w = (v_i - v) * m^{-1} mod u_i
    PolyFp minv = scale(s, Coeff<FpElem>::inv(g.c[0]));
    PolyFp w = mod(mul(sub(vals[i], v), minv), mods[i]);
    v = add(v, mul(m, w));
    m = mul(m, mods[i]);
  }
  return v;
}

// Random degree-4 Mumford class over F_p (deterministic given the engine).
std::optional<Pt> sample_divisor(const JacCurve<FpElem>& jc, std::uint64_t p,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  PolyFp u = poly_from<FpElem>({FpElem(pick(rng), p), FpElem(pick(rng), p),
                                FpElem(pick(rng), p), FpElem(pick(rng), p),
                                FpElem(1, p)});
  if (gcd(u, derivative(u)).degree() != 0) return std::nullopt;
  std::vector<PolyFp> factors = factor_squarefree(u, p);
  std::vector<PolyFp> roots;
  for (const auto& ui : factors) {
    auto r = sqrt_mod_irreducible(jc.f, ui, p);
    if (!r) return std::nullopt;
    if (pick(rng) % 2 == 1) r = neg(*r);
    roots.push_back(mod(*r, ui));
  }
  PolyFp v = poly_crt(roots, factors);
  return jac_make(jc, u, mod(v, u));
}

Int q_power(const Int& q, int e) { return pow_int(q, static_cast<unsigned long>(e)); }

}  // namespace

GroupStructure::GroupStructure(const PolyZ& f, std::uint32_t p)
    : jc_(JacCurve<FpElem>::make(reduce_mod_p(f, p))), p_(p) {
  LPolynomial L = l_polynomial(f, p);
  order_ = L.value_at_1();

  Factorization fac = trial_factor(order_);
  if (!fac.complete())
    throw MathError("group order exceeds the trial-division bound");

  std::mt19937_64 rng(0x5EED0000ULL + p);
  const Int& N = order_;

  for (const auto& [q, e] : fac.factors) {
    Sylow syl;
    syl.q = q;
    syl.e = e;
    syl.cofactor = N / q_power(q, e);
    syl.cofactor_inv = mod_inverse(syl.cofactor, q_power(q, e));

    // span the whole Sylow subgroup from projected samples
    std::map<std::string, Pt> span;
    Pt id = jac_identity(jc_);
    span[jac_point_key(id)] = id;
    const Int target = q_power(q, e);
    int attempts = 0;
    while (Int(static_cast<long>(span.size())) < target) {
      if (++attempts > 400)
        throw MathError("Sylow sampling failed to generate the subgroup");
      auto sample = sample_divisor(jc_, p, rng);
      if (!sample) continue;
      Pt g = jac_scalar_mul(jc_, syl.cofactor, *sample);
      if (span.count(jac_point_key(g))) continue;
      // close the span under addition of g
      for (;;) {
        std::map<std::string, Pt> next = span;
        for (const auto& [k, x] : span) {
          Pt y = jac_add(jc_, x, g);
          next.emplace(jac_point_key(y), y);
        }
        if (next.size() == span.size()) break;
        span.swap(next);
        if (Int(static_cast<long>(span.size())) > target)
          throw MathError("Sylow span exceeds q^e: order bug");
      }
    }

    // element orders and the lambda partition from the torsion counts
    auto order_exp = [&](const Pt& x) {
      int j = 0;
      Pt y = x;
      while (!y.is_identity()) {
        y = jac_scalar_mul(jc_, q, y);
        ++j;
        if (j > e) throw MathError("element order exceeds Sylow exponent");
      }
      return j;
    };
    std::map<std::string, int> ords;
    std::vector<long> torsion_count(static_cast<std::size_t>(e) + 1, 0);
    for (const auto& [k, x] : span) {
      int j = order_exp(x);
      ords[k] = j;
      for (int t = j; t <= e; ++t) ++torsion_count[static_cast<std::size_t>(t)];
    }
    std::vector<int> mj;  // #{i : lambda_i >= j}
    for (int j = 1; j <= e; ++j) {
      long ratio_num = torsion_count[static_cast<std::size_t>(j)];
      long ratio_den = torsion_count[static_cast<std::size_t>(j - 1)];
      Int ratio(ratio_num);
      Int den(ratio_den);
      Int qq = ratio / den;
      int m = 0;
      Int t(1);
      while (t < qq) { t *= q; ++m; }
      if (t != qq) throw MathError("torsion counts are not q-powers");
      mj.push_back(m);
    }
    for (int i = 1;; ++i) {
      int li = 0;
      for (int j = 0; j < e; ++j)
        if (mj[static_cast<std::size_t>(j)] >= i) ++li;
      if (li == 0) break;
      syl.lambda.push_back(li);
    }

    // greedy basis extraction over the (deterministically ordered) span
    std::map<std::string, Pt> H;
    H[jac_point_key(id)] = id;
    for (int lam : syl.lambda) {
      bool found = false;
      for (const auto& [k, x] : span) {
        if (ords[k] != lam) continue;
        bool clean = true;
        Pt y = x;
        for (Int t = 1; t < q_power(q, lam); t += 1) {
          if (H.count(jac_point_key(y))) { clean = false; break; }
          y = jac_add(jc_, y, x);
        }
        if (!clean) continue;
        syl.basis.push_back(x);
        std::map<std::string, Pt> H2;
        for (const auto& [hk, h] : H) {
          Pt acc = h;
          for (Int t = 0; t < q_power(q, lam); t += 1) {
            H2.emplace(jac_point_key(acc), acc);
            acc = jac_add(jc_, acc, x);
          }
        }
        H.swap(H2);
        found = true;
        break;
      }
      if (!found) throw MathError("basis extraction failed");
    }
    if (Int(static_cast<long>(H.size())) != target)
      throw MathError("basis does not span the Sylow subgroup");

    // full dlog table via mixed-radix walk over the basis
    std::vector<Int> idx(syl.basis.size(), 0);
    std::function<void(std::size_t, const Pt&)> rec = [&](std::size_t i, const Pt& cur) {
      if (i == syl.basis.size()) {
        syl.dlog_table[jac_point_key(cur)] = idx;
        return;
      }
      Pt walk = cur;
      const Int ord = q_power(q, syl.lambda[i]);
      for (Int t = 0; t < ord; t += 1) {
        idx[i] = t;
        rec(i + 1, walk);
        walk = jac_add(jc_, walk, syl.basis[i]);
      }
      idx[i] = 0;
    };
    rec(0, id);

    sylow_.push_back(std::move(syl));
  }

  // assemble invariant factors (descending per index, then reversed)
  std::size_t rank = 0;
  for (const auto& s : sylow_) rank = std::max(rank, s.lambda.size());
  std::vector<Int> inv_desc(rank, Int(1));
  std::vector<Pt> gens_desc(rank, jac_identity(jc_));
  for (const auto& s : sylow_) {
    for (std::size_t i = 0; i < s.lambda.size(); ++i) {
      inv_desc[i] *= q_power(s.q, s.lambda[i]);
      gens_desc[i] = jac_add(jc_, gens_desc[i], s.basis[i]);
    }
  }
  invariants_.assign(inv_desc.rbegin(), inv_desc.rend());
  gens_.assign(gens_desc.rbegin(), gens_desc.rend());

  // verify the generators realize the claimed structure
  Int prod(1);
  for (const auto& d : invariants_) prod *= d;
  if (prod != order_) throw MathError("invariant factors do not multiply to N");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!jac_scalar_mul(jc_, invariants_[i], gens_[i]).is_identity())
      throw MathError("generator order check failed");
    Factorization df = trial_factor(invariants_[i]);
    for (const auto& [r, ee] : df.factors)
      if (jac_scalar_mul(jc_, invariants_[i] / r, gens_[i]).is_identity())
        throw MathError("generator has smaller order than claimed");
  }
}

std::vector<Int> GroupStructure::dlog(const JacPoint<FpElem>& x) const {
  const std::size_t rank = invariants_.size();
  std::vector<Int> out(rank, 0);
  for (const auto& s : sylow_) {
    Pt y = jac_scalar_mul(jc_, s.cofactor, x);
    auto it = s.dlog_table.find(jac_point_key(y));
    if (it == s.dlog_table.end())
      throw MathError("element is outside the generated group");
    const std::vector<Int>& k = it->second;
    for (std::size_t i = 0; i < k.size(); ++i) {
      // component coordinate in the descending index i; map to ascending
      const Int qe = q_power(s.q, s.lambda[i]);
      Int c = mod_pos(s.cofactor_inv * k[i], qe);
      // CRT into the combined coordinate
      std::size_t pos = rank - 1 - i;
      const Int& d = invariants_[pos];
      // out[pos] = out[pos] mod (d / qe terms) combined with c mod qe
      Int m1 = d / qe;  // coprime to qe
      // x = a mod m1-part (already stored), = c mod qe
      Int cur = out[pos];
      // solve z = cur mod m1, z = c mod qe
      Int inv = mod_inverse(mod_pos(m1, qe), qe);
      Int z = cur + m1 * mod_pos((c - cur) * inv, qe);
      out[pos] = mod_pos(z, d);
    }
  }
  return out;
}

JacPoint<FpElem> GroupStructure::from_coords(const std::vector<Int>& c) const {
  if (c.size() != gens_.size()) throw MathError("coordinate arity mismatch");
  Pt acc = jac_identity(jc_);
  for (std::size_t i = 0; i < c.size(); ++i)
    acc = jac_add(jc_, acc, jac_scalar_mul(jc_, c[i], gens_[i]));
  return acc;
}

PairSubgroup subgroup_presentation(const GroupStructure& gs,
                                   const std::vector<JacPoint<FpElem>>& gens) {
  const std::size_t m = gens.size();
  const std::size_t r = gs.invariants().size();
  IntMat stacked(m + r, IntVec(r, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> coords = gs.dlog(gens[i]);
    for (std::size_t j = 0; j < r; ++j) stacked[i][j] = coords[j];
  }
  for (std::size_t j = 0; j < r; ++j) stacked[m + j][j] = gs.invariants()[j];
  IntMat kernel = left_kernel(stacked);
  IntMat proj;
  for (const auto& row : kernel)
    proj.push_back(IntVec(row.begin(), row.begin() + static_cast<long>(m)));
  PairSubgroup out{Int(0), {}, Lattice(m, proj)};
  out.order = out.kernel.index_in_ambient();
  SnfResult s = smith_normal_form(out.kernel.basis());
  for (std::size_t i = 0; i < std::min(out.kernel.basis().size(), m); ++i)
    if (s.d[i][i] > 1) out.image_invariants.push_back(s.d[i][i]);
  std::sort(out.image_invariants.begin(), out.image_invariants.end());
  return out;
}

TorsionIndependenceReport torsion_and_independence() {
  const PolyZ f1 = build_family(1).f;
  TorsionIndependenceReport rep;
  rep.order7 = jacobian_order(f1, 7);
  rep.order41 = jacobian_order(f1, 41);
  rep.gcd_orders = gcd(rep.order7, rep.order41);
  rep.torsion_free = (rep.gcd_orders == 1);

  GroupStructure gs(f1, 7);
  JacCurve<Rat> jcq = c1_jacobian();
  JacPoint<FpElem> r1 = jac_reduce_mod_p(jcq, mw_generator_q1(jcq), gs.curve());
  JacPoint<FpElem> r2 = jac_reduce_mod_p(jcq, mw_generator_q2(jcq), gs.curve());
  PairSubgroup sub = subgroup_presentation(gs, {r1, r2});
  rep.image7_invariants = sub.image_invariants;
  rep.image7_cyclic = sub.image_invariants.size() <= 1;
  rep.independent = !rep.image7_cyclic;
  return rep;
}

}  // namespace apv
