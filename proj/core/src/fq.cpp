#include "apverify/fq.hpp"

namespace apv {

namespace {

// x^(q) mod m built by repeated squaring of polynomials over F_p.
PolyFp poly_powmod(PolyFp base, Int e, const PolyFp& m) {
  FpElem one(1, base.is_zero() ? m.lc().p : base.c[0].p);
  PolyFp r = poly_const(one);
  base = mod(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base), m);
    base = mod(mul(base, base), m);
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const PolyFp& m, std::uint32_t p) {
  const long k = m.degree();
  if (k <= 0) return false;
  if (k == 1) return true;
  const FpElem like(0, p);
  PolyFp x = poly_x(like);
  // x^{p^k} == x mod m, and gcd(x^{p^{k/q}} - x, m) = 1 for primes q | k
  Int pk = pow_int(Int(p), static_cast<unsigned long>(k));
  if (poly_powmod(x, pk, m) != mod(x, m)) return false;
  for (long q : {2L, 3L}) {
    if (k % q != 0) continue;
    Int pe = pow_int(Int(p), static_cast<unsigned long>(k / q));
    PolyFp g = gcd(sub(poly_powmod(x, pe, m), x), m);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace

FqCtx::FqCtx(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (k < 1 || k > kMaxDeg) throw MathError("extension degree out of range");
  q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  // First irreducible monic modulus in lexicographic order of the ascending
  // coefficient tuple (c_0, c_1, ..., c_{k-1}).
  std::vector<std::uint32_t> c(k, 0);
  for (;;) {
    PolyFp cand;
    for (std::uint32_t i = 0; i < k; ++i) cand.c.push_back(FpElem(c[i], p));
    cand.c.push_back(FpElem(1, p));
    if (is_irreducible(cand, p)) {
      mod_.assign(k + 1, 0);
      for (std::uint32_t i = 0; i < k; ++i) mod_[i] = c[i];
      mod_[k] = 1;
      break;
    }
    long i = k - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) throw MathError("no irreducible modulus found");
    ++c[i];
  }
  init_reduction_rows();
}

FqCtx::FqCtx(std::uint32_t p, const std::vector<std::uint32_t>& modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size()) - 1) {
  if (k_ < 1 || k_ > kMaxDeg) throw MathError("extension degree out of range");
  if (modulus.back() != 1) throw MathError("modulus must be monic");
  PolyFp cand;
  for (std::uint32_t v : modulus) cand.c.push_back(FpElem(v, p));
  cand.trim();
  if (!is_irreducible(cand, p)) throw MathError("modulus is reducible");
  q_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p;
  mod_ = modulus;
  for (auto& v : mod_) v %= p;
  mod_.back() = 1;
  init_reduction_rows();
}

void FqCtx::init_reduction_rows() {
  const std::uint32_t p = p_, k = k_;
  // reduction rows: x^{k+j} mod modulus
  if (k >= 2) {
    Raw xk{};  // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
    for (std::uint32_t i = 0; i < k; ++i)
      xk[i] = (p - mod_[i]) % p;
    red_[0] = xk;
    for (std::uint32_t j = 1; j + 1 < k; ++j) {
      // x^{k+j} = x * x^{k+j-1}
      const Raw& prev = red_[j - 1];
      Raw r{};
      std::uint32_t carry = prev[k - 1];
      for (std::uint32_t i = k - 1; i >= 1; --i) r[i] = prev[i - 1];
      r[0] = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        r[i] = (r[i] + static_cast<std::uint64_t>(carry) * red_[0][i]) % p;
      red_[j] = r;
    }
  }
}

FqCtx::Raw FqCtx::from_index(std::uint64_t idx) const {
  Raw r{};
  for (std::uint32_t i = 0; i < k_; ++i) {
    r[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return r;
}

std::uint64_t FqCtx::to_index(const Raw& a) const {
  std::uint64_t idx = 0;
  for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

FqCtx::Raw FqCtx::add(const Raw& a, const Raw& b) const {
  Raw r{};
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FqCtx::Raw FqCtx::sub(const Raw& a, const Raw& b) const {
  Raw r{};
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FqCtx::Raw FqCtx::neg(const Raw& a) const {
  Raw r{};
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

FqCtx::Raw FqCtx::mul(const Raw& a, const Raw& b) const {
  std::uint64_t prod[2 * kMaxDeg - 1] = {0};
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  Raw r{};
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i] % p_);
  for (std::uint32_t j = 0; j + 1 < k_; ++j) {
    const std::uint64_t hi = prod[k_ + j] % p_;
    if (!hi) continue;
    for (std::uint32_t i = 0; i < k_; ++i)
      r[i] = static_cast<std::uint32_t>((r[i] + hi * red_[j][i]) % p_);
  }
  return r;
}

FqCtx::Raw FqCtx::pow(Raw a, Int e) const {
  if (e < 0) throw MathError("negative exponent");
  Raw r = one();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqCtx::Raw FqCtx::inv(const Raw& a) const {
  if (is_zero(a)) throw MathError("inverse of zero in F_q");
  return pow(a, Int(static_cast<long>(q_)) - 2);
}

bool FqCtx::is_zero(const Raw& a) const {
  for (std::uint32_t i = 0; i < k_; ++i)
    if (a[i]) return false;
  return true;
}

bool FqCtx::is_square(const Raw& a) const {
  if (is_zero(a)) return true;
  if (p_ == 2) return true;  // Frobenius is surjective on squares
  Raw t = pow(a, Int(static_cast<long>((q_ - 1) / 2)));
  return t == one();
}

std::optional<FqCtx::Raw> FqCtx::sqrt(const Raw& a) const {
  if (p_ == 2) throw MathError("p = 2 rejected");
  if (is_zero(a)) return zero();
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks with a deterministic non-residue (smallest index).
  Int Q(static_cast<long>(q_ - 1));
  long s = 0;
  while (mpz_even_p(Q.get_mpz_t())) { Q >>= 1; ++s; }
  Raw z{};
  for (std::uint64_t idx = 2; ; ++idx) {
    z = from_index(idx);
    if (!is_square(z)) break;
  }
  Raw c = pow(z, Q);
  Raw t = pow(a, Q);
  Raw r = pow(a, (Q + 1) / 2);
  long m = s;
  while (!(t == one())) {
    Raw tt = t;
    long i = 0;
    while (!(tt == one())) { tt = mul(tt, tt); ++i; }
    Raw b = c;
    for (long j = 0; j < m - i - 1; ++j) b = mul(b, b);
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
    m = i;
  }
  Raw nr = neg(r);
  return to_index(r) <= to_index(nr) ? r : nr;
}

FqCtx::Raw FqCtx::from_int(const Int& n) const {
  Raw r{};
  Int m = mod_pos(n, Int(static_cast<unsigned long>(p_)));
  r[0] = static_cast<std::uint32_t>(m.get_ui());
  return r;
}

std::optional<FqElem> fq_sqrt(const FqElem& a) {
  if (!a.ctx) return FqElem{};
  auto r = a.ctx->sqrt(a.c);
  if (!r) return std::nullopt;
  return FqElem(*a.ctx, *r);
}

}  // namespace apv
