#pragma once

// Extension fields F_{p^k}, k <= 4, as F_p[x] modulo a fixed irreducible
// modulus. The modulus is chosen deterministically (first irreducible in
// lexicographic coefficient order) so that point counts are reproducible.
//
// Elements are short coefficient arrays; FqCtx holds the modulus and the
// precomputed reduction rows for x^k..x^{2k-2}. The counting loops work on
// raw arrays through the context; FqElem is the self-describing wrapper for
// generic code and tests.

#include "apverify/fp.hpp"

#include <array>
#include <cstdint>

namespace apv {

class FqCtx {
 public:
  static constexpr int kMaxDeg = 4;
  using Raw = std::array<std::uint32_t, kMaxDeg>;

  FqCtx(std::uint32_t p, std::uint32_t k);
  /// Same field presented by a caller-chosen monic irreducible modulus
  /// (ascending coefficients, length k + 1).
  FqCtx(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  Raw zero() const { return Raw{}; }
  Raw one() const { Raw r{}; r[0] = 1; return r; }
  Raw from_index(std::uint64_t idx) const;
  std::uint64_t to_index(const Raw& a) const;

  Raw add(const Raw& a, const Raw& b) const;
  Raw sub(const Raw& a, const Raw& b) const;
  Raw neg(const Raw& a) const;
  Raw mul(const Raw& a, const Raw& b) const;
  Raw pow(Raw a, Int e) const;
  Raw inv(const Raw& a) const;
  bool is_zero(const Raw& a) const;
  bool is_square(const Raw& a) const;
  std::optional<Raw> sqrt(const Raw& a) const;

  /// Embeds an integer polynomial's reduction: evaluation not needed, just
  /// coefficient-wise mod p for constants.
  Raw from_int(const Int& n) const;

 private:
  void init_reduction_rows();

  std::uint32_t p_, k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> mod_;                // ascending, size k+1, monic
  std::array<Raw, kMaxDeg - 1> red_;              // x^{k+j} reduced, j = 0..k-2

  friend struct FqElem;
};

struct FqElem {
  const FqCtx* ctx = nullptr;
  FqCtx::Raw c{};

  FqElem() = default;
  FqElem(const FqCtx& f, FqCtx::Raw raw) : ctx(&f), c(raw) {}

  bool is_zero() const { return !ctx || ctx->is_zero(c); }
};

inline const FqCtx* fq_ctx(const FqElem& a, const FqElem& b) {
  if (a.ctx && b.ctx && a.ctx != b.ctx &&
      (a.ctx->p() != b.ctx->p() || a.ctx->k() != b.ctx->k() ||
       a.ctx->modulus() != b.ctx->modulus()))
    throw MathError("F_q domain mismatch");
  return a.ctx ? a.ctx : b.ctx;
}

inline FqElem operator+(const FqElem& a, const FqElem& b) {
  const FqCtx* f = fq_ctx(a, b);
  if (!f) return FqElem{};
  return FqElem(*f, f->add(a.c, b.c));
}
inline FqElem operator-(const FqElem& a, const FqElem& b) {
  const FqCtx* f = fq_ctx(a, b);
  if (!f) return FqElem{};
  return FqElem(*f, f->sub(a.c, b.c));
}
inline FqElem operator-(const FqElem& a) {
  if (!a.ctx) return a;
  return FqElem(*a.ctx, a.ctx->neg(a.c));
}
inline FqElem operator*(const FqElem& a, const FqElem& b) {
  const FqCtx* f = fq_ctx(a, b);
  if (!f) return FqElem{};
  return FqElem(*f, f->mul(a.c, b.c));
}
inline bool operator==(const FqElem& a, const FqElem& b) {
  if (!a.ctx || !b.ctx) return a.is_zero() && b.is_zero();
  fq_ctx(a, b);
  return a.c == b.c;
}
inline bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

template <>
struct Coeff<FqElem> {
  static FqElem zero(const FqElem& like) {
    return like.ctx ? FqElem(*like.ctx, like.ctx->zero()) : FqElem{};
  }
  static FqElem one(const FqElem& like) {
    if (!like.ctx) throw MathError("unattached F_q exemplar");
    return FqElem(*like.ctx, like.ctx->one());
  }
  static FqElem from_long(const FqElem& like, long n) {
    if (!like.ctx) throw MathError("unattached F_q exemplar");
    return FqElem(*like.ctx, like.ctx->from_int(Int(n)));
  }
  static bool is_zero(const FqElem& x) { return x.is_zero(); }
  static FqElem inv(const FqElem& x) {
    if (!x.ctx || x.is_zero()) throw MathError("inverse of zero in F_q");
    return FqElem(*x.ctx, x.ctx->inv(x.c));
  }
};

/// Deterministic square root in F_{p^k}: none for non-residues, otherwise the
/// root with the smaller canonical index.
std::optional<FqElem> fq_sqrt(const FqElem& a);

}  // namespace apv
