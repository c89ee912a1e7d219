#pragma once

// Point counting over F_{p^k}, L-polynomials and Jacobian orders, the
// abelian group structure of J(F_p) with explicit verified generators, and
// discrete logarithms against that structure.

#include "apverify/fq.hpp"
#include "apverify/jacobian.hpp"
#include "apverify/linalg.hpp"

#include <map>

namespace apv {

/// #C(F_{p^k}) for the smooth projective model, infinity points included.
/// Requires p odd, p not dividing lc(f) disc(f), and k <= 4.
Int count_curve_points(const PolyZ& f, std::uint32_t p, std::uint32_t k);

struct LPolynomial {
  std::uint32_t p = 0;
  std::vector<Int> a;  // degree-8 numerator, a[0] = 1

  Int value_at_1() const {
    Int s = 0;
    for (const auto& x : a) s += x;
    return s;
  }
};

/// Degree-8 zeta numerator from the counts k = 1..4 plus the functional
/// equation; validates Weil bounds and count consistency.
LPolynomial l_polynomial(const PolyZ& f, std::uint32_t p);

inline Int jacobian_order(const PolyZ& f, std::uint32_t p) {
  return l_polynomial(f, p).value_at_1();
}

/// J(F_p) as a product of cyclic groups with verified generators plus the
/// per-Sylow discrete-log tables that power dlog().
class GroupStructure {
 public:
  GroupStructure(const PolyZ& f, std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  const Int& order() const { return order_; }
  /// Invariant factors d_1 | d_2 | ... (ascending).
  const std::vector<Int>& invariants() const { return invariants_; }
  const std::vector<JacPoint<FpElem>>& generators() const { return gens_; }
  const JacCurve<FpElem>& curve() const { return jc_; }

  /// Coordinates of x in the generator basis, modulo the invariant factors.
  std::vector<Int> dlog(const JacPoint<FpElem>& x) const;

  /// Rebuilds the element from coordinates (the dlog round-trip partner).
  JacPoint<FpElem> from_coords(const std::vector<Int>& c) const;

 private:
  struct Sylow {
    Int q;
    int e = 0;
    std::vector<int> lambda;                    // partition, descending
    std::vector<JacPoint<FpElem>> basis;        // orders q^lambda_i
    std::map<std::string, std::vector<Int>> dlog_table;
    Int cofactor;        // N / q^e
    Int cofactor_inv;    // inverse of cofactor mod q^e
  };

  JacCurve<FpElem> jc_;
  std::uint32_t p_;
  Int order_;
  std::vector<Sylow> sylow_;
  std::vector<Int> invariants_;
  std::vector<JacPoint<FpElem>> gens_;
};

/// Presentation of the subgroup generated by a list of elements, through
/// their dlog coordinates: its order, the invariant factors of the image,
/// and the kernel lattice of Z^m -> J(F_p).
struct PairSubgroup {
  Int order;
  std::vector<Int> image_invariants;  // nontrivial ones, ascending
  Lattice kernel;                     // sublattice of Z^m
};

PairSubgroup subgroup_presentation(const GroupStructure& gs,
                                   const std::vector<JacPoint<FpElem>>& gens);

/// Canonical serialization of a point, usable as a table key.
std::string jac_point_key(const JacPoint<FpElem>& x);

struct TorsionIndependenceReport {
  Int order7, order41;
  Int gcd_orders;
  bool torsion_free;
  std::vector<Int> image7_invariants;  // of <Q1, Q2> in J(F_7)
  bool image7_cyclic;
  bool independent;
};

TorsionIndependenceReport torsion_and_independence();

}  // namespace apv
