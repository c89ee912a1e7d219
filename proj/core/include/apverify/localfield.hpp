#pragma once

// Finite etale algebras over Q_2 presented as Q_2[x]/(m) for a monic
// squarefree integral modulus of degree <= 4, with an exact square decision
// for integral elements. The decision never factors m: component valuations
// are bounded through the Newton polygon of the characteristic polynomial,
// and square roots are searched by 2-adic digit lifting, which is complete
// once the precision clears the conductor and unit-square margins.

#include "apverify/poly.hpp"

namespace apv {

class EtaleAlgebra2 {
 public:
  explicit EtaleAlgebra2(PolyZ modulus);

  const PolyZ& modulus() const { return m_; }
  long degree() const { return m_.degree(); }

  /// Characteristic polynomial of multiplication by alpha (exact over Q).
  PolyQ charpoly(const PolyQ& alpha) const;

  /// Is alpha a square in Q_2[x]/(m)? alpha must be a non-zero-divisor.
  bool is_square(const PolyQ& alpha) const;

  /// Basis of a 2-maximal order of Q[x]/(m) (denominators are 2-powers),
  /// computed by radical/multiplier-ring enlargement.
  std::vector<PolyQ> maximal_order_basis() const;

 private:
  PolyZ m_;
  long disc_v2_;  // v_2 of disc(m), bounds the conductor exponent
};

/// Slopes of the lower Newton polygon of f at p, one entry per root
/// (by multiplicity), as exact rationals v_p(root).
std::vector<Rat> newton_polygon_slopes(const PolyQ& f, const Int& p);

}  // namespace apv
