#pragma once

// Local point tests over R and Q_p, bounded-height rational point search,
// and the Q_2 witness checks for the local divisor generators.

#include "apverify/curves.hpp"

namespace apv {

enum class Solubility { soluble, insoluble, inconclusive };

struct LocalSolubilityResult {
  Int place;  // 0 encodes the real place
  Solubility status = Solubility::inconclusive;
  std::string witness;
  int depth_used = 0;

  bool soluble() const { return status == Solubility::soluble; }
};

/// C(R) nonempty iff f takes a nonnegative value (or lc > 0 for the points
/// at infinity); decided exactly with a Sturm count when lc < 0.
LocalSolubilityResult has_real_points(const HyperellipticCurve& curve);

/// Decides C(Q_p) != {} by residue-disc subdivision over the affine discs
/// and the discs at infinity. depth_limit <= 0 selects the default
/// 2 (v_p(disc) + 4).
LocalSolubilityResult has_qp_points(const HyperellipticCurve& curve,
                                    const Int& p, int depth_limit = 0);

/// All rational points with x = u/v, max(|u|, |v|) <= height_bound, plus the
/// rational points at infinity.
std::vector<CurvePoint> search_rational_points(const HyperellipticCurve& curve,
                                               long height_bound);

/// Number of real roots of a squarefree rational polynomial (Sturm).
int count_real_roots(const PolyQ& f);

struct Q2WitnessReport {
  bool d1_half_ok = false;      // f1(1/2) a square in Q_2
  bool d1_quarter_ok = false;   // f1(1/4) a square in Q_2
  bool d2_ok = false;           // f1(theta) square in Q_2[x]/(x^2 - 2x + 6)
  bool d3_ok = false;           // ... in Q_2[x]/(x^4 + 4x^3 + 12x^2 + 36)
  bool all_ok() const { return d1_half_ok && d1_quarter_ok && d2_ok && d3_ok; }
};

/// Verifies that the three auxiliary divisors generating J_1(Q_2)/2J_1(Q_2)
/// alongside Q1, Q2 are supported on genuine Q_2-points of C_1.
Q2WitnessReport verify_q2_divisor_witnesses();

}  // namespace apv
