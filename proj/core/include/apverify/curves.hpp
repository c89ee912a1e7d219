#pragma once

// The curve family C_j : y^2 = f_j(x), j in [-2, 2], attached to arithmetic
// progressions (a^2, b^2, c^2, d^5) in coprime integers, together with the
// progression <-> point translation and curve-level metadata.

#include "apverify/poly.hpp"
#include "apverify/zsqrt2.hpp"

#include <array>
#include <set>

namespace apv {

/// Homogeneous degree-5 integer forms g_j, h_j with
/// (1+sqrt2)^j (u + v sqrt2)^5 = g_j(u,v) + h_j(u,v) sqrt2,
/// and the model f_j(x) = 2 g_j(x,1)^2 - h_j(x,1)^2.
struct CurveFamily {
  int j = 0;
  std::array<Int, 6> g{};  // coefficient of u^{5-i} v^i
  std::array<Int, 6> h{};
  PolyZ f;
};

CurveFamily build_family(int j);

/// f_{-j}(x) == f_j(-x), exactly.
bool reflection_check(int j);

/// f_j == (sqrt2 g_j + h_j)(sqrt2 g_j - h_j) as an identity in Z[sqrt2][x]
/// after dehomogenizing at v = 1.
bool sqrt2_split_check(int j);

/// g_{-j}(u, v) == (-1)^j g_j(u, -v) and the h-companion, as exact forms.
bool conjugation_check(int j);

struct HyperellipticCurve {
  PolyZ f;

  explicit HyperellipticCurve(PolyZ model);
  const Int& lc() const { return f.lc(); }
  int genus() const { return 4; }
  /// Both points at infinity are rational iff lc is a perfect square.
  bool rational_infinity() const { return is_perfect_square(lc()); }
};

HyperellipticCurve curve_for(int j);

struct CurvePoint {
  bool at_infinity = false;
  int sign = 0;  // branch of y/x^5 for infinity points
  Rat x, y;

  static CurvePoint infinity(int s) {
    CurvePoint p;
    p.at_infinity = true;
    p.sign = s;
    return p;
  }
  static CurvePoint affine(Rat x0, Rat y0) {
    CurvePoint p;
    p.x = std::move(x0);
    p.y = std::move(y0);
    return p;
  }
  bool operator==(const CurvePoint& o) const {
    if (at_infinity != o.at_infinity) return false;
    if (at_infinity) return sign == o.sign;
    return x == o.x && y == o.y;
  }
  bool operator<(const CurvePoint& o) const {
    if (at_infinity != o.at_infinity) return at_infinity;
    if (at_infinity) return sign < o.sign;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

struct ProgressionWitness {
  Int a, b, c, d;
  int j = 0;
  Int u, v;
};

/// Checks the witness invariants and maps to the induced point on C_j.
std::pair<int, CurvePoint> progression_to_point(const ProgressionWitness& w);

/// Reconstructs the progression from a rational point; nullopt when the
/// point does not come from a primitive progression.
std::optional<ProgressionWitness> point_to_progression(int j,
                                                       const CurvePoint& p);

/// Primes dividing disc(f) * lc(f) for the given model.
std::set<Int> bad_primes(const HyperellipticCurve& curve);

}  // namespace apv
