#pragma once

// The two known independent points of J_1(Q) in Mumford form, used by the
// structure, sieve and Chabauty stages.

#include "apverify/curves.hpp"
#include "apverify/jacobian.hpp"

namespace apv {

inline JacCurve<Rat> c1_jacobian() {
  return JacCurve<Rat>::make(to_rational(build_family(1).f));
}

inline JacCurve<FpElem> c1_jacobian_mod(std::uint32_t p) {
  return JacCurve<FpElem>::make(reduce_mod_p(build_family(1).f, p));
}

inline JacPoint<Rat> mw_generator_q1(const JacCurve<Rat>& jc) {
  PolyQ u = poly_from<Rat>({Rat(4, 5), Rat(0), Rat(4), Rat(0), Rat(1)});
  PolyQ v = poly_from<Rat>({Rat(0), Rat(-96, 5), Rat(0), Rat(-16)});
  return jac_make(jc, u, v);
}

inline JacPoint<Rat> mw_generator_q2(const JacCurve<Rat>& jc) {
  PolyQ u =
      poly_from<Rat>({Rat(36, 5), Rat(48, 5), Rat(36, 5), Rat(24, 5), Rat(1)});
  PolyQ v = poly_from<Rat>(
      {Rat(-2336, 25), Rat(-1728, 25), Rat(-976, 25), Rat(-1712, 75)});
  return jac_make(jc, u, v);
}

}  // namespace apv
