#include "apverify/jacobian.hpp"

namespace apv {

namespace {

bool coeffs_p_integral(const PolyQ& a, const Int& p) {
  for (const auto& x : a.c)
    if (mod_pos(x.get_den(), p) == 0) return false;
  return true;
}

}  // namespace

JacPoint<FpElem> jac_reduce_mod_p(const JacCurve<Rat>& jcq,
                                  const JacPoint<Rat>& p,
                                  const JacCurve<FpElem>& jcp) {
  const std::uint64_t prime = jcp.c.p;
  const Int pz(static_cast<unsigned long>(prime));
  if (!coeffs_p_integral(p.u, pz) || !coeffs_p_integral(p.v, pz))
    throw MathError(
        "representative is not p-integral (kernel-of-reduction class); "
        "reduce through the group law instead");
  // sanity: the rational model must reduce to jcp's model
  PolyFp fred = reduce_mod_p(map_poly(jcq.f, [](const Rat& x) { return x; }), prime);
  if (fred != jcp.f) throw MathError("curve models do not match mod p");

  jacdetail::State<FpElem> st;
  st.u = reduce_mod_p(p.u, prime);
  st.v = reduce_mod_p(p.v, prime);
  st.m = p.inf_plus;
  st.n = p.inf_minus;
  st.tau = p.nu;
  if (st.u.degree() != p.u.degree())
    throw MathError("u drops degree mod p despite being monic");
  if (!jac_validate(jcp, st.u, st.v))
    throw MathError("reduced pair fails the Mumford relation");
  return jacdetail::normalize(jcp, st);
}

}  // namespace apv
