#include "sdnb/grpalg/padic_algebra.hpp"

namespace sdnb::grpalg {

using padic::LocalElem;

FfGroupAlg reduce_mod_pi(const LocalGroupAlg& a) {
  std::vector<ff::FqElem> c;
  for (const auto& x : a.coeffs()) c.push_back(x.residue());
  return FfGroupAlg(a.group(), std::move(c));
}

LocalGroupAlg lift_from_residue(const padic::RingPtr& ring, const FfGroupAlg& a) {
  std::vector<LocalElem> c;
  for (const auto& x : a.coeffs()) c.push_back(LocalElem::lift(ring, x));
  return LocalGroupAlg(a.group(), std::move(c));
}

LocalGroupAlg hensel_sqrt(const LocalGroupAlg& u, const LocalGroupAlg& seed) {
  if (!reduce_mod_pi(seed * seed).equals(reduce_mod_pi(u)))
    throw DomainError("hensel_sqrt: seed^2 differs from u modulo pi");
  const auto& ring = u[0].ring();
  const LocalElem half = LocalElem::from_int(ring, 2).inverse();
  LocalGroupAlg w = seed;
  for (int it = 0; it < 64; ++it) {
    const LocalGroupAlg next = (w + u * invert_unit(w)).scaled(half);
    const bool done = next.equals(w);
    w = next;
    if (done) return w;
  }
  throw InternalError("hensel_sqrt: Newton iteration did not converge");
}

}  // namespace sdnb::grpalg
