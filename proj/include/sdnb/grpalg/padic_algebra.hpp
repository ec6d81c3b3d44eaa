#pragma once

#include "sdnb/grpalg/algebra.hpp"
#include "sdnb/grpalg/ff_algebra.hpp"
#include "sdnb/padic/ring.hpp"

namespace sdnb::grpalg {

template <>
struct CoeffTraits<padic::LocalElem> {
  static bool is_unit(const padic::LocalElem& a) {
    return !a.is_zero() && a.valuation() == 0;
  }
  static bool is_zero(const padic::LocalElem& a) { return a.is_zero(); }
  static padic::LocalElem inverse(const padic::LocalElem& a) { return a.inverse(); }
  static bool equal(const padic::LocalElem& a, const padic::LocalElem& b) {
    return (a - b).is_zero();
  }
  static padic::LocalElem one_like(const padic::LocalElem& a) {
    return padic::LocalElem::one(a.ring());
  }
};

using LocalGroupAlg = GroupAlgebraElem<padic::LocalElem>;

// Coefficient-wise reduction to the residue field.
FfGroupAlg reduce_mod_pi(const LocalGroupAlg& a);
// Coefficient-wise lift of a residue-field group algebra element.
LocalGroupAlg lift_from_residue(const padic::RingPtr& ring, const FfGroupAlg& a);

// Newton iteration w <- (w + u w^-1) / 2 from a seed with seed^2 = u mod pi.
// DomainError when the seed is not a residue square root of u.
LocalGroupAlg hensel_sqrt(const LocalGroupAlg& u, const LocalGroupAlg& seed);

}  // namespace sdnb::grpalg
