#pragma once

#include <vector>

#include "sdnb/padic/ring.hpp"

namespace sdnb::padic {

// Z_p-algebra map from one local ring to another, fixed by the images of y
// and t. Both images are checked against the source moduli.
class RingMap {
 public:
  RingMap() = default;
  RingMap(RingPtr src, RingPtr dst, LocalElem y_image, LocalElem t_image);
  static RingMap identity(const RingPtr& r);

  const RingPtr& source() const { return src_; }
  const RingPtr& target() const { return dst_; }
  const LocalElem& y_image() const { return y_img_; }
  const LocalElem& t_image() const { return t_img_; }

  LocalElem apply(const LocalElem& x) const;
  LocalElem operator()(const LocalElem& x) const { return apply(x); }
  // this o inner
  RingMap compose(const RingMap& inner) const;
  RingMap pow(unsigned k) const;  // source == target
  bool fixes(const LocalElem& x) const { return (apply(x) - x).is_zero(); }

 private:
  RingPtr src_, dst_;
  LocalElem y_img_, t_img_;
  std::vector<LocalElem> basis_img_;
};

using RingAutomorphism = RingMap;

LocalPoly unram_modulus_poly(const RingPtr& target, const RingPtr& source);
LocalPoly eisenstein_poly(const RingPtr& target, const RingPtr& source);

// y -> the root of h congruent to y^p, t -> t.
RingAutomorphism frobenius_lift(const RingPtr& r);

// Embeds Z_p[y]/(h_small)[t]/(E) into a ring with the same E and unramified
// degree divisible by the small one; y goes to the Hensel lift of the
// lexicographically least residue root.
RingMap unramified_embedding(const RingPtr& small, const RingPtr& big);

}  // namespace sdnb::padic
