#include "sdnb/padic/automorphism.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/embedding.hpp"

namespace sdnb::padic {

LocalPoly unram_modulus_poly(const RingPtr& target, const RingPtr& source) {
  LocalPoly h;
  for (const auto& c : source->unram_modulus()) h.push_back(LocalElem::from_mpz(target, c));
  return h;
}

LocalPoly eisenstein_poly(const RingPtr& target, const RingPtr& source) {
  LocalPoly E;
  for (const auto& c : source->eisenstein()) E.push_back(LocalElem::from_mpz(target, c));
  return E;
}

RingMap::RingMap(RingPtr src, RingPtr dst, LocalElem y_image, LocalElem t_image)
    : src_(std::move(src)), dst_(std::move(dst)),
      y_img_(std::move(y_image)), t_img_(std::move(t_image)) {
  if (y_img_.ring() != dst_ || t_img_.ring() != dst_)
    throw ParameterError("ring map: images must lie in the target ring");
  if (src_->p() != dst_->p())
    throw ParameterError("ring map: residue characteristics differ");
  if (!eval(unram_modulus_poly(dst_, src_), y_img_).is_zero())
    throw DomainError("ring map: image of y is not a root of the unramified modulus");
  if (!eval(eisenstein_poly(dst_, src_), t_img_).is_zero())
    throw DomainError("ring map: image of t is not a root of the Eisenstein polynomial");
  const unsigned F = src_->unram_degree(), e = src_->ram_degree();
  std::vector<LocalElem> ypow{LocalElem::one(dst_)};
  for (unsigned i = 1; i < F; ++i) ypow.push_back(ypow.back() * y_img_);
  LocalElem tj = LocalElem::one(dst_);
  for (unsigned j = 0; j < e; ++j) {
    for (unsigned i = 0; i < F; ++i) basis_img_.push_back(ypow[i] * tj);
    tj = tj * t_img_;
  }
}

RingMap RingMap::identity(const RingPtr& r) {
  return RingMap(r, r, LocalElem::y(r), LocalElem::t(r));
}

LocalElem RingMap::apply(const LocalElem& x) const {
  if (x.ring() != src_) throw ParameterError("ring map: element from another ring");
  if (x.is_zero()) {
    return LocalElem(dst_, std::vector<mpz_class>(dst_->dim()), x.abs_precision(),
                     x.abs_precision());
  }
  LocalElem acc = LocalElem::zero(dst_);
  for (std::size_t k = 0; k < basis_img_.size(); ++k) {
    const mpz_class& c = x.coords()[k];
    if (c != 0) acc += basis_img_[k].mul_int(c);
  }
  return acc.mul_ppow(x.shift()).with_precision(x.abs_precision());
}

RingMap RingMap::compose(const RingMap& inner) const {
  if (inner.dst_ != src_) throw ParameterError("ring map: incompatible composition");
  return RingMap(inner.src_, dst_, apply(inner.y_img_), apply(inner.t_img_));
}

RingMap RingMap::pow(unsigned k) const {
  if (src_ != dst_) throw ParameterError("ring map: power of a non-endomorphism");
  RingMap r = identity(src_);
  for (unsigned i = 0; i < k; ++i) r = compose(r);
  return r;
}

RingAutomorphism frobenius_lift(const RingPtr& r) {
  const LocalElem y = LocalElem::y(r);
  const LocalElem phi_y = hensel_root(unram_modulus_poly(r, r), y.pow(r->p()));
  return RingMap(r, r, phi_y, LocalElem::t(r));
}

RingMap unramified_embedding(const RingPtr& small, const RingPtr& big) {
  if (small->eisenstein() != big->eisenstein())
    throw ParameterError("unramified embedding: Eisenstein parts differ");
  if (big->unram_degree() % small->unram_degree() != 0)
    throw ParameterError("unramified embedding: degrees do not divide");
  const ff::SubfieldEmbedding emb(small->residue_field(), big->residue_field());
  LocalElem y0 = small->unram_degree() == 1
                     ? LocalElem::from_mpz(big, -small->unram_modulus()[0])
                     : LocalElem::lift(big, emb.image_of_gen());
  const LocalElem Y = hensel_root(unram_modulus_poly(big, small), y0);
  return RingMap(small, big, Y, LocalElem::t(big));
}

}  // namespace sdnb::padic
