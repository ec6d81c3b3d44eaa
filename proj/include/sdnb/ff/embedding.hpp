#pragma once

#include <vector>

#include "sdnb/ff/field.hpp"

namespace sdnb::ff {

// Embeds a standalone F_{p^m} into a larger field F_{p^M}, m | M, by sending
// Y to the lexicographically least root of the small modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FqField small, FqField big);

  const FqField& small() const { return small_; }
  const FqField& big() const { return big_; }
  const FqElem& image_of_gen() const { return beta_; }

  FqElem embed(const FqElem& s) const;
  // Inverse of embed on its image; DomainError outside the image.
  FqElem restrict(const FqElem& b) const;

 private:
  FqField small_, big_;
  FqElem beta_;
  std::vector<FqElem> powers_;  // beta^i, i < m
  // Inverse of the m x m submatrix of [beta^i] on rows pivot_row_.
  std::vector<std::vector<Coeff>> solve_rows_;
  std::vector<unsigned> pivot_row_;
};

}  // namespace sdnb::ff
