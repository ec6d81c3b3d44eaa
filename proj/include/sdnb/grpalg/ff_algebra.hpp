#pragma once

#include <vector>

#include "sdnb/ff/field.hpp"
#include "sdnb/grpalg/algebra.hpp"

namespace sdnb::grpalg {

template <>
struct CoeffTraits<ff::FqElem> {
  static bool is_unit(const ff::FqElem& a) { return !a.is_zero(); }
  static bool is_zero(const ff::FqElem& a) { return a.is_zero(); }
  static ff::FqElem inverse(const ff::FqElem& a) { return a.inverse(); }
  static bool equal(const ff::FqElem& a, const ff::FqElem& b) { return a == b; }
  static ff::FqElem one_like(const ff::FqElem& a) { return a.field().one(); }
};

using FfGroupAlg = GroupAlgebraElem<ff::FqElem>;

// F_{q^n} / F_q inside a universe field; q = p^base_degree. The group is
// cyclic of order n, element k acting as x -> x^(q^k).
class FfExtension {
 public:
  FfExtension(ff::FqField universe, unsigned base_degree, unsigned degree);

  const ff::FqField& universe() const { return universe_; }
  unsigned base_degree() const { return m_; }
  unsigned degree() const { return n_; }
  const GroupPtr& group() const { return group_; }

  ff::FqElem apply(std::size_t g, const ff::FqElem& x) const;
  ff::FqElem trace(const ff::FqElem& x) const;
  bool contains(const ff::FqElem& x) const;

 private:
  ff::FqField universe_;
  unsigned m_, n_;
  GroupPtr group_;
};

// Conjugates linearly independent over F_q, via
// gcd(X^n - 1, sum_i x^(q^i) X^(n-1-i)) = 1.
bool is_normal(const ff::FqElem& x, const FfExtension& ext);

// Unit test in F_q[G]: split G = G_p x H; the image in F_q[H] under the
// augmentation of G_p must be invertible.
bool is_unit_ff(const FfGroupAlg& a);

// Square root of w in 1 + J for a p-group G in odd characteristic p.
FfGroupAlg sqrt_unipotent_charp(const FfGroupAlg& w, unsigned base_degree);

// sqrt(eps(u)) * sqrt_unipotent(u / eps(u)); `scalar_root`, when given,
// replaces sqrt_ff(eps(u)) (it must square to eps(u)).
FfGroupAlg sqrt_modular_pgroup(const FfGroupAlg& u, unsigned base_degree,
                               const ff::FqElem* scalar_root = nullptr);

// Character data for F_q[C_d], gcd(d, p) = 1, realized in the universe.
struct CharOrbit {
  unsigned rep = 0;
  std::vector<unsigned> members;  // rep * q^t mod d, t = 0..k-1
  unsigned field_degree = 0;      // degree of F_q(chi_s) over F_p
  unsigned partner = 0;           // representative of the orbit of -rep
  unsigned j = 0;                 // -rep = rep * q^j when partner == rep
  unsigned fixed_degree = 0;      // degree of E_s over F_p when partner == rep
};

class CharData {
 public:
  CharData(ff::FqField universe, unsigned base_degree, unsigned d);

  unsigned d() const { return d_; }
  unsigned base_degree() const { return m_; }
  const ff::FqField& universe() const { return universe_; }
  const ff::FqElem& zeta() const { return zeta_; }
  const std::vector<CharOrbit>& orbits() const { return orbits_; }
  const CharOrbit& orbit_of_rep(unsigned s) const;
  unsigned q_mod_d() const { return qd_; }

  // x -> x^(q^j) on F_q(chi_s), the action of J.
  ff::FqElem apply_j(const CharOrbit& o, const ff::FqElem& v) const;

 private:
  ff::FqField universe_;
  unsigned m_, d_, qd_;
  ff::FqElem zeta_;
  std::vector<CharOrbit> orbits_;
};

// chi_s(a) for every orbit representative s, in the order of orbits().
std::vector<ff::FqElem> char_decompose(const FfGroupAlg& a, const CharData& cd);
// chi_s(a) for every s in 0..d-1.
std::vector<ff::FqElem> char_values_all(const FfGroupAlg& a, const CharData& cd);
FfGroupAlg char_recompose(const std::vector<ff::FqElem>& rep_values,
                          const CharData& cd, const GroupPtr& group);

}  // namespace sdnb::grpalg
