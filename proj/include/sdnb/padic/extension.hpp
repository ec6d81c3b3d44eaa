#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdnb/grpalg/group.hpp"
#include "sdnb/padic/automorphism.hpp"

namespace sdnb::padic {

// K = Q_{p^f}, the unramified extension of Q_p of degree f; pi = p.
struct LocalBase {
  unsigned p = 0;
  unsigned f = 1;
  int precision = 48;  // N, base-p digits
  int guard = 8;

  static LocalBase make(unsigned p, unsigned f = 1, int precision = 48,
                        int guard = 8);
  mpz_class q() const;
  std::vector<mpz_class> modulus() const;  // lift of the residue modulus
};

enum class ExtKind { Unramified, Eisenstein, Tame, Compositum, Wild };
std::string to_string(ExtKind k);

// L/K realized inside a local ring O. When L is a proper subfield of the
// ring's fraction field, `fixers` generate Gal(O/L) and the automorphisms are
// coset representatives of Gal(O/K) modulo it.
struct LocalExtension {
  LocalBase base;
  ExtKind kind = ExtKind::Unramified;
  std::string generator_name;
  unsigned degree = 1, e = 1, f_rel = 1;
  long v_D = 0;                // v_L(D_{L/K})
  std::optional<long> v_A;     // v_L(A_{L/K}) when v_D is even
  RingPtr ring;
  unsigned valuation_scale = 1;  // v_O = scale * v_L
  grpalg::GroupPtr group_;       // null when L/K is not known to be Galois
  std::vector<RingAutomorphism> autos;  // one per element of group_
  std::vector<RingAutomorphism> fixers;
  // Nonzero: Tr_{L/K} = matrix trace over Q_p divided by this index (f = 1).
  unsigned matrix_trace_index = 0;
  // Compositum bookkeeping: orders of the unramified and tame factors.
  unsigned unram_part = 1, tame_part = 1;

  const grpalg::GroupPtr& group() const;
  LocalElem apply(std::size_t g, const LocalElem& x) const;
  LocalElem trace(const LocalElem& x) const;
  LocalElem galois_trace(const LocalElem& x) const;
  bool contains(const LocalElem& x) const;
  long valuation(const LocalElem& x) const;  // v_L
  std::string describe() const;
};

LocalExtension build_unramified(const LocalBase& base, unsigned d);
// t^d - tau with tau = -p; d odd and d | q - 1.
LocalExtension build_tame(const LocalBase& base, unsigned d);
// Generic Eisenstein polynomial over Z_p, monic, low to high. No Galois data.
LocalExtension build_eisenstein(const LocalBase& base, std::vector<mpz_class> poly);
// Unramified degree d_un times tame degree d_tot on the tensor basis y^a t^b.
// The group is C_{d_un} x C_{d_tot}; (a, b) acts as phi^(f a) on y and
// t -> omega^b t.
LocalExtension build_compositum(const LocalBase& base, unsigned d_un,
                                unsigned d_tot);
// Fixed field of the subgroup H (element indices of the compositum group).
// Rejects H meeting inertia, and H = G.
LocalExtension fixed_field(const LocalExtension& comp,
                           const std::vector<std::size_t>& H);

// Residue primitive d-th root used for the tame action: lexicographically
// least one inside F_q, then its Teichmuller lift.
LocalElem tame_root_of_unity(const RingPtr& ring, unsigned f, unsigned d);

}  // namespace sdnb::padic
