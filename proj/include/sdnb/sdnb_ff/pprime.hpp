#pragma once

#include <string>
#include <vector>

#include "sdnb/ff/field.hpp"
#include "sdnb/grpalg/ff_algebra.hpp"

namespace sdnb::sdnb_ff {

struct PPrimeState {
  unsigned m = 0;       // q = p^m
  unsigned r = 0, i = 0, d = 0;
  unsigned v = 0;       // order of q modulo r
  unsigned q1_mod_d = 0;
  ff::FqElem zeta;      // generator of F_{q_1}^x, embedded
  ff::FqElem theta;     // root of X^d - zeta
  std::vector<unsigned> s_q1;  // orbit representatives under *q_1 mod d
  // Per orbit of *q mod d (in order of least element): the F_{q_1} scalar
  // applied to that orbit's theta-powers. All ones unless the plain sum
  // traces to a non-normal element.
  std::vector<unsigned> q_orbit_reps;
  std::vector<ff::FqElem> orbit_scalars;
  bool rescaled = false;
  ff::FqElem xi;
  ff::FqElem eta;
};

// Universe must contain F_{q^(v d)}; m v d | degree.
PPrimeState pprime_eta(const ff::FqField& universe, unsigned m, unsigned r,
                       unsigned i);

enum class VsCase { Zero, PairedLow, PairedHigh, Fixed1, Fixed2, Fixed3 };
std::string to_string(VsCase c);

struct VsVector {
  std::vector<ff::FqElem> values;  // aligned with CharData::orbits()
  std::vector<VsCase> cases;
  unsigned n = 0;  // the case-3 integer, 0 when unused
};

// `trace_eta` is Tr(eta) down to F_q, used as v_0.
VsVector pprime_vs(const grpalg::FfGroupAlg& R, const grpalg::CharData& cd,
                   const ff::FqElem& trace_eta);

// Self-dual generator of F_{q^d}/F_q, d = r^i, in the universe.
struct PPrimeResult {
  PPrimeState state;
  VsVector vs;
  grpalg::FfGroupAlg v;
  ff::FqElem generator;
};
PPrimeResult selfdual_pprime_in(const ff::FqField& universe, unsigned m,
                                unsigned r, unsigned i);

// Degree of the universe needed for the r^i part over F_{p^m}.
unsigned pprime_universe_degree(unsigned p, unsigned m, unsigned r, unsigned i);

}  // namespace sdnb::sdnb_ff
