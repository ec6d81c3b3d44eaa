#pragma once

#include <vector>

#include "sdnb/ff/field.hpp"
#include "sdnb/ff/poly.hpp"

namespace sdnb::sdnb_ff {

// Tower F_q = F_0 < F_1 < ... < F_n with [F_i : F_{i-1}] = p, realized in a
// universe of degree divisible by m * p^n.
struct SemaevState {
  unsigned m = 0;                    // q = p^m
  unsigned n = 0;
  std::vector<ff::FqElem> eta;       // eta[0..n]
  std::vector<ff::FqPoly> f;         // f[i] for i = 1..n, f[0] unused
  bool bootstrapped = false;         // eta_0 built from the p-power subfield

  const ff::FqElem& top() const { return eta.back(); }
};

SemaevState semaev_eta(const ff::FqField& universe, unsigned m, unsigned n);

// Minimal polynomial of x over F_{p^base_degree}, from its conjugates.
ff::FqPoly minimal_polynomial(const ff::FqElem& x, unsigned base_degree);

}  // namespace sdnb::sdnb_ff
