#pragma once

#include <string>
#include <vector>

#include "sdnb/ff/field.hpp"
#include "sdnb/grpalg/ff_algebra.hpp"

namespace sdnb::sdnb_ff {

struct GramReportFF {
  bool pass = false;
  bool in_field = false;
  std::vector<ff::FqElem> values;  // Tr(x * phi^i(x)), i = 0..n-1
  std::vector<std::size_t> failing;
};

struct SelfDualCertificateFF {
  unsigned p = 0, m = 0, n = 0;
  ff::FqField universe;
  ff::FqElem generator;
  GramReportFF gram;
  bool normal = false;
  std::string route;
  std::vector<std::string> conventions;
};

GramReportFF verify_gram_ff(const ff::FqElem& x, const grpalg::FfExtension& ext);

// Throws ExistenceError when no self-dual normal basis of F_{q^n}/F_q exists.
void check_existence_ff(unsigned p, unsigned n);

// Self-dual generator for F_{q^(p^a)}/F_q inside the universe (p odd).
ff::FqElem selfdual_p_power_in(const ff::FqField& universe, unsigned m,
                               unsigned a);
// Char 2, degree-2 part: lex-least xi of F_{q^2} with Tr(xi) = 1, embedded.
ff::FqElem selfdual_char2_quadratic_in(const ff::FqField& universe, unsigned m);

SelfDualCertificateFF selfdual_p_power(unsigned p, unsigned m, unsigned a);
SelfDualCertificateFF selfdual_pprime(unsigned p, unsigned m, unsigned r,
                                      unsigned i);
SelfDualCertificateFF selfdual_char2(unsigned m, unsigned n);
SelfDualCertificateFF construct_selfdual(unsigned p, unsigned m, unsigned n);

// Degree of the smallest universe used by construct_selfdual.
unsigned universe_degree(unsigned p, unsigned m, unsigned n);

// All x in F_{p^m} = make_field(p, m) with identity Gram over F_p.
std::vector<ff::FqElem> brute_force_selfdual(unsigned p, unsigned m);

}  // namespace sdnb::sdnb_ff
