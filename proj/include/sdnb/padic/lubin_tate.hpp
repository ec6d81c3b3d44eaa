#pragma once

#include <vector>

#include <gmpxx.h>

#include "sdnb/padic/extension.hpp"

namespace sdnb::padic {

// [u]_f for f(X) = X^p + pX, truncated after X^degree. Coefficient k is
// known modulo p^precision[k].
struct LubinTateSeries {
  mpz_class u;
  unsigned p = 0;
  unsigned degree = 0;
  std::vector<mpz_class> coeffs;  // index k is the coefficient of X^k
  std::vector<long> precision;
  long min_precision() const;
};

// Degree-by-degree solution of f([u](X)) = [u](f(X)), computed modulo
// p^work_precision. Each step divides by p^k - p, which costs one digit.
LubinTateSeries lubin_tate_series(const mpz_class& u, unsigned p,
                                  unsigned degree, int work_precision);

// f o [u] == [u] o f modulo X^(degree+1), compared modulo the least
// coefficient precision.
bool series_commutes(const LubinTateSeries& s, unsigned degree);

LocalElem evaluate(const LubinTateSeries& s, const LocalElem& x);

// K_{pi,2} = Q_p[X]/(g), g = (X^p + pX)^(p-1) + p, for K = Q_p.
struct LubinTateData {
  LocalBase base;
  std::vector<mpz_class> f_poly;
  std::vector<mpz_class> g_poly;
  RingPtr ring;
  unsigned series_degree = 0;  // at least N * e(K_{pi,2}/K)
  int work_precision = 0;
  mpz_class u0;  // 1 + p, generator of Gal(M/K)
  // Series for u0^j mod p^2, j = 0..p-1.
  std::vector<LubinTateSeries> gamma_series;

  LocalElem alpha() const { return LocalElem::t(ring); }
  // [u0^j]_f(alpha)
  LocalElem conjugate(unsigned j) const;
};

LubinTateData make_lubin_tate(const LocalBase& base);

// M = fixed field of the Teichmuller part of (Z/p^2)^x inside K_{pi,2}:
// the cyclic degree-p extension with G = G_0 = G_1 and G_2 = 1.
LocalExtension build_wild(const LubinTateData& ltd);

}  // namespace sdnb::padic
