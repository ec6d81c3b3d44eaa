#include "sdnb/sdnb_ff/semaev.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::sdnb_ff {

using ff::FqElem;
using ff::FqPoly;

SemaevState semaev_eta(const ff::FqField& U, unsigned m, unsigned n) {
  const unsigned p = U.characteristic();
  if (m == 0) throw ParameterError("semaev_eta: m must be positive");
  std::uint64_t top = m;
  for (unsigned i = 0; i < n; ++i) top *= p;
  if (U.degree() % top != 0)
    throw ParameterError("semaev_eta: universe too small for the tower");

  SemaevState st;
  st.m = m;
  st.n = n;
  if (m % p != 0) {
    st.eta.push_back(U.one());
  } else {
    unsigned a = 0, b = m;
    while (b % p == 0) {
      b /= p;
      ++a;
    }
    st.eta.push_back(semaev_eta(U, 1, a).top());
    st.bootstrapped = true;
  }
  SDNB_CHECK(!ff::rel_trace(st.eta[0], 1, m).is_zero(),
             "eta_0 has zero trace to F_p");
  st.f.push_back(FqPoly(U));

  unsigned level = m;
  for (unsigned i = 1; i <= n; ++i) {
    const FqElem& e = st.eta.back();
    std::vector<FqElem> c(p + 1, U.zero());
    c[p] = U.one();
    c[p - 1] = -e;
    c[0] += e.pow(std::uint64_t(2 * p - 1));
    FqPoly fi(U, std::move(c));
    SDNB_CHECK(ff::find_roots(fi, level).empty(),
               "Semaev polynomial has a root one level down");
    level *= p;
    FqElem root = ff::find_root(fi, level);
    SDNB_CHECK(ff::rel_trace(root, level / p, p) == e,
               "Semaev trace one level down");
    SDNB_CHECK(!ff::rel_trace(root, m, level / m).is_zero(),
               "Semaev element has zero trace");
    st.f.push_back(std::move(fi));
    st.eta.push_back(std::move(root));
  }
  return st;
}

FqPoly minimal_polynomial(const FqElem& x, unsigned base_degree) {
  const ff::FqField& U = x.field();
  FqPoly acc(U, {U.one()});
  FqElem cur = x;
  do {
    acc = acc * FqPoly::x_minus(cur);
    cur = ff::frobenius_pow(cur, 1, base_degree);
  } while (!(cur == x));
  return acc;
}

}  // namespace sdnb::sdnb_ff
