#include "sdnb/sdnb_ff/construct.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/embedding.hpp"
#include "sdnb/sdnb_ff/pprime.hpp"
#include "sdnb/sdnb_ff/semaev.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::sdnb_ff {

using ff::FqElem;
using ff::FqField;
using grpalg::FfExtension;
using grpalg::FfGroupAlg;

namespace {

void check_params(unsigned p, unsigned m, unsigned n) {
  if (!nt::is_prime(p) || p >= (1u << 16))
    throw ParameterError("p must be a prime below 65536, got " +
                         std::to_string(p));
  if (m == 0) throw ParameterError("base degree m must be positive");
  if (n == 0) throw ParameterError("extension degree n must be positive");
}

}  // namespace

void check_existence_ff(unsigned p, unsigned n) {
  if (p != 2 && n % 2 == 0)
    throw ExistenceError(
        "no self-dual normal basis: in odd characteristic one exists if and "
        "only if [F:E] is odd (n = " + std::to_string(n) + ")");
  if (p == 2 && n % 4 == 0)
    throw ExistenceError(
        "no self-dual normal basis: in characteristic 2 one exists if and "
        "only if the exponent of the Galois group is not divisible by 4 (n = " +
        std::to_string(n) + ")");
}

GramReportFF verify_gram_ff(const FqElem& x, const FfExtension& ext) {
  GramReportFF rep;
  rep.in_field = x.field() == ext.universe() && ext.contains(x);
  if (!rep.in_field) return rep;
  for (std::size_t i = 0; i < ext.degree(); ++i) {
    FqElem t = ext.trace(x * ext.apply(i, x));
    const bool ok = i == 0 ? t.is_one() : t.is_zero();
    if (!ok) rep.failing.push_back(i);
    rep.values.push_back(std::move(t));
  }
  rep.pass = rep.failing.empty();
  return rep;
}

FqElem selfdual_p_power_in(const FqField& U, unsigned m, unsigned a) {
  const unsigned p = U.characteristic();
  if (a == 0) return U.one();
  if (p == 2)
    throw ParameterError("selfdual_p_power: characteristic 2 uses the char-2 route");
  unsigned n = 1;
  for (unsigned k = 0; k < a; ++k) n *= p;
  const FfExtension ext(U, m, n);
  const SemaevState st = semaev_eta(U, m, a);
  const FqElem& eta = st.top();
  const FfGroupAlg R = grpalg::resolvend_gram(eta, ext);
  const FqElem tr = ext.trace(eta);
  const FfGroupAlg w = grpalg::sqrt_modular_pgroup(R, m, &tr);
  SDNB_CHECK(w.is_j_fixed(), "square root of R(eta) is not J-fixed");
  const FfGroupAlg winv = grpalg::invert_unit(w);
  return grpalg::group_act(winv, eta, [&](std::size_t g, const FqElem& y) {
    return ext.apply(g, y);
  });
}

FqElem selfdual_char2_quadratic_in(const FqField& U, unsigned m) {
  if (U.characteristic() != 2)
    throw ParameterError("char-2 quadratic part needs characteristic 2");
  const FqField F2 = ff::make_field(2, 2 * m);
  for (mpz_class k = 0; k < F2.size(); ++k) {
    const FqElem x = F2.lex_element(k);
    if (ff::rel_trace(x, m, 2).is_one())
      return ff::SubfieldEmbedding(F2, U).embed(x);
  }
  throw InternalError("no element of trace 1 in F_{q^2}");
}

unsigned universe_degree(unsigned p, unsigned m, unsigned n) {
  std::uint64_t M = std::uint64_t(m) * n;
  for (const auto& [r, e] : nt::factor(std::uint64_t(n)))
    if (r != p) M = nt::lcm(M, pprime_universe_degree(p, m, unsigned(r), e));
  if (M > 20000) throw ParameterError("universe field too large (degree " +
                                      std::to_string(M) + ")");
  return unsigned(M);
}

SelfDualCertificateFF construct_selfdual(unsigned p, unsigned m, unsigned n) {
  check_params(p, m, n);
  check_existence_ff(p, n);
  SelfDualCertificateFF cert;
  cert.p = p;
  cert.m = m;
  cert.n = n;
  cert.universe = ff::make_field(p, universe_degree(p, m, n));
  const FqField& U = cert.universe;
  FqElem x = U.one();
  std::string route;
  for (const auto& [r, e] : nt::factor(std::uint64_t(n))) {
    if (!route.empty()) route += "*";
    if (r == p && p == 2) {
      x *= selfdual_char2_quadratic_in(U, m);
      route += "char2-quadratic";
    } else if (r == p) {
      x *= selfdual_p_power_in(U, m, e);
      route += "semaev(" + std::to_string(p) + "^" + std::to_string(e) + ")";
    } else {
      x *= selfdual_pprime_in(U, m, unsigned(r), e).generator;
      route += "pprime(" + std::to_string(r) + "^" + std::to_string(e) + ")";
    }
  }
  if (route.empty()) route = "trivial";
  cert.route = route;
  cert.generator = x;
  const FfExtension ext(U, m, n);
  cert.gram = verify_gram_ff(x, ext);
  cert.normal = grpalg::is_normal(x, ext);
  cert.conventions = {
      "field moduli: lexicographically least monic irreducible, (c0,...,c_{m-1}) with c0 most significant",
      "roots and square roots: lexicographically least candidate",
      "Semaev scalar square root: Tr(eta)",
      "p' v_0 = Tr(eta); case-3 square root of a: lexicographically least",
      "char 2 quadratic part: lexicographically least xi in F_{q^2} with trace 1"};
  return cert;
}

SelfDualCertificateFF selfdual_p_power(unsigned p, unsigned m, unsigned a) {
  if (p == 2) throw ParameterError("selfdual_p_power: use the char-2 route");
  unsigned n = 1;
  for (unsigned k = 0; k < a; ++k) n *= p;
  return construct_selfdual(p, m, n);
}

SelfDualCertificateFF selfdual_pprime(unsigned p, unsigned m, unsigned r,
                                      unsigned i) {
  if (r == p) throw ParameterError("selfdual_pprime: r must differ from p");
  unsigned d = 1;
  for (unsigned k = 0; k < i; ++k) d *= r;
  return construct_selfdual(p, m, d);
}

SelfDualCertificateFF selfdual_char2(unsigned m, unsigned n) {
  return construct_selfdual(2, m, n);
}

std::vector<FqElem> brute_force_selfdual(unsigned p, unsigned m) {
  check_params(p, m, 1);
  if (nt::ipow(p, m) > 243)
    throw ParameterError("brute_force_selfdual: field larger than 3^5");
  const FqField F = ff::make_field(p, m);
  const FfExtension ext(F, 1, m);
  std::vector<FqElem> out;
  for (mpz_class k = 0; k < F.size(); ++k) {
    FqElem x = F.lex_element(k);
    if (verify_gram_ff(x, ext).pass) {
      SDNB_CHECK(grpalg::is_normal(x, ext), "self-dual element is not normal");
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace sdnb::sdnb_ff
