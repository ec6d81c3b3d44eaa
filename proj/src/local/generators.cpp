#include "sdnb/local/generators.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/embedding.hpp"
#include "sdnb/grpalg/padic_algebra.hpp"
#include "sdnb/padic/lubin_tate.hpp"
#include "sdnb/sdnb_ff/construct.hpp"
#include "sdnb/sdnb_ff/semaev.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::local {

using grpalg::LocalGroupAlg;
using padic::LocalBase;
using padic::LocalElem;
using padic::LocalExtension;

namespace {

void require_odd(unsigned d, const char* what) {
  if (d % 2 == 0)
    throw ExistenceError(std::string(what) +
                         ": no self-dual normal basis; in odd residue characteristic "
                         "one exists if and only if [L:K] is odd (d = " +
                         std::to_string(d) + ")");
}

SelfDualCertificateLocal finish(LocalExtension ext, LocalElem x, std::string route,
                                std::vector<std::string> conventions) {
  SelfDualCertificateLocal c;
  c.ext = std::move(ext);
  c.generator = std::move(x);
  c.route = std::move(route);
  c.conventions = std::move(conventions);
  c.expected_valuation = c.ext.v_A.value_or(0);
  c.valuation = c.ext.valuation(c.generator);
  c.gram = verify_gram_local(c.generator, c.ext);
  return c;
}

// u^-1 o x where u = hensel_sqrt(R, seed); checks u J(u) = R first.
LocalElem apply_inverse_sqrt(const LocalExtension& L, const LocalElem& x,
                             const LocalGroupAlg& R, const LocalGroupAlg& seed) {
  const LocalGroupAlg w = grpalg::hensel_sqrt(R, seed);
  SDNB_CHECK(w.is_j_fixed(), "square root of R is not J-fixed");
  SDNB_CHECK((w * w.involution()).equals(R), "u J(u) differs from R");
  const LocalGroupAlg winv = grpalg::invert_unit(w);
  return grpalg::group_act(winv, x, [&](std::size_t g, const LocalElem& v) {
    return L.apply(g, v);
  });
}

// Residue seed: sqrt_modular_pgroup for p-groups, using Tr(x) mod pi as the
// scalar root when it is nonzero.
LocalGroupAlg residue_seed(const LocalExtension& L, const LocalElem& x,
                           const LocalGroupAlg& R) {
  const grpalg::FfGroupAlg Rbar = grpalg::reduce_mod_pi(R);
  const ff::FqElem tr = L.trace(x).residue();
  const grpalg::FfGroupAlg s =
      grpalg::sqrt_modular_pgroup(Rbar, L.base.f, tr.is_zero() ? nullptr : &tr);
  return grpalg::lift_from_residue(L.ring, s);
}

SelfDualCertificateLocal unram_p_power(const LocalBase& base, unsigned a) {
  const unsigned p = base.p;
  const unsigned d = unsigned(nt::ipow(p, a).get_ui());
  LocalExtension L = padic::build_unramified(base, d);
  const sdnb_ff::SemaevState st = sdnb_ff::semaev_eta(L.ring->residue_field(), base.f, a);
  const LocalElem x0 = LocalElem::lift(L.ring, st.top());
  const LocalGroupAlg R = grpalg::resolvend_gram(x0, L);
  const LocalElem x = apply_inverse_sqrt(L, x0, R, residue_seed(L, x0, R));
  return finish(std::move(L), x,
                "unram-p(" + std::to_string(p) + "^" + std::to_string(a) + ")",
                {"residue generator: Semaev eta, lifted coordinate-wise",
                 "residue square root seed: sqrt_modular_pgroup with scalar root Tr(eta)",
                 "square root: Newton iteration from the seed"});
}

SelfDualCertificateLocal unram_pprime(const LocalBase& base, unsigned r, unsigned i) {
  const unsigned d = unsigned(nt::ipow(r, i).get_ui());
  LocalExtension L = padic::build_unramified(base, d);
  const sdnb_ff::SelfDualCertificateFF ffc =
      sdnb_ff::construct_selfdual(base.p, base.f, d);
  SDNB_CHECK(ffc.gram.pass, "residue self-dual generator failed its Gram check");
  const ff::SubfieldEmbedding emb(L.ring->residue_field(), ffc.universe);
  const LocalElem x0 = LocalElem::lift(L.ring, emb.restrict(ffc.generator));
  const LocalGroupAlg R = grpalg::resolvend_gram(x0, L);
  SDNB_CHECK(grpalg::reduce_mod_pi(R).is_one(), "R(x) is not 1 modulo pi");
  const LocalGroupAlg one = LocalGroupAlg::scalar(R.group(), LocalElem::one(L.ring));
  const LocalElem x = apply_inverse_sqrt(L, x0, R, one);
  return finish(std::move(L), x,
                "unram-p'(" + std::to_string(r) + "^" + std::to_string(i) + ")",
                {"residue generator: self-dual finite-field generator (" + ffc.route +
                     "), restricted to the standalone residue field and lifted",
                 "square root: Newton iteration from 1"});
}

}  // namespace

SelfDualCertificateLocal tame_generator(const LocalBase& base, unsigned d) {
  require_odd(d, "tame extension");
  LocalExtension L = padic::build_tame(base, d);
  const auto& r = L.ring;
  const LocalElem t = LocalElem::t(r);
  const LocalElem tau = LocalElem::from_int(r, -long(base.p));
  const LocalElem tinv = t.pow((unsigned long)(d - 1)) * tau.inverse();
  const LocalElem one = LocalElem::one(r);
  const LocalElem x = LocalElem::from_int(r, long(d)).inverse() * (one - tau) *
                      (one - t).inverse() * tinv.pow((unsigned long)((d - 1) / 2));
  SDNB_CHECK(L.valuation(x) == (1 - long(d)) / 2, "tame generator has the wrong valuation");
  return finish(std::move(L), x, "tame",
                {"tau = -p, L = K[t]/(t^d - tau)",
                 "Galois action t -> omega^k t, omega the Teichmuller lift of the "
                 "lexicographically least primitive d-th root of unity in F_q"});
}

SelfDualCertificateLocal unram_generator(const LocalBase& base, unsigned d) {
  if (d == 0) throw ParameterError("unramified extension: degree must be positive");
  require_odd(d, "unramified extension");
  if (d == 1) {
    LocalExtension L = padic::build_unramified(base, 1);
    LocalElem one = LocalElem::one(L.ring);
    return finish(std::move(L), one, "trivial", {});
  }
  const auto parts = nt::factor(std::uint64_t(d));
  std::vector<SelfDualCertificateLocal> certs;
  for (const auto& [r, e] : parts) {
    if (r == base.p) certs.push_back(unram_p_power(base, e));
    else certs.push_back(unram_pprime(base, unsigned(r), e));
  }
  if (certs.size() == 1) return std::move(certs.front());
  LocalExtension L = padic::build_unramified(base, d);
  LocalElem x = LocalElem::one(L.ring);
  std::string route;
  std::vector<std::string> conv{"composite degree: product of the prime-power parts, "
                                "embedded by Hensel-lifted residue roots"};
  for (const auto& c : certs) {
    x = x * padic::unramified_embedding(c.ext.ring, L.ring).apply(c.generator);
    route += (route.empty() ? "" : "*") + c.route;
    conv.insert(conv.end(), c.conventions.begin(), c.conventions.end());
  }
  return finish(std::move(L), x, route, conv);
}

WildResult wild_generator(const LocalBase& base, unsigned trace_to) {
  if (base.f != 1)
    throw ParameterError("wild case: only q = p is supported (unramified degree 1)");
  if (trace_to != 1)
    throw ParameterError("wild case: Gal(M/K) has prime order p, so H must be trivial");
  const padic::LubinTateData ltd = padic::make_lubin_tate(base);
  const LocalExtension M = padic::build_wild(ltd);
  const unsigned p = base.p;
  const LocalElem x = ltd.alpha().pow((unsigned long)(p - 1)).mul_ppow(-1);
  SDNB_CHECK(M.contains(x), "alpha^(q-1)/p is not fixed by the Teichmuller action");
  SDNB_CHECK(M.valuation(x) == 1 - long(p), "v_M(x) differs from 1 - q");
  for (unsigned j = 0; j < p; ++j) {
    const LocalElem beta = ltd.conjugate(j);
    SDNB_CHECK(padic::eval(padic::eisenstein_poly(M.ring, M.ring), beta)
                       .content_or_precision() >= base.precision - base.guard,
               "conjugate of alpha is not a root of g");
  }
  const std::vector<std::string> conv{
      "f(X) = X^p + pX, alpha the class of X in Q_p[X]/(g)",
      "Gal(M/K) generated by [1+p]_f; conjugate j uses [(1+p)^j mod p^2]_f",
      "residue square root seed: sqrt_modular_pgroup with scalar root Tr(x)"};
  WildResult out;
  {
    // Direct: R over M/K with Tr_{M/K} = matrix trace / (p - 1).
    const LocalGroupAlg R = grpalg::resolvend_gram(x, M);
    const LocalElem z = apply_inverse_sqrt(M, x, R, residue_seed(M, x, R));
    auto conv1 = conv;
    conv1.push_back("Tr_{M/K} as matrix trace over Q_p divided by p - 1");
    out.direct = finish(M, z, "wild-direct", conv1);
  }
  {
    // Traced: trace down first (H trivial), Galois-sum traces.
    LocalExtension Mg = M;
    Mg.matrix_trace_index = 0;
    const LocalElem y = x;
    const LocalGroupAlg R = grpalg::resolvend_gram(y, Mg);
    const LocalElem z = apply_inverse_sqrt(Mg, y, R, residue_seed(Mg, y, R));
    auto conv2 = conv;
    conv2.push_back("Tr_{M/K} as the sum over Gal(M/K)");
    out.traced = finish(std::move(Mg), z, "wild-traced", conv2);
  }
  out.variants_equal = (out.direct.generator - out.traced.generator).is_zero();
  return out;
}

std::size_t diagonal_generator(const LocalExtension& comp) {
  const auto& G = *comp.group();
  if (G.factors().size() != 2) throw ParameterError("diagonal: needs a compositum group");
  return G.index({1u % G.factors()[0], 1u % G.factors()[1]});
}

SelfDualCertificateLocal compose_and_trace(const SelfDualCertificateLocal& un,
                                           const SelfDualCertificateLocal& tot,
                                           const std::vector<std::size_t>& H) {
  if (un.ext.kind != padic::ExtKind::Unramified)
    throw ParameterError("compose: first certificate must be unramified");
  if (tot.ext.kind != padic::ExtKind::Tame)
    throw ParameterError("compose: second certificate must be totally (tamely) ramified");
  const LocalBase& b = un.ext.base;
  const LocalBase& b2 = tot.ext.base;
  if (b.p != b2.p || b.f != b2.f || b.precision != b2.precision)
    throw ParameterError("compose: certificates over different bases");
  const LocalExtension C = padic::build_compositum(b, un.ext.degree, tot.ext.degree);
  const padic::RingMap from_un(un.ext.ring, C.ring, LocalElem::y(C.ring),
                               LocalElem::zero(C.ring));
  const padic::RingMap from_tot = padic::unramified_embedding(tot.ext.ring, C.ring);
  const LocalElem y = from_un.apply(un.generator) * from_tot.apply(tot.generator);
  LocalExtension L = padic::fixed_field(C, H);
  const auto Hs = C.group()->subgroup(H);
  LocalElem z = C.autos[Hs[0]].apply(y);
  for (std::size_t k = 1; k < Hs.size(); ++k) z += C.autos[Hs[k]].apply(y);
  std::vector<std::string> conv{"compositum on the tensor basis y^a t^b",
                                "group C_{d_un} x C_{d_tot}, (a, b) acting as phi^(f a) "
                                "on y and t -> omega^b t"};
  return finish(std::move(L), z, Hs.size() == 1 ? "compositum" : "trace-down", conv);
}

}  // namespace sdnb::local
