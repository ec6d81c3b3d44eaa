#include "sdnb/sdnb_ff/pprime.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/embedding.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::sdnb_ff {

using ff::FqElem;
using ff::FqField;
using grpalg::CharData;
using grpalg::FfExtension;
using grpalg::FfGroupAlg;

namespace {

unsigned ipow_u(unsigned b, unsigned e) {
  unsigned r = 1;
  for (unsigned k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

std::string to_string(VsCase c) {
  switch (c) {
    case VsCase::Zero: return "zero";
    case VsCase::PairedLow: return "paired";
    case VsCase::PairedHigh: return "paired-partner";
    case VsCase::Fixed1: return "fixed-case-1";
    case VsCase::Fixed2: return "fixed-case-2";
    case VsCase::Fixed3: return "fixed-case-3";
  }
  return "?";
}

unsigned pprime_universe_degree(unsigned p, unsigned m, unsigned r,
                                unsigned i) {
  if (r == p || !nt::is_prime(r) || r == 2)
    throw ParameterError("p' part: r must be an odd prime different from p");
  const unsigned qr = unsigned(nt::powmod(p, m, r));
  const unsigned v = unsigned(nt::mult_order(qr, r));
  return m * v * ipow_u(r, i);
}

PPrimeState pprime_eta(const FqField& U, unsigned m, unsigned r, unsigned i) {
  const unsigned p = U.characteristic();
  if (r == p) throw ParameterError("pprime_eta: r must differ from p");
  const unsigned M = pprime_universe_degree(p, m, r, i);
  if (U.degree() % M != 0)
    throw ParameterError("pprime_eta: universe does not contain F_{q^(vd)}");
  PPrimeState st;
  st.m = m;
  st.r = r;
  st.i = i;
  st.d = ipow_u(r, i);
  st.v = M / (m * st.d);
  const unsigned d = st.d;

  const FqField Fq1 = ff::make_field(p, m * st.v);
  const ff::SubfieldEmbedding emb(Fq1, U);
  st.zeta = emb.embed(ff::mult_generator(Fq1));
  st.theta = ff::binomial_roots(st.zeta, d, M).front();

  st.q1_mod_d = unsigned(nt::powmod(p, std::uint64_t(m) * st.v, d));
  const unsigned q_mod_d = unsigned(nt::powmod(p, m, d));
  std::vector<bool> seen(d, false);
  for (unsigned s = 0; s < d; ++s) {
    if (seen[s]) continue;
    st.s_q1.push_back(s);
    unsigned x = s;
    do {
      seen[x] = true;
      x = unsigned(std::uint64_t(x) * st.q1_mod_d % d);
    } while (x != s);
  }
  std::vector<int> q_orbit(d, -1);
  for (unsigned s = 0; s < d; ++s) {
    if (q_orbit[s] >= 0) continue;
    unsigned x = s;
    do {
      q_orbit[x] = int(st.q_orbit_reps.size());
      x = unsigned(std::uint64_t(x) * q_mod_d % d);
    } while (x != s);
    st.q_orbit_reps.push_back(s);
  }

  // The trace preserves isotypic components, so each q-orbit is handled on
  // its own: keep scalar 1 when its traced part is nonzero, otherwise take
  // the first scalar of F_{q_1} (lex order) that makes it nonzero.
  st.xi = U.zero();
  st.eta = U.zero();
  for (std::size_t o = 0; o < st.q_orbit_reps.size(); ++o) {
    FqElem part = U.zero();
    for (unsigned s : st.s_q1)
      if (q_orbit[s] == int(o)) part += st.theta.pow(std::uint64_t(s));
    FqElem c = U.one();
    FqElem traced = ff::rel_trace(part, m * d, st.v);
    for (mpz_class k = 1; traced.is_zero(); k += 1) {
      if (k >= Fq1.size())
        throw InternalError("pprime_eta: no scalar gives a nonzero component");
      const FqElem cand = Fq1.lex_element(k);
      if (cand.is_one()) continue;
      c = emb.embed(cand);
      traced = ff::rel_trace(c * part, m * d, st.v);
      st.rescaled = true;
    }
    st.orbit_scalars.push_back(c);
    st.xi += c * part;
    st.eta += traced;
  }
  SDNB_CHECK(ff::rel_trace(st.xi, m * d, st.v) == st.eta, "p' eta trace");
  const FfExtension ext(U, m, d);
  SDNB_CHECK(grpalg::is_normal(st.eta, ext), "p' eta is not normal");
  return st;
}

VsVector pprime_vs(const FfGroupAlg& R, const CharData& cd,
                   const FqElem& trace_eta) {
  if (!grpalg::is_unit_ff(R)) throw NonUnitError("pprime_vs: R is not a unit");
  const FqField& U = cd.universe();
  const unsigned p = U.characteristic();
  const auto a = grpalg::char_decompose(R, cd);
  VsVector out;
  for (std::size_t k = 0; k < cd.orbits().size(); ++k) {
    const auto& o = cd.orbits()[k];
    const FqElem& as = a[k];
    FqElem v;
    VsCase tag;
    if (o.rep == 0) {
      v = trace_eta;
      tag = VsCase::Zero;
      SDNB_CHECK(v.square() == as, "v_0^2 differs from chi_0(R)");
    } else if (o.partner != o.rep) {
      if (o.rep < o.partner) {
        v = as;
        tag = VsCase::PairedLow;
      } else {
        v = U.one();
        tag = VsCase::PairedHigh;
      }
    } else {
      const unsigned Es = o.fixed_degree, Fs = o.field_degree;
      SDNB_CHECK(ff::in_subfield(as, Es), "chi_s(R) outside E_s");
      if (ff::is_square(as, Es)) {
        v = ff::sqrt_ff(as, Es);
        tag = VsCase::Fixed1;
      } else if (!ff::is_square(-as, Es)) {
        v = ff::sqrt_ff(-as, Fs);
        tag = VsCase::Fixed2;
      } else {
        unsigned n = 1;
        while (n < p && nt::powmod((p - n) % p, (p - 1) / 2, p) != 1) ++n;
        if (n <= 1 || n >= p)
          throw InternalError("pprime_vs: case 3 requires n >= 2");
        out.n = n;
        const FqElem rn1 = ff::sqrt_ff(U.from_int(long(n) - 1), 1);
        const FqElem rmn = ff::sqrt_ff(U.from_int(-long(n)), 1);
        const FqElem ra = ff::sqrt_ff(as, Fs);
        const FqElem rma = ff::sqrt_ff(-as, Es);
        v = (rn1 * ra + rma) * rmn.inverse();
        tag = VsCase::Fixed3;
      }
      SDNB_CHECK(v * cd.apply_j(o, v) == as, "v_s J(v_s) differs from chi_s(R)");
    }
    SDNB_CHECK(!v.is_zero(), "v_s vanished");
    out.values.push_back(std::move(v));
    out.cases.push_back(tag);
  }
  return out;
}

PPrimeResult selfdual_pprime_in(const FqField& U, unsigned m, unsigned r,
                                unsigned i) {
  PPrimeResult res;
  res.state = pprime_eta(U, m, r, i);
  const unsigned d = res.state.d;
  const FfExtension ext(U, m, d);
  const FfGroupAlg R = grpalg::resolvend_gram(res.state.eta, ext);
  const CharData cd(U, m, d);
  res.vs = pprime_vs(R, cd, ext.trace(res.state.eta));
  res.v = grpalg::char_recompose(res.vs.values, cd, ext.group());
  SDNB_CHECK((res.v * res.v.involution()).equals(R), "v J(v) differs from R(eta)");
  const FfGroupAlg vinv = grpalg::invert_unit(res.v);
  res.generator = grpalg::group_act(
      vinv, res.state.eta,
      [&](std::size_t g, const FqElem& x) { return ext.apply(g, x); });
  return res;
}

}  // namespace sdnb::sdnb_ff
