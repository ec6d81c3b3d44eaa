#include "sdnb/grpalg/ff_algebra.hpp"

#include <numeric>

#include "sdnb/ff/poly.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::grpalg {

using ff::FqElem;
using ff::FqField;
using ff::FqPoly;

FfExtension::FfExtension(FqField universe, unsigned base_degree,
                         unsigned degree)
    : universe_(std::move(universe)), m_(base_degree), n_(degree) {
  if (m_ == 0 || n_ == 0 || universe_.degree() % (m_ * n_) != 0)
    throw ParameterError("FfExtension: universe degree must be divisible by m*n");
  group_ = AbelianGroup::cyclic(n_);
}

FqElem FfExtension::apply(std::size_t g, const FqElem& x) const {
  return ff::frobenius_pow(x, unsigned(g % n_), m_);
}

FqElem FfExtension::trace(const FqElem& x) const {
  return ff::rel_trace(x, m_, n_);
}

bool FfExtension::contains(const FqElem& x) const {
  return ff::in_subfield(x, m_ * n_);
}

bool is_normal(const FqElem& x, const FfExtension& ext) {
  if (!ext.contains(x)) return false;
  const FqField& U = ext.universe();
  const unsigned n = ext.degree();
  std::vector<FqElem> c(n, U.zero());
  FqElem cur = x;
  for (unsigned i = 0; i < n; ++i) {
    c[n - 1 - i] = cur;
    cur = ff::frobenius_pow(cur, 1, ext.base_degree());
  }
  std::vector<FqElem> xn(n + 1, U.zero());
  xn[0] = -U.one();
  xn[n] = U.one();
  const FqPoly g = gcd(FqPoly(U, std::move(xn)), FqPoly(U, std::move(c)));
  return g.degree() == 0;
}

bool is_unit_ff(const FfGroupAlg& a) {
  const AbelianGroup& G = a.grp();
  const unsigned p = a[0].field().characteristic();
  std::vector<unsigned> h_orders;
  for (unsigned n : G.factors()) {
    unsigned h = n;
    while (h % p == 0) h /= p;
    h_orders.push_back(h);
  }
  auto H = AbelianGroup::product(h_orders);
  std::vector<FqElem> img(H->order(), a.zero_coeff());
  for (std::size_t g = 0; g < G.order(); ++g) {
    auto t = G.tuple(g);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] %= h_orders[i];
    img[H->index(t)] += a[g];
  }
  if (H->order() == 1) return !img[0].is_zero();
  try {
    invert_unit(FfGroupAlg(H, std::move(img)));
    return true;
  } catch (const NonUnitError&) {
    return false;
  }
}

FfGroupAlg sqrt_unipotent_charp(const FfGroupAlg& w, unsigned base_degree) {
  const unsigned p = w[0].field().characteristic();
  if (p == 2) throw DomainError("sqrt_unipotent_charp: characteristic 2");
  if (!w.augmentation().is_one())
    throw DomainError("sqrt_unipotent_charp: augmentation is not 1");
  const std::size_t cap = std::size_t(base_degree) * w.size() + 1;
  unsigned long t = 1;
  FfGroupAlg cur = w;
  std::size_t steps = 0;
  while (!cur.is_one()) {
    cur = cur.pow(p);
    t *= p;
    if (++steps > cap) throw InternalError("sqrt_unipotent_charp: no p-power order");
  }
  FfGroupAlg r = w.pow((t + 1) / 2);
  SDNB_CHECK(r.pow(2).equals(w), "sqrt_unipotent_charp: square");
  if (w.is_j_fixed()) SDNB_CHECK(r.is_j_fixed(), "sqrt_unipotent_charp: J");
  return r;
}

FfGroupAlg sqrt_modular_pgroup(const FfGroupAlg& u, unsigned base_degree,
                               const FqElem* scalar_root) {
  const FqElem c = u.augmentation();
  if (c.is_zero()) throw NonUnitError("sqrt_modular_pgroup: augmentation is 0");
  if (!ff::in_subfield(c, base_degree))
    throw DomainError("sqrt_modular_pgroup: coefficients outside F_q");
  FqElem root;
  if (scalar_root) {
    if (!(scalar_root->square() == c))
      throw DomainError("sqrt_modular_pgroup: supplied root does not square to eps(u)");
    root = *scalar_root;
  } else {
    root = ff::sqrt_ff(c, base_degree);
  }
  const FfGroupAlg unip = u.scaled(c.inverse());
  FfGroupAlg r = sqrt_unipotent_charp(unip, base_degree).scaled(root);
  SDNB_CHECK(r.pow(2).equals(u), "sqrt_modular_pgroup: square");
  return r;
}

CharData::CharData(FqField universe, unsigned base_degree, unsigned d)
    : universe_(std::move(universe)), m_(base_degree), d_(d) {
  const unsigned p = universe_.characteristic();
  if (d == 0 || std::gcd(d, p) != 1)
    throw DomainError("CharData: d must be prime to the characteristic");
  qd_ = unsigned(nt::powmod(p, m_, d));
  const unsigned ord = unsigned(nt::mult_order(qd_, d));
  if (universe_.degree() % (m_ * ord) != 0)
    throw DomainError("CharData: universe does not contain F_q(zeta_d)");
  zeta_ = ff::primitive_root_of_unity(universe_, d, m_ * ord);
  std::vector<int> owner(d, -1);
  for (unsigned s = 0; s < d; ++s) {
    if (owner[s] >= 0) continue;
    CharOrbit o;
    o.rep = s;
    unsigned x = s;
    do {
      owner[x] = int(orbits_.size());
      o.members.push_back(x);
      x = unsigned(std::uint64_t(x) * qd_ % d);
    } while (x != s);
    o.field_degree = m_ * unsigned(o.members.size());
    orbits_.push_back(o);
  }
  for (auto& o : orbits_) {
    const unsigned neg = (d - o.rep) % d;
    o.partner = orbits_[owner[neg]].rep;
    if (o.partner == o.rep) {
      for (unsigned t = 0; t < o.members.size(); ++t)
        if (o.members[t] == neg) o.j = t;
      o.fixed_degree =
          o.rep == 0 ? m_ : m_ * unsigned(o.members.size()) / 2;
    }
  }
}

const CharOrbit& CharData::orbit_of_rep(unsigned s) const {
  for (const auto& o : orbits_)
    if (o.rep == s) return o;
  throw DomainError("CharData: not an orbit representative");
}

FqElem CharData::apply_j(const CharOrbit& o, const FqElem& v) const {
  return ff::frobenius_pow(v, o.j, m_);
}

std::vector<FqElem> char_values_all(const FfGroupAlg& a, const CharData& cd) {
  const unsigned d = cd.d();
  if (a.size() != d || a.grp().factors().size() != 1)
    throw DomainError("char_decompose: group must be cyclic of order d");
  std::vector<FqElem> zp(d);
  zp[0] = cd.universe().one();
  for (unsigned k = 1; k < d; ++k) zp[k] = zp[k - 1] * cd.zeta();
  std::vector<FqElem> out;
  out.reserve(d);
  for (unsigned s = 0; s < d; ++s) {
    FqElem v = cd.universe().zero();
    for (unsigned j = 0; j < d; ++j)
      if (!a[j].is_zero()) v += a[j] * zp[(std::uint64_t(s) * j) % d];
    out.push_back(v);
  }
  return out;
}

std::vector<FqElem> char_decompose(const FfGroupAlg& a, const CharData& cd) {
  const auto all = char_values_all(a, cd);
  std::vector<FqElem> out;
  for (const auto& o : cd.orbits()) {
    SDNB_CHECK(ff::in_subfield(all[o.rep], o.field_degree),
               "char value outside F_q(chi_s)");
    out.push_back(all[o.rep]);
  }
  return out;
}

FfGroupAlg char_recompose(const std::vector<FqElem>& rep_values,
                          const CharData& cd, const GroupPtr& group) {
  const unsigned d = cd.d();
  if (rep_values.size() != cd.orbits().size())
    throw DomainError("char_recompose: one value per orbit required");
  if (group->order() != d) throw DomainError("char_recompose: group order");
  std::vector<FqElem> V(d);
  for (std::size_t i = 0; i < cd.orbits().size(); ++i) {
    const auto& o = cd.orbits()[i];
    if (!ff::in_subfield(rep_values[i], o.field_degree))
      throw DomainError("char_recompose: value outside F_q(chi_s)");
    for (unsigned t = 0; t < o.members.size(); ++t)
      V[o.members[t]] = ff::frobenius_pow(rep_values[i], t, cd.base_degree());
  }
  const FqField& U = cd.universe();
  const unsigned p = U.characteristic();
  const FqElem dinv = U.from_int(long(nt::powmod(d % p, p - 2, p)));
  std::vector<FqElem> zinv(d);
  zinv[0] = U.one();
  const FqElem zi = cd.zeta().inverse();
  for (unsigned k = 1; k < d; ++k) zinv[k] = zinv[k - 1] * zi;
  std::vector<FqElem> coeffs;
  for (unsigned j = 0; j < d; ++j) {
    FqElem acc = U.zero();
    for (unsigned s = 0; s < d; ++s)
      acc += V[s] * zinv[(std::uint64_t(s) * j) % d];
    acc *= dinv;
    if (!ff::in_subfield(acc, cd.base_degree()))
      throw DomainError("char_recompose: coefficient outside F_q");
    coeffs.push_back(acc);
  }
  return FfGroupAlg(group, std::move(coeffs));
}

}  // namespace sdnb::grpalg
