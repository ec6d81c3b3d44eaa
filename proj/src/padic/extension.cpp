#include "sdnb/padic/extension.hpp"

#include <algorithm>
#include <sstream>

#include "sdnb/error.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::padic {

LocalBase LocalBase::make(unsigned p, unsigned f, int precision, int guard) {
  if (!nt::is_prime(p) || p == 2)
    throw ParameterError("local base: p must be an odd prime, got " + std::to_string(p));
  if (p >= (1u << 16)) throw ParameterError("local base: p too large");
  if (f == 0) throw ParameterError("local base: f must be positive");
  if (guard < 0) throw ParameterError("local base: guard must be non-negative");
  if (precision <= guard)
    throw ParameterError("local base: precision must exceed the guard digits");
  return LocalBase{p, f, precision, guard};
}

mpz_class LocalBase::q() const { return nt::ipow(p, f); }

std::vector<mpz_class> LocalBase::modulus() const {
  std::vector<mpz_class> out;
  for (ff::Coeff c : ff::make_field(p, f).modulus()) out.push_back(c);
  return out;
}

std::string to_string(ExtKind k) {
  switch (k) {
    case ExtKind::Unramified: return "unramified";
    case ExtKind::Eisenstein: return "eisenstein";
    case ExtKind::Tame: return "tame";
    case ExtKind::Compositum: return "compositum";
    case ExtKind::Wild: return "wild";
  }
  return "?";
}

const grpalg::GroupPtr& LocalExtension::group() const {
  if (!group_) throw DomainError("extension carries no Galois group");
  return group_;
}

LocalElem LocalExtension::apply(std::size_t g, const LocalElem& x) const {
  return autos.at(g).apply(x);
}

LocalElem LocalExtension::galois_trace(const LocalElem& x) const {
  if (autos.empty()) throw DomainError("extension carries no Galois group");
  LocalElem acc = autos[0].apply(x);
  for (std::size_t g = 1; g < autos.size(); ++g) acc += autos[g].apply(x);
  return acc;
}

LocalElem LocalExtension::trace(const LocalElem& x) const {
  if (matrix_trace_index == 0) return galois_trace(x);
  const LocalElem k = LocalElem::from_int(ring, long(matrix_trace_index));
  return matrix_trace(x) * k.inverse();
}

bool LocalExtension::contains(const LocalElem& x) const {
  if (x.ring() != ring) return false;
  for (const auto& s : fixers)
    if (!s.fixes(x)) return false;
  return true;
}

long LocalExtension::valuation(const LocalElem& x) const {
  const long v = x.valuation();
  if (v % long(valuation_scale) != 0)
    throw DomainError("valuation: element does not lie in L");
  return v / long(valuation_scale);
}

std::string LocalExtension::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " extension of degree " << degree << " over Q_" << base.p;
  if (base.f > 1) os << "^" << base.f;
  os << " (e=" << e << ", f=" << f_rel << ", v_L(D)=" << v_D << ")";
  return os.str();
}

LocalElem tame_root_of_unity(const RingPtr& ring, unsigned f, unsigned d) {
  if (d == 1) return LocalElem::one(ring);
  const ff::FqElem u = ff::primitive_root_of_unity(ring->residue_field(), d, f);
  return teichmuller(ring, u);
}

namespace {

void check_tame(const LocalBase& base, unsigned d) {
  if (d == 0 || d % 2 == 0)
    throw ParameterError("tame extension: d must be odd, got " + std::to_string(d));
  if ((base.q() - 1) % d != 0)
    throw ParameterError("tame extension: d = " + std::to_string(d) +
                         " does not divide q - 1 = " + mpz_class(base.q() - 1).get_str());
}

std::vector<mpz_class> kummer_poly(unsigned p, unsigned d) {
  std::vector<mpz_class> E(d + 1, 0);
  E[0] = p;  // t^d - tau, tau = -p
  E[d] = 1;
  return E;
}

std::vector<LocalElem> orbit(const RingAutomorphism& s, const LocalElem& x,
                             unsigned n) {
  std::vector<LocalElem> out{x};
  for (unsigned k = 1; k < n; ++k) out.push_back(s.apply(out.back()));
  return out;
}

}  // namespace

LocalExtension build_unramified(const LocalBase& base, unsigned d) {
  if (d == 0) throw ParameterError("unramified extension: degree must be positive");
  LocalExtension L;
  L.base = base;
  L.kind = ExtKind::Unramified;
  L.generator_name = "y";
  L.degree = d;
  L.f_rel = d;
  L.v_D = 0;
  L.v_A = 0;
  L.ring = LocalRing::unramified(base.p, base.f * d, base.precision);
  L.group_ = grpalg::AbelianGroup::cyclic(d);
  L.unram_part = d;
  const RingAutomorphism Phi = frobenius_lift(L.ring).pow(base.f);
  const auto ys = orbit(Phi, LocalElem::y(L.ring), d + 1);
  SDNB_CHECK((ys[d] - ys[0]).is_zero(), "Frobenius lift has the wrong order");
  for (unsigned k = 0; k < d; ++k)
    L.autos.emplace_back(L.ring, L.ring, ys[k], LocalElem::t(L.ring));
  return L;
}

LocalExtension build_tame(const LocalBase& base, unsigned d) {
  check_tame(base, d);
  LocalExtension L;
  L.base = base;
  L.kind = ExtKind::Tame;
  L.generator_name = "t";
  L.degree = d;
  L.e = d;
  L.v_D = long(d) - 1;
  L.v_A = -L.v_D / 2;
  L.ring = LocalRing::make(base.p, base.f, kummer_poly(base.p, d), base.precision);
  L.group_ = grpalg::AbelianGroup::cyclic(d);
  L.tame_part = d;
  const LocalElem omega = tame_root_of_unity(L.ring, base.f, d);
  LocalElem w = LocalElem::one(L.ring);
  const LocalElem y = LocalElem::y(L.ring), t = LocalElem::t(L.ring);
  for (unsigned k = 0; k < d; ++k) {
    L.autos.emplace_back(L.ring, L.ring, y, w * t);
    w = w * omega;
  }
  return L;
}

LocalExtension build_eisenstein(const LocalBase& base, std::vector<mpz_class> poly) {
  if (poly.size() < 2) throw ParameterError("eisenstein: polynomial must have degree >= 1");
  if (poly.size() == 2 && poly[0] == 0)
    throw ParameterError("polynomial is not Eisenstein");
  LocalExtension L;
  L.base = base;
  L.kind = ExtKind::Eisenstein;
  L.generator_name = "t";
  L.degree = unsigned(poly.size() - 1);
  L.e = L.degree;
  L.ring = LocalRing::make(base.p, base.f, std::move(poly), base.precision);
  // D = (E'(t)) for a monogenic totally ramified extension.
  LocalPoly E = eisenstein_poly(L.ring, L.ring);
  L.v_D = eval(derivative(E), LocalElem::t(L.ring)).valuation();
  if (L.v_D % 2 == 0) L.v_A = -L.v_D / 2;
  return L;
}

LocalExtension build_compositum(const LocalBase& base, unsigned d_un,
                                unsigned d_tot) {
  if (d_un == 0) throw ParameterError("compositum: unramified degree must be positive");
  check_tame(base, d_tot);
  LocalExtension L;
  L.base = base;
  L.kind = ExtKind::Compositum;
  L.generator_name = "y,t";
  L.degree = d_un * d_tot;
  L.e = d_tot;
  L.f_rel = d_un;
  L.v_D = long(d_tot) - 1;
  L.v_A = -L.v_D / 2;
  L.unram_part = d_un;
  L.tame_part = d_tot;
  L.ring = LocalRing::make(base.p, base.f * d_un, kummer_poly(base.p, d_tot),
                           base.precision);
  L.group_ = grpalg::AbelianGroup::product({d_un, d_tot});
  const RingAutomorphism Phi = frobenius_lift(L.ring).pow(base.f);
  const auto ys = orbit(Phi, LocalElem::y(L.ring), d_un);
  const LocalElem omega = tame_root_of_unity(L.ring, base.f, d_tot);
  const LocalElem t = LocalElem::t(L.ring);
  for (std::size_t g = 0; g < L.group_->order(); ++g) {
    const auto ab = L.group_->tuple(g);
    L.autos.emplace_back(L.ring, L.ring, ys[ab[0]], omega.pow((unsigned long)ab[1]) * t);
  }
  return L;
}

LocalExtension fixed_field(const LocalExtension& comp,
                           const std::vector<std::size_t>& gens) {
  if (comp.kind != ExtKind::Compositum)
    throw ParameterError("fixed_field: needs a compositum extension");
  const auto& G = *comp.group();
  const auto H = G.subgroup(gens);
  for (std::size_t h : H)
    if (h != 0 && G.tuple(h)[0] == 0)
      throw ParameterError(
          "trace-down subgroup meets the inertia group; L'/L would not be unramified");
  if (H.size() == G.order())
    throw ParameterError("trace-down subgroup is the whole group; the target would be K");
  if (H.size() == 1) return comp;
  const std::size_t m = G.order() / H.size();
  auto in_H = [&](std::size_t g) {
    return std::binary_search(H.begin(), H.end(), g);
  };
  std::size_t gen = G.order();
  for (std::size_t g = 0; g < G.order() && gen == G.order(); ++g) {
    std::size_t x = g, k = 1;
    while (!in_H(x)) {
      x = G.mul(x, g);
      ++k;
    }
    if (k == m) gen = g;
  }
  if (gen == G.order())
    throw ParameterError("fixed_field: G/H is not cyclic; unsupported");
  LocalExtension L = comp;
  L.generator_name = "trace";
  L.degree = unsigned(m);
  L.e = comp.tame_part;
  L.f_rel = unsigned(m) / L.e;
  L.v_D = long(L.e) - 1;
  L.v_A = -L.v_D / 2;
  L.valuation_scale = comp.e / L.e;
  L.group_ = grpalg::AbelianGroup::cyclic(unsigned(m));
  L.autos.clear();
  std::size_t x = 0;
  for (std::size_t k = 0; k < m; ++k) {
    L.autos.push_back(comp.autos[x]);
    x = G.mul(x, gen);
  }
  L.fixers.clear();
  for (std::size_t h : H)
    if (h != 0) L.fixers.push_back(comp.autos[h]);
  return L;
}

}  // namespace sdnb::padic
