#include "sdnb/padic/lubin_tate.hpp"

#include <algorithm>
#include <cmath>

#include "sdnb/error.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::padic {

namespace {

using Series = std::vector<mpz_class>;

void reduce(Series& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
}

Series mul_trunc(const Series& a, const Series& b, std::size_t len,
                 const mpz_class& m) {
  Series r(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  reduce(r, m);
  return r;
}

}  // namespace

long LubinTateSeries::min_precision() const {
  long m = -1;
  for (std::size_t k = 1; k < precision.size(); ++k)
    if (m < 0 || precision[k] < m) m = precision[k];
  return m;
}

LubinTateSeries lubin_tate_series(const mpz_class& u, unsigned p,
                                  unsigned degree, int W) {
  if (degree < 1) throw ParameterError("lubin_tate_series: degree must be >= 1");
  if (u % p == 0) throw DomainError("lubin_tate_series: u must be a p-adic unit");
  const mpz_class mod = nt::ipow(p, W);
  LubinTateSeries s;
  s.u = u;
  s.p = p;
  s.degree = degree;
  s.coeffs.assign(degree + 1, 0);
  s.precision.assign(degree + 1, W);
  s.coeffs[1] = u % mod;
  if (s.coeffs[1] < 0) s.coeffs[1] += mod;
  // pw[i][k] = [X^k] P^i for i = 1..p, filled as coefficients become known.
  std::vector<Series> pw(p + 1, Series(degree + 1));
  pw[1][1] = s.coeffs[1];
  std::vector<mpz_class> ppow(W + 1);
  ppow[0] = 1;
  for (int k = 1; k <= W; ++k) ppow[k] = ppow[k - 1] * p;
  long prefix_min = W;  // min precision of c_1..c_{k-1}
  for (unsigned k = 2; k <= degree; ++k) {
    for (unsigned i = 2; i <= p; ++i) {
      mpz_class acc = 0;
      for (unsigned l = 1; l + 1 <= k; ++l)
        if (s.coeffs[l] != 0 && pw[i - 1][k - l] != 0)
          mpz_addmul(acc.get_mpz_t(), s.coeffs[l].get_mpz_t(),
                     pw[i - 1][k - l].get_mpz_t());
      mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
      pw[i][k] = acc;
    }
    // c_k (p - p^k) = sum_{a>=1} c_j C(j,a) p^(j-a) - [X^k] P^p, j = k - a(p-1)
    mpz_class num = -pw[p][k];
    long num_prec = std::min<long>(W, prefix_min + 1);
    for (unsigned a = 1;; ++a) {
      const long j = long(k) - long(a) * long(p - 1);
      if (j < long(a)) break;
      const long sh = j - long(a);
      if (sh >= W) continue;
      num_prec = std::min(num_prec, s.precision[j] + sh);
      if (s.coeffs[j] == 0) continue;
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), j, a);
      num += s.coeffs[j] * b * ppow[sh];
    }
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    if (!mpz_divisible_ui_p(num.get_mpz_t(), p))
      throw InternalError("lubin_tate_series: numerator not divisible by p");
    num /= p;
    // divide by 1 - p^(k-1)
    mpz_class den = 1;
    if (long(k) - 1 < W) den -= ppow[k - 1];
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    const long prec = std::max<long>(0, num_prec - 1);
    const mpz_class& pm = ppow[std::min<long>(prec, W)];
    s.coeffs[k] = num * inv % pm;
    s.precision[k] = prec;
    prefix_min = std::min(prefix_min, prec);
    pw[1][k] = s.coeffs[k];
  }
  const unsigned check = std::min(degree, 24u);
  SDNB_CHECK(series_commutes(s, check), "[u]_f does not commute with f");
  return s;
}

bool series_commutes(const LubinTateSeries& s, unsigned degree) {
  degree = std::min(degree, s.degree);
  const unsigned p = s.p;
  long w = -1;
  for (unsigned k = 1; k <= degree; ++k)
    if (w < 0 || s.precision[k] < w) w = s.precision[k];
  if (w <= 0) return true;
  const mpz_class mod = nt::ipow(p, w);
  const std::size_t len = degree + 1;
  Series P(s.coeffs.begin(), s.coeffs.begin() + len);
  reduce(P, mod);
  // f(P) = P^p + pP
  Series Pp = P;
  for (unsigned i = 1; i < p; ++i) Pp = mul_trunc(Pp, P, len, mod);
  Series rhs(len);
  for (std::size_t k = 0; k < len; ++k) rhs[k] = Pp[k] + P[k] * p;
  reduce(rhs, mod);
  // P(f(X)) = sum_j c_j f^j
  Series f(len);
  if (p < len) f[p] = 1;
  if (1 < len) f[1] = p;
  Series fj = f;
  Series lhs(len);
  for (unsigned j = 1; j < len; ++j) {
    for (std::size_t k = 0; k < len; ++k) lhs[k] += P[j] * fj[k];
    fj = mul_trunc(fj, f, len, mod);
  }
  reduce(lhs, mod);
  Series u{s.u};
  reduce(u, mod);
  return lhs == rhs && P[1] == u[0];
}

LocalElem evaluate(const LubinTateSeries& s, const LocalElem& x) {
  const RingPtr& r = x.ring();
  auto coeff = [&](unsigned k) {
    return LocalElem::from_mpz(r, s.coeffs[k]).with_precision(s.precision[k]);
  };
  LocalElem acc = coeff(s.degree);
  for (unsigned k = s.degree; k-- > 1;) acc = acc * x + coeff(k);
  return acc * x;
}

LocalElem LubinTateData::conjugate(unsigned j) const {
  return evaluate(gamma_series.at(j), alpha());
}

LubinTateData make_lubin_tate(const LocalBase& base) {
  if (base.f != 1)
    throw ParameterError("Lubin-Tate data needs K = Q_p (unramified degree 1)");
  const unsigned p = base.p;
  LubinTateData d;
  d.base = base;
  d.f_poly.assign(p + 1, 0);
  d.f_poly[1] = p;
  d.f_poly[p] = 1;
  // g = (X^p + pX)^(p-1) + p
  std::vector<mpz_class> g{1};
  for (unsigned i = 0; i + 1 < p; ++i) {
    std::vector<mpz_class> h(g.size() + p, 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      h[k + p] += g[k];
      h[k + 1] += g[k] * p;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    g = std::move(h);
  }
  g[0] += p;
  d.g_poly = g;
  d.ring = LocalRing::make(p, 1, g, base.precision);
  const unsigned e = p * (p - 1);
  d.series_degree = unsigned(base.precision) * e;
  const int extra = int(std::ceil(std::log(double(d.series_degree)) / std::log(double(p)))) + 2;
  d.work_precision = base.precision + extra;
  d.u0 = 1 + p;
  const mpz_class p2 = mpz_class(p) * p;
  mpz_class u = 1;
  for (unsigned j = 0; j < p; ++j) {
    d.gamma_series.push_back(lubin_tate_series(u, p, d.series_degree, d.work_precision));
    if (d.gamma_series.back().min_precision() < base.precision)
      throw PrecisionError("Lubin-Tate series lost too many digits; raise the precision");
    u = u * d.u0 % p2;
  }
  return d;
}

LocalExtension build_wild(const LubinTateData& ltd) {
  const LocalBase& base = ltd.base;
  const unsigned p = base.p;
  LocalExtension L;
  L.base = base;
  L.kind = ExtKind::Wild;
  L.generator_name = "alpha";
  L.degree = p;
  L.e = p;
  L.f_rel = 1;
  // Hilbert: (|G_0| - 1) + (|G_1| - 1) with G_2 trivial.
  L.v_D = 2 * long(p - 1);
  L.v_A = -L.v_D / 2;
  L.ring = ltd.ring;
  L.valuation_scale = p - 1;
  L.group_ = grpalg::AbelianGroup::cyclic(p);
  const LocalElem y = LocalElem::y(L.ring);
  for (unsigned j = 0; j < p; ++j)
    L.autos.emplace_back(L.ring, L.ring, y, ltd.conjugate(j));
  const ff::FqField Fp = ff::make_field(p, 1);
  const LocalElem omega = teichmuller(L.ring, ff::mult_generator(Fp));
  L.fixers.emplace_back(L.ring, L.ring, y, omega * ltd.alpha());
  L.matrix_trace_index = p - 1;
  return L;
}

}  // namespace sdnb::padic
