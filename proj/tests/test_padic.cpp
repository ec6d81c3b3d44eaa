#include "doctest.h"

#include "sdnb/error.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/padic/automorphism.hpp"
#include "sdnb/padic/extension.hpp"
#include "sdnb/padic/lubin_tate.hpp"
#include "sdnb/util/numtheory.hpp"

using namespace sdnb;
using namespace sdnb::padic;

namespace {

LocalElem I(const RingPtr& r, long v) { return LocalElem::from_int(r, v); }

bool same(const LocalElem& a, const LocalElem& b) { return (a - b).is_zero(); }

}  // namespace

TEST_CASE("truncated arithmetic in Z_p") {
  const auto Z5 = LocalRing::unramified(5, 1, 12);
  const auto a = I(Z5, 7), b = I(Z5, -3);
  CHECK(same(a * b, I(Z5, -21)));
  CHECK(same(a + b, I(Z5, 4)));
  CHECK(same(a.unit_inverse() * a, LocalElem::one(Z5)));
  const auto p = I(Z5, 5);
  CHECK(p.valuation() == 1);
  CHECK(p.inverse().valuation() == -1);
  CHECK(same(p * p.inverse(), LocalElem::one(Z5)));
  CHECK(I(Z5, 0).is_zero());
  CHECK_THROWS_AS(I(Z5, 0).valuation(), PrecisionError);
  CHECK_THROWS_AS(p.unit_inverse(), NonUnitError);
}

TEST_CASE("precision bookkeeping") {
  const auto Z3 = LocalRing::unramified(3, 1, 20);
  const auto x = I(Z3, 2).with_precision(5);
  CHECK(x.abs_precision() == 5);
  CHECK((x + I(Z3, 1)).abs_precision() == 5);
  const auto y = I(Z3, 9);
  CHECK(y.shift() == 2);
  CHECK(y.rel_precision() == 20);
  CHECK((x * y).abs_precision() == 7);
  CHECK(y.mul_ppow(-2).shift() == 0);
  CHECK(y.mul_ppow(-2).abs_precision() == 20);
  const auto z = I(Z3, 9).with_precision(6);
  CHECK(z.mul_ppow(-2).abs_precision() == 4);
  const auto d = I(Z3, -1).digits();
  REQUIRE(d.size() == 1);
  CHECK(d[0].size() == 20);
  CHECK(d[0][0] == 2);
  CHECK(d[0][19] == 2);
}

TEST_CASE("Teichmuller lifts") {
  const auto Z3 = LocalRing::unramified(3, 1, 20);
  CHECK(same(teichmuller(Z3, Z3->residue_field().one()), LocalElem::one(Z3)));
  CHECK(same(teichmuller(Z3, Z3->residue_field().from_int(2)), I(Z3, -1)));
  const auto Z7 = LocalRing::unramified(7, 1, 20);
  const auto w = teichmuller(Z7, Z7->residue_field().from_int(2));
  CHECK(same(w.pow(6ul), LocalElem::one(Z7)));
  CHECK(w.residue() == Z7->residue_field().from_int(2));
  const auto O9 = LocalRing::unramified(3, 2, 16);
  const auto z = teichmuller(O9, O9->residue_field().gen());
  CHECK(same(z.pow(8ul), LocalElem::one(O9)));
}

TEST_CASE("Hensel lifting") {
  const auto Z3 = LocalRing::unramified(3, 1, 20);
  const LocalPoly h{I(Z3, -4), I(Z3, 0), I(Z3, 1)};
  CHECK(same(hensel_root(h, LocalElem::one(Z3)), I(Z3, -2)));
  const LocalPoly lin{I(Z3, -17), I(Z3, 1)};
  CHECK(same(hensel_root(lin, I(Z3, 5)), I(Z3, 17)));
  const LocalPoly bad{I(Z3, -2), I(Z3, 0), I(Z3, 1)};
  CHECK_THROWS_AS(hensel_root(bad, LocalElem::one(Z3)), DomainError);
  CHECK(same(eval(derivative(h), I(Z3, 5)), I(Z3, 10)));
}

TEST_CASE("unramified rings and Frobenius") {
  const auto O9 = LocalRing::unramified(3, 2, 16);
  const auto phi = frobenius_lift(O9);
  const auto y = LocalElem::y(O9);
  CHECK(same(phi.pow(2).apply(y), y));
  CHECK_FALSE(phi.fixes(y));
  CHECK((phi.apply(y) - y.pow(3ul)).content_or_precision() >= 1);
  CHECK(phi.fixes(I(O9, 5)));
  const auto O81 = LocalRing::unramified(3, 4, 16);
  const auto emb = unramified_embedding(O9, O81);
  const auto yi = emb.apply(y);
  CHECK(same(eval(unram_modulus_poly(O81, O9), yi), LocalElem::zero(O81)));
  CHECK(same(emb.apply(y * y + I(O9, 2)), yi * yi + I(O81, 2)));
}

TEST_CASE("tame cubic over Q_7") {
  const auto L = build_tame(LocalBase::make(7, 1, 48, 8), 3);
  const auto t = LocalElem::t(L.ring);
  CHECK(L.ring->eisenstein() == std::vector<mpz_class>{7, 0, 0, 1});
  CHECK(L.v_D == 2);
  REQUIRE(L.v_A);
  CHECK(*L.v_A == -1);
  CHECK(L.e == 3);
  CHECK(L.f_rel == 1);
  CHECK(L.valuation(I(L.ring, 7)) == 3);
  CHECK(L.valuation(t) == 1);
  CHECK(L.valuation(t.inverse()) == -1);
  CHECK(same(t * t.inverse(), LocalElem::one(L.ring)));
  CHECK(same(L.trace(LocalElem::one(L.ring)), I(L.ring, 3)));
  CHECK(L.trace(t).is_zero());
  CHECK(same(matrix_norm(t), I(L.ring, -7)));
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(same(L.apply(g, t).pow(3ul), t.pow(3ul)));
  CHECK_FALSE(same(L.apply(1, t), t));
}

TEST_CASE("extension parameter checks") {
  const auto B7 = LocalBase::make(7, 1, 48, 8);
  CHECK_THROWS_AS(build_tame(B7, 2), ParameterError);
  CHECK_THROWS_AS(build_tame(LocalBase::make(3, 1, 48, 8), 3), ParameterError);
  CHECK_THROWS_AS(build_eisenstein(B7, {49, 7, 1}), ParameterError);
  CHECK_THROWS_AS(build_eisenstein(B7, {7, 1, 1}), ParameterError);
  CHECK_THROWS_AS(LocalBase::make(2), ParameterError);
  CHECK_THROWS_AS(LocalBase::make(7, 1, 8, 8), ParameterError);
  const auto E = build_eisenstein(B7, {7, 14, 1});
  CHECK(E.e == 2);
  CHECK(E.v_D == 1);
  CHECK_FALSE(E.v_A);
}

TEST_CASE("unramified extension") {
  const auto U = build_unramified(LocalBase::make(3, 1, 48, 8), 5);
  CHECK(U.v_D == 0);
  REQUIRE(U.v_A);
  CHECK(*U.v_A == 0);
  CHECK(same(U.trace(LocalElem::one(U.ring)), I(U.ring, 5)));
  const auto y = LocalElem::y(U.ring);
  CHECK(same(U.trace(y), U.galois_trace(y)));
}

TEST_CASE("compositum and fixed fields") {
  const auto C = build_compositum(LocalBase::make(7, 1, 32, 8), 3, 3);
  CHECK(C.degree == 9);
  CHECK(C.group()->order() == 9);
  const auto G = C.group();
  std::vector<std::size_t> all(G->order());
  for (std::size_t g = 0; g < all.size(); ++g) all[g] = g;
  CHECK_THROWS_AS(fixed_field(C, all), ParameterError);
  CHECK_THROWS_AS(fixed_field(C, {G->index({0, 1})}), ParameterError);
  const auto L = fixed_field(C, {G->index({1, 1})});
  CHECK(L.degree == 3);
  CHECK(L.e == 3);
}

TEST_CASE("Lubin-Tate series") {
  const unsigned p = 5;
  const int W = 20;
  const auto one = lubin_tate_series(1, p, 15, W);
  CHECK(one.coeffs[1] == 1);
  for (unsigned k = 2; k <= 15; ++k) CHECK(one.coeffs[k] == 0);
  CHECK_THROWS_AS(lubin_tate_series(p, p, 5, W), DomainError);

  const auto Zp = LocalRing::unramified(p, 1, W);
  const mpz_class w = teichmuller(Zp, Zp->residue_field().from_int(2)).coords()[0];
  const auto sw = lubin_tate_series(w, p, 15, W);
  CHECK(series_commutes(sw, 15));
  CHECK(sw.coeffs[1] == w);
  for (unsigned k = 2; k <= 15; ++k) {
    const mpz_class m = nt::ipow(p, sw.precision[k]);
    CHECK(sw.coeffs[k] % m == 0);
  }
  const auto s6 = lubin_tate_series(6, p, 15, W);
  CHECK(series_commutes(s6, 15));
  CHECK(s6.min_precision() > 0);
}

TEST_CASE("Lubin-Tate data for Q_3") {
  const auto ltd = make_lubin_tate(LocalBase::make(3, 1, 24, 6));
  CHECK(ltd.f_poly == std::vector<mpz_class>{0, 3, 0, 1});
  CHECK(ltd.g_poly.size() == 7);
  CHECK(ltd.u0 == 4);
  const auto a = ltd.alpha();
  LocalPoly g;
  for (const auto& c : ltd.g_poly) g.push_back(LocalElem::from_mpz(ltd.ring, c));
  CHECK(eval(g, a).is_zero());
  CHECK(same(ltd.conjugate(0), a));
  for (unsigned j = 0; j < 3; ++j) CHECK(eval(g, ltd.conjugate(j)).is_zero());
  CHECK_THROWS_AS(make_lubin_tate(LocalBase::make(3, 2, 24, 6)), ParameterError);
}

TEST_CASE("wild extension bookkeeping") {
  for (unsigned p : {3u, 5u}) {
    CAPTURE(p);
    const auto ltd = make_lubin_tate(LocalBase::make(p, 1, 24, 6));
    const auto M = build_wild(ltd);
    CHECK(M.degree == p);
    CHECK(M.e == p);
    CHECK(M.v_D == 2 * long(p - 1));
    REQUIRE(M.v_A);
    CHECK(*M.v_A == 1 - long(p));
    const auto a = ltd.alpha();
    const auto x = a.pow((unsigned long)(p - 1)).mul_ppow(-1);
    CHECK(M.contains(x));
    CHECK_FALSE(M.contains(a));
    CHECK(M.valuation(x) == 1 - long(p));
    const auto y = x * M.apply(1, x);
    CHECK(same(M.trace(y), M.galois_trace(y)));

    // N(alpha) over the Teichmuller part: the product of the (p-1)-th roots
    // of unity is -1, so the norm is -alpha^(p-1).
    const auto om = teichmuller(M.ring, ff::mult_generator(ff::make_field(p, 1)));
    LocalElem n = LocalElem::one(M.ring), wk = LocalElem::one(M.ring);
    for (unsigned k = 0; k + 1 < p; ++k) {
      n = n * (wk * a);
      wk = wk * om;
    }
    CHECK(same(n, -a.pow((unsigned long)(p - 1))));
  }
}
