#include "doctest.h"

#include "sdnb/error.hpp"
#include "sdnb/ff/embedding.hpp"
#include "sdnb/ff/field.hpp"
#include "sdnb/ff/poly.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

using namespace sdnb;
using namespace sdnb::ff;

namespace {

// i in F_9 = F_3[Y]/(Y^2 + 1)
FqElem f9_i() { return make_field(3, 2).gen(); }

}  // namespace

TEST_CASE("number theory helpers") {
  CHECK(nt::is_prime(2));
  CHECK(nt::is_prime(97));
  CHECK_FALSE(nt::is_prime(91));
  CHECK(nt::mult_order(3, 5) == 4);
  CHECK(nt::mult_order(9, 7) == 3);
  CHECK(nt::valuation(std::uint64_t(72), 3) == 2);
  const auto f = nt::factor(std::uint64_t(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
}

TEST_CASE("lex-least moduli") {
  CHECK(make_field(3, 1).modulus() == CoeffVec{0, 1});
  CHECK(make_field(2, 2).modulus() == CoeffVec{1, 1, 1});
  CHECK(make_field(3, 2).modulus() == CoeffVec{1, 0, 1});
  CHECK(is_irreducible(3, {2, 2, 0, 1}));
  CHECK_FALSE(is_irreducible(3, {1, 0, 0, 1}));
  CHECK_THROWS_AS(FqField::from_modulus(3, {1, 0, 0, 1}), ParameterError);
}

TEST_CASE("field arithmetic") {
  const auto F = make_field(7, 3);
  const auto a = F.element({3, 1, 4});
  const auto b = F.element({0, 5, 2});
  CHECK(a * a.inverse() == F.one());
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a.pow(F.size() - 1) == F.one());
  CHECK(a.frobenius(3) == a);
  CHECK(F.lex_element(0).is_zero());
  CHECK(F.lex_element(1) == F.element({0, 0, 1}));
  CHECK(F.lex_element(7) == F.element({0, 1, 0}));
  CHECK(F.from_int(-1) == F.from_int(6));
}

TEST_CASE("relative Frobenius and trace") {
  const auto i = f9_i();
  const auto F9 = i.field();
  CHECK(i * i == F9.from_int(-1));
  CHECK(frobenius_pow(i, 1, 1) == i.scaled(2));
  CHECK(frobenius_pow(i, 0, 1) == i);
  CHECK(frobenius_pow(F9.from_int(2), 5, 1) == F9.from_int(2));
  CHECK(rel_trace(F9.one(), 1, 2) == F9.from_int(2));
  CHECK(rel_trace(i, 1, 2).is_zero());
  CHECK(rel_trace(i, 2, 1) == i);
  CHECK(rel_norm(i, 1, 2) == F9.one());
  CHECK(in_subfield(F9.from_int(2), 1));
  CHECK_FALSE(in_subfield(i, 1));
}

TEST_CASE("polynomials") {
  const auto F = make_field(5, 1);
  const auto f = FqPoly::from_fp(F, {1, 0, 1});  // X^2 + 1
  const auto g = FqPoly::from_fp(F, {4, 1});     // X - 1
  FqPoly q(F), r(F);
  divrem(f * g + g, g, q, r);
  CHECK(r.is_zero());
  CHECK(q == f + FqPoly::from_fp(F, {1}));
  CHECK(gcd(f * g, g * g) == g);
  CHECK(f.derivative() == FqPoly::from_fp(F, {0, 2}));
  CHECK(f(F.from_int(2)).is_zero());
  const FrobeniusMod fm(f);
  const auto x = FqPoly::from_fp(F, {0, 1});
  CHECK(fm.apply(x) == powmod(x, 5, f));
}

TEST_CASE("root finding") {
  const auto F9 = make_field(3, 2);
  const auto r = find_root(FqPoly::from_fp(F9, {1, 0, 1}));
  CHECK(r.coeffs() == CoeffVec{0, 1});
  CHECK_THROWS_AS(find_root(FqPoly::from_fp(make_field(3, 1), {1, 0, 1})), NotFoundError);

  const auto F27 = make_field(3, 3);
  const auto eta = find_root(FqPoly::from_fp(F27, {1, 0, 2, 1}));  // X^3 - X^2 + 1
  CHECK((eta.pow(std::uint64_t(3)) - eta * eta + F27.one()).is_zero());
  const auto all = find_roots(FqPoly::from_fp(F27, {1, 0, 2, 1}));
  CHECK(all.size() == 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("square roots") {
  const auto F7 = make_field(7, 1);
  CHECK(sqrt_ff(F7.one()) == F7.one());
  CHECK(sqrt_ff(F7.from_int(2)) == F7.from_int(3));
  CHECK_FALSE(is_square(make_field(3, 1).from_int(-1)));
  CHECK(is_square(make_field(3, 2).from_int(-1)));
  CHECK_THROWS_AS(sqrt_ff(F7.from_int(3)), DomainError);
  const auto F = make_field(11, 3);
  for (unsigned k = 1; k < 40; ++k) {
    const auto a = F.lex_element(k * 31);
    const auto s = sqrt_ff(a * a);
    CHECK(s * s == a * a);
  }
}

TEST_CASE("multiplicative generators and roots of unity") {
  CHECK(mult_generator(make_field(7, 1)) == make_field(7, 1).from_int(3));
  CHECK(mult_generator(make_field(2, 1)).is_one());
  const auto F9 = make_field(3, 2);
  const auto g = mult_generator(F9);
  CHECK(element_order(g, 2) == 8);
  for (mpz_class k = 1; k < F9.size(); ++k) {
    const auto x = F9.lex_element(k);
    if (x < g) CHECK(element_order(x, 2) != 8);
  }
  const auto F = make_field(3, 4);
  const auto z = primitive_root_of_unity(F, 5, 4);
  CHECK(element_order(z, 4) == 5);
  const auto roots = binomial_roots(F.one(), 5, 4);
  CHECK(roots.size() == 5);
}

TEST_CASE("subfield embedding") {
  const auto small = make_field(3, 2);
  const auto big = make_field(3, 6);
  const SubfieldEmbedding e(small, big);
  const auto i = e.embed(small.gen());
  CHECK(i * i == big.from_int(-1));
  for (mpz_class k = 0; k < small.size(); ++k) {
    const auto a = small.lex_element(k);
    CHECK(e.restrict(e.embed(a)) == a);
  }
  CHECK_THROWS_AS(e.restrict(big.gen()), DomainError);
}
