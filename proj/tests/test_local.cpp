#include "doctest.h"

#include "sdnb/error.hpp"
#include "sdnb/local/generators.hpp"
#include "sdnb/local/verify.hpp"

using namespace sdnb;
using namespace sdnb::padic;
using namespace sdnb::local;

namespace {

LocalBase B(unsigned p, unsigned f = 1, int N = 48) { return LocalBase::make(p, f, N, 8); }

// Digits of `lo` agree with those of `hi` wherever `lo` knows them.
bool digits_agree(const LocalElem& lo, const LocalElem& hi) {
  if (lo.shift() != hi.shift()) return false;
  const auto a = lo.digits(), b = hi.digits();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < a[k].size(); ++i)
      if (i >= b[k].size() || a[k][i] != b[k][i]) return false;
  return true;
}

}  // namespace

TEST_CASE("tame generators") {
  const auto c = tame_generator(B(7), 3);
  CHECK(c.pass());
  CHECK(c.route == "tame");
  CHECK(c.valuation == -1);
  CHECK(c.gram.entries.size() == 3);
  CHECK(c.gram.required == 40);
  CHECK(c.gram.margin >= 0);
  const auto c5 = tame_generator(B(11), 5);
  CHECK(c5.pass());
  CHECK(c5.valuation == -2);
}

TEST_CASE("tame generators are stable under a precision increase") {
  for (auto [p, d] : {std::pair{7u, 3u}, std::pair{11u, 5u}}) {
    const auto lo = tame_generator(B(p, 1, 48), d);
    const auto hi = tame_generator(B(p, 1, 96), d);
    CHECK(hi.pass());
    CHECK(digits_agree(lo.generator, hi.generator));
  }
}

TEST_CASE("tame parameter gates") {
  CHECK_THROWS_AS(tame_generator(B(7), 2), ExistenceError);
  CHECK_THROWS_AS(tame_generator(B(3), 3), ParameterError);
}

TEST_CASE("unramified generators") {
  const auto c5 = unram_generator(B(3), 5);
  CHECK(c5.pass());
  CHECK(c5.route == "unram-p'(5^1)");
  CHECK(c5.valuation == 0);
  const auto c3 = unram_generator(B(3), 3);
  CHECK(c3.pass());
  CHECK(c3.route == "unram-p(3^1)");
  const auto c1 = unram_generator(B(3), 1);
  CHECK((c1.generator - LocalElem::one(c1.ext.ring)).is_zero());
  CHECK(unram_generator(B(3, 2, 32), 3).pass());
  CHECK(unram_generator(B(3), 15).pass());
  CHECK_THROWS_AS(unram_generator(B(3), 4), ExistenceError);
}

TEST_CASE("wild generators") {
  const auto w = wild_generator(B(3));
  CHECK(w.direct.pass());
  CHECK(w.traced.pass());
  CHECK(w.direct.route == "wild-direct");
  CHECK(w.traced.route == "wild-traced");
  CHECK(w.direct.valuation == -2);
  CHECK(w.direct.ext.v_D == 4);
  CHECK_THROWS_AS(wild_generator(B(3, 2)), ParameterError);
}

TEST_CASE("compositum and trace-down") {
  const auto b = B(7);
  const auto un = unram_generator(b, 3);
  const auto tot = tame_generator(b, 3);
  const auto prod = compose_and_trace(un, tot, {});
  CHECK(prod.pass());
  CHECK(prod.route == "compositum");
  CHECK(prod.gram.entries.size() == 9);
  CHECK(prod.valuation == -1);
  const auto C = build_compositum(b, 3, 3);
  const auto diag = compose_and_trace(un, tot, {diagonal_generator(C)});
  CHECK(diag.pass());
  CHECK(diag.route == "trace-down");
  CHECK(diag.gram.entries.size() == 3);
  CHECK(diag.ext.e == 3);
  const auto G = C.group();
  CHECK_THROWS_AS(compose_and_trace(un, tot, {G->index({1, 0}), G->index({0, 1})}),
                  ParameterError);
  CHECK_THROWS_AS(compose_and_trace(un, tot, {G->index({0, 1})}), ParameterError);
}

TEST_CASE("local Gram verifier") {
  const auto L = build_tame(B(7), 3);
  const auto one = LocalElem::one(L.ring);
  const auto r = verify_gram_local(one, L);
  CHECK_FALSE(r.pass);
  CHECK(r.entries[0].deviation == 0);
  const auto good = tame_generator(B(7), 3);
  const auto scaled = good.generator.mul_int(7);
  CHECK(L.valuation(scaled) == 2);
  CHECK_FALSE(verify_gram_local(scaled, L).pass);
}

TEST_CASE("precision exhaustion") {
  CHECK_THROWS_AS(tame_generator(LocalBase::make(11, 1, 4, 0), 5), PrecisionError);
}
