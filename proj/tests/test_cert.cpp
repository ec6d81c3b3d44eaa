#include "doctest.h"

#include "sdnb/cert/certificate.hpp"

using namespace sdnb;
using namespace sdnb::cert;

namespace {

LocalParams params(std::string kind, unsigned p, unsigned d) {
  LocalParams par;
  par.kind = std::move(kind);
  par.p = p;
  par.d = d;
  par.precision = 32;
  return par;
}

}  // namespace

TEST_CASE("finite-field documents round-trip") {
  const json doc = run_ff(3, 1, 5);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["mode"] == "ff");
  CHECK(document_passes(doc));
  CHECK(verify(doc).pass);
  CHECK(verify_text(doc.dump()).pass);
  CHECK(run_ff(3, 1, 5).dump() == doc.dump());

  json bad = doc;
  bad["generator"][0] = (bad["generator"][0].get<int>() + 1) % 3;
  CHECK_FALSE(verify(bad).pass);
}

TEST_CASE("local documents round-trip") {
  const json tame = run_local(params("tame", 7, 3));
  CHECK(document_passes(tame));
  CHECK(verify(tame).pass);
  CHECK(tame["extension"]["eisenstein"] == json::array({7, 0, 0, 1}));

  json bad = tame;
  auto& d0 = bad["generator"]["digits"][0][0];
  d0 = (d0.get<int>() + 1) % 7;
  CHECK_FALSE(verify(bad).pass);

  const json wild = run_local(params("wild", 3, 0));
  REQUIRE(wild.contains("variants"));
  CHECK(wild["variants"].size() == 2);
  CHECK(verify(wild).pass);

  LocalParams c = params("compose", 7, 0);
  c.unram_d = 3;
  c.tame_d = 3;
  c.trace_diag = true;
  const json comp = run_local(c);
  CHECK(comp["route"] == "trace-down");
  CHECK(verify(comp).pass);
}

TEST_CASE("generator serialization") {
  const auto cert = local::tame_generator(padic::LocalBase::make(7, 1, 32, 8), 3);
  const json j = generator_json(cert.generator);
  const auto back = generator_from_json(j, cert.ext.ring);
  CHECK((back - cert.generator).is_zero());
  CHECK(back.shift() == cert.generator.shift());
  CHECK(back.abs_precision() == cert.generator.abs_precision());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(verify_text("{\"schema_version\": 1"), MalformedError);
  CHECK_THROWS_AS(verify_text("[]"), MalformedError);
  CHECK_THROWS_AS(verify_text("{\"schema_version\": 2, \"mode\": \"ff\"}"), MalformedError);
  CHECK_THROWS_AS(verify_text("{\"schema_version\": 1, \"mode\": \"other\"}"), MalformedError);

  json doc = run_ff(3, 1, 3);
  doc["generator"].erase(doc["generator"].size() - 1);
  CHECK_THROWS_AS(verify(doc), MalformedError);

  json tame = run_local(params("tame", 7, 3));
  tame["extension"]["eisenstein"][0] = 14;
  CHECK_THROWS_AS(verify(tame), MalformedError);

  json digit = run_local(params("tame", 7, 3));
  digit["generator"]["digits"][1][2] = 9;
  CHECK_THROWS_AS(verify(digit), MalformedError);
}

TEST_CASE("existence errors propagate from the runners") {
  CHECK_THROWS_AS(run_ff(5, 1, 4), ExistenceError);
  CHECK_THROWS_AS(run_local(params("unram", 3, 2)), ExistenceError);
  CHECK_THROWS_AS(run_local(params("tame", 3, 3)), ParameterError);
}
