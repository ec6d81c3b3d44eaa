#include "sdnb/cert/certificate.hpp"

#include <algorithm>

#include "sdnb/grpalg/group.hpp"
#include "sdnb/padic/lubin_tate.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::cert {

using padic::LocalElem;
using padic::LocalExtension;

namespace {

json mpz_list(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& c : v) {
    if (c.fits_slong_p()) a.push_back(c.get_si());
    else a.push_back(c.get_str());
  }
  return a;
}

template <class T>
T need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedError(std::string("certificate: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw MalformedError(std::string("certificate: field '") + key + "' has the wrong type");
  }
}

const json& need_obj(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedError(std::string("certificate: missing field '") + key + "'");
  return j.at(key);
}

std::vector<mpz_class> mpz_from(const json& a) {
  if (!a.is_array()) throw MalformedError("certificate: expected an integer list");
  std::vector<mpz_class> out;
  for (const auto& x : a) {
    if (x.is_number_integer()) out.emplace_back(x.get<long>());
    else if (x.is_string()) {
      mpz_class v;
      if (v.set_str(x.get<std::string>(), 10) != 0)
        throw MalformedError("certificate: bad integer string");
      out.push_back(v);
    } else {
      throw MalformedError("certificate: expected an integer list");
    }
  }
  return out;
}

json gram_local_json(const local::GramReportLocal& g) {
  json entries = json::array();
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    const auto& e = g.entries[i];
    entries.push_back({{"index", i}, {"ok", e.ok}, {"deviation", e.deviation},
                       {"precision", e.precision}});
  }
  return {{"pass", g.pass}, {"in_field", g.in_field}, {"required", g.required},
          {"margin", g.margin}, {"worst_deviation", g.worst_deviation},
          {"entries", entries}};
}

json extension_json(const LocalExtension& L) {
  json j = {{"kind", padic::to_string(L.kind)},
            {"description", L.describe()},
            {"degree", L.degree},
            {"e", L.e},
            {"f_rel", L.f_rel},
            {"v_D", L.v_D}};
  if (L.v_A) j["v_A"] = *L.v_A;
  j["unram_modulus"] = mpz_list(L.ring->unram_modulus());
  j["eisenstein"] = mpz_list(L.ring->eisenstein());
  return j;
}

json params_json(const LocalParams& p) {
  json j = {{"kind", p.kind}, {"p", p.p}, {"f", p.f}};
  if (p.kind == "compose") {
    j["unram_d"] = p.unram_d;
    j["tame_d"] = p.tame_d;
    j["trace_diag"] = p.trace_diag;
  } else if (p.kind != "wild") {
    j["d"] = p.d;
  }
  j["precision"] = p.precision;
  j["guard"] = p.guard;
  return j;
}

json variant_json(const local::SelfDualCertificateLocal& c) {
  return {{"route", c.route},
          {"generator", generator_json(c.generator)},
          {"verification",
           {{"gram", gram_local_json(c.gram)},
            {"valuation", c.valuation},
            {"expected_valuation", c.expected_valuation},
            {"pass", c.pass()}}},
          {"conventions", c.conventions}};
}

LocalParams params_from(const json& j) {
  LocalParams p;
  p.kind = need<std::string>(j, "kind");
  p.p = need<unsigned>(j, "p");
  p.f = need<unsigned>(j, "f");
  if (p.kind == "compose") {
    p.unram_d = need<unsigned>(j, "unram_d");
    p.tame_d = need<unsigned>(j, "tame_d");
    p.trace_diag = need<bool>(j, "trace_diag");
  } else if (p.kind == "tame" || p.kind == "unram") {
    p.d = need<unsigned>(j, "d");
  } else if (p.kind != "wild") {
    throw MalformedError("certificate: unknown local kind '" + p.kind + "'");
  }
  p.precision = need<int>(j, "precision");
  p.guard = need<int>(j, "guard");
  return p;
}

VerifyResult verify_ff(const json& doc) {
  const json& par = need_obj(doc, "parameters");
  const unsigned p = need<unsigned>(par, "p");
  const unsigned m = need<unsigned>(par, "m");
  const unsigned n = need<unsigned>(par, "n");
  const json& fld = need_obj(doc, "field");
  const auto mod = mpz_from(need_obj(fld, "universe_modulus"));
  if (!nt::is_prime(p) || p >= (1u << 16)) throw MalformedError("certificate: bad p");
  if (m == 0 || n == 0) throw MalformedError("certificate: bad degrees");
  ff::CoeffVec mc;
  for (const auto& c : mod) {
    if (c < 0 || c >= p) throw MalformedError("certificate: modulus coefficient out of range");
    mc.push_back(ff::Coeff(c.get_ui()));
  }
  ff::FqField U;
  try {
    U = ff::FqField::from_modulus(p, mc);
  } catch (const Error& e) {
    throw MalformedError(std::string("certificate: bad universe modulus: ") + e.what());
  }
  if (U.degree() % (m * n) != 0)
    throw MalformedError("certificate: universe degree not divisible by m*n");
  const auto gen = mpz_from(need_obj(doc, "generator"));
  if (gen.size() != U.degree()) throw MalformedError("certificate: generator length mismatch");
  ff::CoeffVec gc;
  for (const auto& c : gen) {
    if (c < 0 || c >= p) throw MalformedError("certificate: generator coefficient out of range");
    gc.push_back(ff::Coeff(c.get_ui()));
  }
  const ff::FqElem x = U.element(gc);
  const grpalg::FfExtension ext(U, m, n);
  const auto gram = sdnb_ff::verify_gram_ff(x, ext);
  VerifyResult r;
  const bool normal = gram.in_field && grpalg::is_normal(x, ext);
  r.pass = gram.pass && normal;
  if (!gram.in_field) r.messages.push_back("generator does not lie in F_{q^n}");
  if (!gram.failing.empty()) {
    std::string idx;
    for (auto i : gram.failing) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    r.messages.push_back("Gram entries off the identity at indices " + idx);
  }
  if (gram.in_field && !normal) r.messages.push_back("generator is not normal");
  if (r.pass) r.messages.push_back("Gram matrix is the identity; generator is normal");
  return r;
}

bool same_list(const json& a, const std::vector<mpz_class>& b) {
  return mpz_from(a) == b;
}

VerifyResult verify_local(const json& doc) {
  const LocalParams par = params_from(need_obj(doc, "parameters"));
  std::vector<const json*> variants;
  if (doc.contains("variants")) {
    const json& v = doc.at("variants");
    if (!v.is_array() || v.empty()) throw MalformedError("certificate: bad variants list");
    for (const auto& x : v) variants.push_back(&x);
  } else {
    variants.push_back(&doc);
  }
  const json& extj = need_obj(doc, "extension");
  VerifyResult r;
  r.pass = true;
  for (const json* vj : variants) {
    const std::string route = need<std::string>(*vj, "route");
    const LocalExtension L = rebuild_extension(par, route);
    if (!same_list(need_obj(extj, "unram_modulus"), L.ring->unram_modulus()) ||
        !same_list(need_obj(extj, "eisenstein"), L.ring->eisenstein()))
      throw MalformedError("certificate: extension moduli do not match the parameters");
    const LocalElem x = generator_from_json(need_obj(*vj, "generator"), L.ring);
    const auto gram = local::verify_gram_local(x, L);
    bool ok = gram.pass;
    std::string msg = route + ": ";
    if (!gram.in_field) {
      msg += "generator does not lie in L";
      ok = false;
    } else {
      long v = 0;
      try {
        v = L.valuation(x);
      } catch (const DomainError&) {
        ok = false;
      }
      const long want = L.v_A.value_or(0);
      if (v != want) {
        ok = false;
        msg += "valuation " + std::to_string(v) + " != " + std::to_string(want) + "; ";
      }
      msg += gram.pass ? "Gram = identity mod p^" + std::to_string(gram.required)
                       : "Gram check failed (worst deviation p^" +
                             std::to_string(gram.worst_deviation) + ")";
    }
    r.pass = r.pass && ok;
    r.messages.push_back(msg);
  }
  return r;
}

}  // namespace

padic::LocalBase LocalParams::base() const {
  return padic::LocalBase::make(p, f, precision, guard);
}

json generator_json(const LocalElem& x) {
  json digits = json::array();
  for (const auto& d : x.digits()) digits.push_back(d);
  return {{"shift", x.shift()}, {"precision", x.abs_precision()}, {"digits", digits}};
}

LocalElem generator_from_json(const json& j, const padic::RingPtr& ring) {
  const long shift = need<long>(j, "shift");
  const long prec = need<long>(j, "precision");
  const json& dj = need_obj(j, "digits");
  if (!dj.is_array() || dj.size() != ring->dim())
    throw MalformedError("certificate: generator has the wrong number of coordinates");
  const long n = prec - shift;
  if (n < 0 || n > ring->precision())
    throw MalformedError("certificate: generator precision out of range");
  std::vector<mpz_class> c;
  for (const auto& row : dj) {
    if (!row.is_array()) throw MalformedError("certificate: digits must be lists");
    if (long(row.size()) != n && !(row.empty() && n == 0))
      throw MalformedError("certificate: digit list length differs from the precision");
    mpz_class v = 0, pk = 1;
    for (const auto& d : row) {
      if (!d.is_number_unsigned() && !d.is_number_integer())
        throw MalformedError("certificate: digits must be integers");
      const long dv = d.get<long>();
      if (dv < 0 || dv >= long(ring->p())) throw MalformedError("certificate: digit out of range");
      v += pk * dv;
      pk *= ring->p();
    }
    c.push_back(v);
  }
  return LocalElem(ring, std::move(c), shift, prec);
}

json to_json(const sdnb_ff::SelfDualCertificateFF& c) {
  json gen = json::array();
  for (auto v : c.generator.coeffs()) gen.push_back(v);
  json mod = json::array();
  for (auto v : c.universe.modulus()) mod.push_back(v);
  json entries = json::array();
  for (std::size_t i = 0; i < c.gram.values.size(); ++i) {
    const bool ok = std::find(c.gram.failing.begin(), c.gram.failing.end(), i) ==
                    c.gram.failing.end();
    entries.push_back({{"index", i}, {"ok", ok}});
  }
  return {{"schema_version", kSchemaVersion},
          {"mode", "ff"},
          {"parameters", {{"p", c.p}, {"m", c.m}, {"n", c.n}}},
          {"field",
           {{"base_degree", c.m},
            {"extension_degree", c.n},
            {"universe_degree", c.universe.degree()},
            {"universe_modulus", mod}}},
          {"generator", gen},
          {"verification",
           {{"gram", {{"pass", c.gram.pass}, {"in_field", c.gram.in_field}, {"entries", entries}}},
            {"normal", c.normal},
            {"pass", c.gram.pass && c.normal}}},
          {"route", c.route},
          {"conventions", c.conventions}};
}

json to_json(const local::SelfDualCertificateLocal& c, const LocalParams& params) {
  json v = variant_json(c);
  return {{"schema_version", kSchemaVersion},
          {"mode", "local"},
          {"parameters", params_json(params)},
          {"extension", extension_json(c.ext)},
          {"route", v["route"]},
          {"generator", v["generator"]},
          {"verification", v["verification"]},
          {"conventions", v["conventions"]}};
}

json to_json(const local::WildResult& w, const LocalParams& params) {
  return {{"schema_version", kSchemaVersion},
          {"mode", "local"},
          {"parameters", params_json(params)},
          {"extension", extension_json(w.direct.ext)},
          {"variants", json::array({variant_json(w.direct), variant_json(w.traced)})},
          {"variants_equal", w.variants_equal},
          {"verification", {{"pass", w.direct.pass() && w.traced.pass()}}}};
}

json run_ff(unsigned p, unsigned m, unsigned n) {
  return to_json(sdnb_ff::construct_selfdual(p, m, n));
}

json run_local(const LocalParams& par) {
  const padic::LocalBase base = par.base();
  if (par.kind == "tame") return to_json(local::tame_generator(base, par.d), par);
  if (par.kind == "unram") return to_json(local::unram_generator(base, par.d), par);
  if (par.kind == "wild") return to_json(local::wild_generator(base), par);
  if (par.kind == "compose") {
    const auto un = local::unram_generator(base, par.unram_d);
    const auto tot = local::tame_generator(base, par.tame_d);
    std::vector<std::size_t> H;
    if (par.trace_diag)
      H.push_back(grpalg::AbelianGroup({par.unram_d, par.tame_d})
                      .index({1u % par.unram_d, 1u % par.tame_d}));
    return to_json(local::compose_and_trace(un, tot, H), par);
  }
  throw ParameterError("unknown local construction '" + par.kind + "'");
}

LocalExtension rebuild_extension(const LocalParams& par, const std::string& route) {
  const padic::LocalBase base = par.base();
  if (par.kind == "tame") return padic::build_tame(base, par.d);
  if (par.kind == "unram") return padic::build_unramified(base, par.d);
  if (par.kind == "wild") {
    LocalExtension M = padic::build_wild(padic::make_lubin_tate(base));
    if (route == "wild-traced") M.matrix_trace_index = 0;
    else if (route != "wild-direct") throw MalformedError("certificate: unknown wild route");
    return M;
  }
  if (par.kind == "compose") {
    const LocalExtension C = padic::build_compositum(base, par.unram_d, par.tame_d);
    if (!par.trace_diag) return C;
    return padic::fixed_field(C, {local::diagonal_generator(C)});
  }
  throw MalformedError("certificate: unknown local kind '" + par.kind + "'");
}

VerifyResult verify(const json& doc) {
  if (!doc.is_object()) throw MalformedError("certificate: top level must be an object");
  if (need<int>(doc, "schema_version") != kSchemaVersion)
    throw MalformedError("certificate: unsupported schema version");
  const std::string mode = need<std::string>(doc, "mode");
  try {
    if (mode == "ff") return verify_ff(doc);
    if (mode == "local") return verify_local(doc);
  } catch (const MalformedError&) {
    throw;
  } catch (const ParameterError& e) {
    throw MalformedError(std::string("certificate: ") + e.what());
  } catch (const ExistenceError& e) {
    throw MalformedError(std::string("certificate: ") + e.what());
  }
  throw MalformedError("certificate: unknown mode '" + mode + "'");
}

VerifyResult verify_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedError(std::string("certificate: not valid JSON: ") + e.what());
  }
  return verify(doc);
}

bool document_passes(const json& doc) {
  return doc.contains("verification") && doc["verification"].value("pass", false);
}

}  // namespace sdnb::cert
