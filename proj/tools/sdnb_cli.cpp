#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdnb/cert/certificate.hpp"
#include "sdnb/ff/embedding.hpp"

namespace {

using sdnb::cert::json;

enum Exit { kOk = 0, kVerifyFail = 1, kParams = 2, kPrecision = 3 };

int emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kParams;
    }
    f << text;
  }
  if (!sdnb::cert::document_passes(doc)) {
    std::cerr << "verification failed\n";
    return kVerifyFail;
  }
  return kOk;
}

// Runs fn and maps library errors onto the exit-code contract.
template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sdnb::PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what()
              << "\n";
    return kPrecision;
  } catch (const sdnb::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParams;
  } catch (const sdnb::ExistenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParams;
  } catch (const sdnb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParams;
  } catch (const sdnb::Error& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kVerifyFail;
  }
}

int default_precision() {
  if (const char* s = std::getenv("SDNB_PREC")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 48;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual normal bases: construction and verification"};
  app.require_subcommand(1);

  std::string out;
  unsigned p = 0, m = 1, n = 0, f = 1, d = 0, unram_d = 0, tame_d = 0;
  int prec = default_precision(), guard = 8;
  bool trace_diag = false;
  std::string in;

  auto* ff = app.add_subcommand("ff", "self-dual normal basis of F_{q^n}/F_q, q = p^m");
  ff->add_option("--p", p, "characteristic")->required();
  ff->add_option("--m", m, "degree of F_q over F_p")->capture_default_str();
  ff->add_option("--n", n, "extension degree")->required();
  ff->add_option("--out", out, "write the certificate here instead of stdout");

  auto* loc = app.add_subcommand("local", "self-dual integral normal bases of local fields");
  loc->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--p", p, "residue characteristic (odd)")->required();
    c->add_option("--f", f, "unramified degree of K over Q_p")->capture_default_str();
    c->add_option("--prec", prec, "working precision in p-adic digits (SDNB_PREC)")
        ->capture_default_str();
    c->add_option("--guard", guard, "guard digits")->capture_default_str();
    c->add_option("--out", out, "write the certificate here instead of stdout");
  };
  auto* tame = loc->add_subcommand("tame", "L = K(tau^(1/d)), tau = -p");
  add_common(tame);
  tame->add_option("--d", d, "ramification degree")->required();
  auto* unram = loc->add_subcommand("unram", "unramified extension of degree d");
  add_common(unram);
  unram->add_option("--d", d, "degree")->required();
  auto* wild = loc->add_subcommand("wild", "degree-p subfield M of K_{pi,2}, K = Q_p");
  add_common(wild);
  auto* comp = loc->add_subcommand("compose", "unramified times tame, optional trace-down");
  add_common(comp);
  comp->add_option("--unram-d", unram_d, "unramified degree")->required();
  comp->add_option("--tame-d", tame_d, "tame degree")->required();
  comp->add_flag("--trace-diag", trace_diag, "trace down along the diagonal subgroup");

  auto* ver = app.add_subcommand("verify", "re-check a certificate from scratch");
  ver->add_option("--in", in, "certificate file")->required();

  auto* orc = app.add_subcommand("oracle", "enumerate all self-dual elements of F_{p^m}/F_p");
  orc->add_option("--p", p, "characteristic")->required();
  orc->add_option("--m", m, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParams;
  }

  if (ff->parsed()) {
    return guarded([&] { return emit(sdnb::cert::run_ff(p, m, n), out); });
  }
  if (loc->parsed()) {
    sdnb::cert::LocalParams par;
    par.p = p;
    par.f = f;
    par.d = d;
    par.precision = prec;
    par.guard = guard;
    if (tame->parsed()) par.kind = "tame";
    else if (unram->parsed()) par.kind = "unram";
    else if (wild->parsed()) par.kind = "wild";
    else {
      par.kind = "compose";
      par.unram_d = unram_d;
      par.tame_d = tame_d;
      par.trace_diag = trace_diag;
    }
    return guarded([&] { return emit(sdnb::cert::run_local(par), out); });
  }
  if (ver->parsed()) {
    std::ifstream fin(in);
    if (!fin) {
      std::cerr << "error: cannot read " << in << "\n";
      return kParams;
    }
    std::stringstream ss;
    ss << fin.rdbuf();
    return guarded([&] {
      const auto r = sdnb::cert::verify_text(ss.str());
      for (const auto& msg : r.messages) std::cerr << msg << "\n";
      std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
      return r.pass ? kOk : kVerifyFail;
    });
  }
  if (orc->parsed()) {
    return guarded([&] {
      const auto all = sdnb::sdnb_ff::brute_force_selfdual(p, m);
      json doc = {{"p", p}, {"m", m}, {"count", all.size()}};
      json elems = json::array();
      for (const auto& x : all) elems.push_back(x.coeffs());
      doc["self_dual"] = elems;
      bool member = false;
      try {
        const auto c = sdnb::sdnb_ff::construct_selfdual(p, 1, m);
        const sdnb::ff::SubfieldEmbedding emb(sdnb::ff::make_field(p, m), c.universe);
        const auto x = emb.restrict(c.generator);
        member = std::find(all.begin(), all.end(), x) != all.end();
        doc["constructed"] = x.coeffs();
      } catch (const sdnb::ExistenceError& e) {
        doc["constructed"] = nullptr;
        doc["existence"] = e.what();
      }
      doc["constructed_is_member"] = member;
      std::cout << doc.dump(2) << "\n";
      const bool ok = doc["constructed"].is_null() ? all.empty() : member;
      return ok ? kOk : kVerifyFail;
    });
  }
  return kParams;
}
