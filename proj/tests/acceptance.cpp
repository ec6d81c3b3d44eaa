#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "sdnb/cert/certificate.hpp"
#include "sdnb/ff/embedding.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/grpalg/ff_algebra.hpp"
#include "sdnb/grpalg/padic_algebra.hpp"
#include "sdnb/local/generators.hpp"
#include "sdnb/padic/lubin_tate.hpp"
#include "sdnb/sdnb_ff/construct.hpp"
#include "sdnb/sdnb_ff/pprime.hpp"
#include "sdnb/sdnb_ff/semaev.hpp"
#include "sdnb/util/numtheory.hpp"

using namespace sdnb;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_tmp;
int g_failed = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void criterion(int n, const char* name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  std::cout << (out.ok ? "PASS" : "FAIL") << " " << n << " " << name << " (" << buf << ")";
  if (!out.detail.empty()) std::cout << ": " << out.detail;
  std::cout << std::endl;
  if (!out.ok) ++g_failed;
}

std::string tag(unsigned p, unsigned m, unsigned n) {
  return "(" + std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

// --- 1, 2 ---------------------------------------------------------------

void ff_grid(Outcome& o) {
  const std::vector<std::pair<unsigned, std::vector<unsigned>>> grid = {
      {3, {1, 3, 5, 7, 9, 15, 25, 27, 35, 45}}, {5, {3, 5, 7, 15, 25}}, {7, {3, 5, 7, 9, 15}}};
  for (const auto& [p, ns] : grid)
    for (unsigned m : {1u, 2u})
      for (unsigned n : ns) {
        const auto c = sdnb_ff::construct_selfdual(p, m, n);
        const grpalg::FfExtension ext(c.universe, m, n);
        bool exact = true;
        for (unsigned i = 0; i < n; ++i) {
          const auto v = ext.trace(c.generator * ext.apply(i, c.generator));
          exact = exact && (i == 0 ? v.is_one() : v.is_zero());
        }
        o.expect(exact && c.gram.pass && c.normal, "Gram not identity at " + tag(p, m, n));
      }
}

void char2(Outcome& o) {
  for (unsigned m : {1u, 2u}) {
    for (unsigned n : {2u, 3u, 5u, 6u, 7u, 10u}) {
      const auto c = sdnb_ff::construct_selfdual(2, m, n);
      o.expect(c.gram.pass && c.normal, "Gram not identity at " + tag(2, m, n));
    }
    for (unsigned n : {4u, 8u, 12u}) {
      try {
        sdnb_ff::construct_selfdual(2, m, n);
        o.expect(false, "no existence error at " + tag(2, m, n));
      } catch (const ExistenceError& e) {
        o.expect(std::string(e.what()).find("not divisible by 4") != std::string::npos,
                 "existence message lacks the exponent-4 rule");
      }
    }
  }
}

// --- 3, 4 ---------------------------------------------------------------

void oracle(Outcome& o) {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 5u}}) {
    const auto all = sdnb_ff::brute_force_selfdual(p, m);
    const auto c = sdnb_ff::construct_selfdual(p, 1, m);
    const ff::SubfieldEmbedding e(ff::make_field(p, m), c.universe);
    const auto x = e.restrict(c.generator);
    o.expect(std::find(all.begin(), all.end(), x) != all.end(),
             "constructed generator missing from oracle set " + tag(p, 1, m));
  }
  o.expect(sdnb_ff::brute_force_selfdual(5, 2).empty(), "(5,2) enumeration not empty");
}

void semaev(Outcome& o) {
  for (auto [p, m] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {3u, 3u}}) {
    for (unsigned n : {1u, 2u}) {
      unsigned pn = 1;
      for (unsigned i = 0; i < n; ++i) pn *= p;
      const auto U = ff::make_field(p, m * pn);
      const auto st = sdnb_ff::semaev_eta(U, m, n);
      unsigned level = 1;
      for (unsigned i = 0; i <= n; ++i) {
        o.expect(!ff::rel_trace(st.eta[i], m, level).is_zero(),
                 "zero trace at step " + std::to_string(i) + " " + tag(p, m, n));
        level *= p;
      }
      o.expect(ff::rel_trace(st.top(), m, pn) == st.eta[0], "telescoping fails " + tag(p, m, n));
      if (n == 1)
        o.expect(sdnb_ff::minimal_polynomial(st.top(), m) == st.f[1],
                 "minimal polynomial mismatch " + tag(p, m, n));
    }
  }
}

// --- 5 ------------------------------------------------------------------

ff::FqElem random_elem(const ff::FqField& F, std::mt19937& rng) {
  ff::CoeffVec c(F.degree());
  for (auto& x : c) x = rng() % F.characteristic();
  return F.element(c);
}

ff::FqElem random_sub(const ff::FqField& U, unsigned m, std::mt19937& rng) {
  return ff::rel_trace(random_elem(U, rng), m, U.degree() / m);
}

int ff_laws(Outcome& o, unsigned p, unsigned m, unsigned d, int count, std::mt19937& rng) {
  const auto U = ff::make_field(p, m * d);
  const grpalg::FfExtension ext(U, m, d);
  const unsigned ord = unsigned(nt::mult_order(nt::powmod(p, m, d), d));
  const auto Uc = ff::make_field(p, m * ord);
  const grpalg::CharData cd(Uc, m, d);
  const auto G = grpalg::AbelianGroup::cyclic(d);
  const std::string where = "F_" + std::to_string(p) + "^" + std::to_string(m) + "[C_" +
                            std::to_string(d) + "]";
  int done = 0;
  for (int k = 0; k < count; ++k) {
    const auto x = random_elem(U, rng);
    const auto R = grpalg::resolvend_gram(x, ext);
    const auto tr = ext.trace(x);
    o.expect(R.augmentation() == tr * tr, "eps(R) != Tr^2 in " + where);
    o.expect(R.is_j_fixed(), "R not J-fixed in " + where);
    std::vector<ff::FqElem> v;
    for (unsigned g = 0; g < d; ++g) v.push_back(random_sub(Uc, m, rng));
    const grpalg::FfGroupAlg a(G, v);
    o.expect(grpalg::char_recompose(grpalg::char_decompose(a, cd), cd, G).equals(a),
             "DFT roundtrip fails in " + where);
    ++done;
  }
  return done;
}

int sqrt_charp(Outcome& o, unsigned p, unsigned m, int count, std::mt19937& rng) {
  const auto U = ff::make_field(p, m);
  const auto G = grpalg::AbelianGroup::cyclic(p);
  int done = 0;
  for (int k = 0; k < count; ++k) {
    std::vector<ff::FqElem> v;
    for (unsigned g = 0; g < p; ++g) v.push_back(random_elem(U, rng));
    if (v[0].is_zero()) v[0] = U.one();
    const grpalg::FfGroupAlg w(G, v);
    if (w.augmentation().is_zero()) continue;
    const auto u = w * w;
    const auto r = grpalg::sqrt_modular_pgroup(u, m);
    o.expect((r * r).equals(u), "sqrt^2 != input in F_" + std::to_string(p) + "[C_p]");
    ++done;
  }
  return done;
}

int padic_laws(Outcome& o, int count, std::mt19937& rng) {
  const auto L = padic::build_unramified(padic::LocalBase::make(3, 1, 20, 4), 5);
  const auto& ring = L.ring;
  const auto G = L.group();
  gmp_randclass gr(gmp_randinit_mt);
  gr.seed(rng());
  const auto rnd = [&] {
    std::vector<mpz_class> c;
    for (unsigned k = 0; k < ring->dim(); ++k) c.push_back(gr.get_z_range(ring->pN()));
    return padic::LocalElem(ring, c, 0, ring->precision());
  };
  const auto rnd_int = [&](long scale) {
    return padic::LocalElem::from_mpz(ring, gr.get_z_range(ring->pN()) * scale);
  };
  int done = 0;
  for (int k = 0; k < count; ++k) {
    const auto x = rnd();
    const auto R = grpalg::resolvend_gram(x, L);
    const auto tr = L.trace(x);
    o.expect((R.augmentation() - tr * tr).is_zero(), "eps(R) != Tr^2 in Z_3[C_5]");
    o.expect(R.is_j_fixed(), "R not J-fixed in Z_3[C_5]");
    std::vector<padic::LocalElem> v;
    for (std::size_t g = 0; g < G->order(); ++g) v.push_back(rnd_int(3));
    v[0] = v[0] + padic::LocalElem::one(ring);
    const grpalg::LocalGroupAlg w(G, v);
    const auto u = w * w;
    const auto r = grpalg::hensel_sqrt(u, grpalg::LocalGroupAlg::scalar(G, padic::LocalElem::one(ring)));
    o.expect((r * r).equals(u), "sqrt^2 != input in Z_3[C_5]");
    ++done;
  }
  return done;
}

void group_algebra(Outcome& o) {
  std::mt19937 rng(20240501);
  int n = 0;
  n += ff_laws(o, 3, 1, 5, 260, rng);
  n += ff_laws(o, 3, 2, 7, 260, rng);
  n += ff_laws(o, 7, 1, 9, 260, rng);
  n += padic_laws(o, 260, rng);
  n += sqrt_charp(o, 3, 2, 100, rng);
  n += sqrt_charp(o, 7, 1, 100, rng);
  struct Case { unsigned p, m, r, i; };
  for (const Case c : {Case{3, 1, 5, 1}, Case{3, 2, 7, 1}, Case{7, 1, 3, 2}}) {
    unsigned d = 1;
    for (unsigned k = 0; k < c.i; ++k) d *= c.r;
    const auto U = ff::make_field(c.p, sdnb_ff::pprime_universe_degree(c.p, c.m, c.r, c.i));
    const auto res = sdnb_ff::selfdual_pprime_in(U, c.m, c.r, c.i);
    const auto R = grpalg::resolvend_gram(res.state.eta, grpalg::FfExtension(U, c.m, d));
    o.expect((res.v * res.v.involution()).equals(R), "v J(v) != R(eta) " + tag(c.p, c.m, d));
    ++n;
  }
  o.expect(n >= 1000, "only " + std::to_string(n) + " instances");
  if (o.ok) o.detail = std::to_string(n) + " instances";
}

// --- 6 to 9 -------------------------------------------------------------

padic::LocalBase base(unsigned p, int N = 48) { return padic::LocalBase::make(p, 1, N, 8); }

void check_cert(Outcome& o, const local::SelfDualCertificateLocal& c, long want_v,
                const std::string& what) {
  o.expect(c.valuation == want_v, what + ": valuation " + std::to_string(c.valuation));
  o.expect(c.gram.pass, what + ": Gram check failed");
  o.expect(c.gram.required == c.ext.base.precision - 8, what + ": wrong target precision");
}

void tame(Outcome& o) {
  for (auto [p, d] : {std::pair{7u, 3u}, std::pair{11u, 5u}}) {
    const std::string w = "tame " + std::to_string(p) + "," + std::to_string(d);
    const auto lo = local::tame_generator(base(p), d);
    check_cert(o, lo, (1 - long(d)) / 2, w);
    const auto hi = local::tame_generator(base(p, 96), d);
    check_cert(o, hi, (1 - long(d)) / 2, w + " N=96");
    const auto a = lo.generator.digits(), b = hi.generator.digits();
    bool agree = lo.generator.shift() == hi.generator.shift() && a.size() == b.size();
    for (std::size_t k = 0; agree && k < a.size(); ++k)
      agree = b[k].size() >= a[k].size() && std::equal(a[k].begin(), a[k].end(), b[k].begin());
    o.expect(agree, w + ": N=96 digits disagree with N=48");
  }
}

void wild(Outcome& o) {
  for (unsigned p : {3u, 5u}) {
    const std::string w = "wild " + std::to_string(p);
    const auto r = local::wild_generator(base(p));
    check_cert(o, r.direct, 1 - long(p), w + " direct");
    check_cert(o, r.traced, 1 - long(p), w + " traced");
    // Hilbert: v(D) = sum over sigma != 1 of v_M(sigma(pi_M) - pi_M).
    const auto& M = r.direct.ext;
    const auto pi_M = padic::LocalElem::t(M.ring).pow((unsigned long)(p - 1));
    o.expect(M.valuation(pi_M) == 1, w + ": alpha^(p-1) is not a uniformizer of M");
    long hilbert = 0;
    for (std::size_t g = 1; g < M.group()->order(); ++g)
      hilbert += M.valuation(M.apply(g, pi_M) - pi_M);
    o.expect(hilbert == M.v_D, w + ": Hilbert sum " + std::to_string(hilbert));
    o.expect(M.v_D == 2 * long(p - 1), w + ": v(D) " + std::to_string(M.v_D));
  }
}

void unram(Outcome& o) {
  for (unsigned d : {3u, 5u, 9u})
    check_cert(o, local::unram_generator(base(3), d), 0, "unram 3," + std::to_string(d));
}

void compose(Outcome& o) {
  const auto b = base(7);
  const auto un = local::unram_generator(b, 3);
  const auto tot = local::tame_generator(b, 3);
  const auto prod = local::compose_and_trace(un, tot, {});
  check_cert(o, prod, -1, "product");
  o.expect(prod.gram.entries.size() == 9, "product degree");
  const auto C = padic::build_compositum(b, 3, 3);
  const auto diag = local::compose_and_trace(un, tot, {local::diagonal_generator(C)});
  check_cert(o, diag, -1, "trace-down");
  o.expect(diag.gram.entries.size() == 3, "trace-down degree");
}

// --- 10 -----------------------------------------------------------------

int run(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

cert::json load(const fs::path& f) {
  std::ifstream in(f);
  return cert::json::parse(in);
}

void save(const fs::path& f, const cert::json& j) { std::ofstream(f) << j.dump(2) << "\n"; }

void integrity(Outcome& o) {
  if (g_cli.empty()) {
    o.expect(false, "no CLI path given");
    return;
  }
  struct Job { std::string name, args; };
  const std::vector<Job> jobs = {
      {"ff_3_15", "ff --p 3 --n 15"},
      {"ff_5_m2_7", "ff --p 5 --m 2 --n 7"},
      {"ff_2_6", "ff --p 2 --n 6"},
      {"tame", "local tame --p 7 --d 3 --prec 48"},
      {"unram", "local unram --p 3 --d 5 --prec 48"},
      {"wild", "local wild --p 3 --prec 48"},
      {"product", "local compose --p 7 --unram-d 3 --tame-d 3"},
      {"trace_down", "local compose --p 7 --unram-d 3 --tame-d 3 --trace-diag"}};
  for (const auto& j : jobs) {
    const fs::path f = g_tmp / (j.name + ".json");
    o.expect(run(j.args + " --out \"" + f.string() + "\"") == 0, j.name + ": emit failed");
    o.expect(run("verify --in \"" + f.string() + "\"") == 0, j.name + ": fresh verify failed");

    cert::json doc = load(f);
    unsigned p = doc["parameters"]["p"].get<unsigned>();
    if (doc["mode"] == "ff") {
      auto& c = doc["generator"][doc["generator"].size() - 1];
      c = (c.get<unsigned>() + 1) % p;
    } else {
      cert::json* gen =
          doc.contains("variants") ? &doc["variants"][0]["generator"] : &doc["generator"];
      auto& d = (*gen)["digits"][0][0];
      d = (d.get<unsigned>() + 1) % p;
    }
    const fs::path t = g_tmp / (j.name + ".tampered.json");
    save(t, doc);
    o.expect(run("verify --in \"" + t.string() + "\"") == 1, j.name + ": tampering not detected");
  }
  const fs::path tr = g_tmp / "truncated.json";
  {
    std::ifstream in(g_tmp / "tame.json");
    std::stringstream ss;
    ss << in.rdbuf();
    std::ofstream(tr) << ss.str().substr(0, ss.str().size() / 2);
  }
  o.expect(run("verify --in \"" + tr.string() + "\"") == 2, "truncated file not rejected with 2");
  const fs::path a = g_tmp / "again.json";
  run("local wild --p 3 --prec 48 --out \"" + a.string() + "\"");
  std::ifstream x(g_tmp / "wild.json"), y(a);
  std::stringstream sx, sy;
  sx << x.rdbuf();
  sy << y.rdbuf();
  o.expect(sx.str() == sy.str(), "repeated run is not byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  g_tmp = fs::temp_directory_path() / ("sdnb_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(g_tmp);

  criterion(1, "finite-field grid", ff_grid);
  criterion(2, "characteristic 2", char2);
  criterion(3, "exhaustive oracle", oracle);
  criterion(4, "Semaev invariants", semaev);
  criterion(5, "group-algebra laws", group_algebra);
  criterion(6, "local tame", tame);
  criterion(7, "local wild", wild);
  criterion(8, "local unramified", unram);
  criterion(9, "compositum and trace-down", compose);
  criterion(10, "certificate integrity", integrity);

  std::error_code ec;
  fs::remove_all(g_tmp, ec);
  return g_failed == 0 ? 0 : 1;
}
