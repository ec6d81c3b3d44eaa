#include "sdnb/ff/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "sdnb/error.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::ff {

namespace {

void require_subfield(const FqElem& a, unsigned t, const char* who) {
  const unsigned m = a.field().degree();
  if (t == 0 || m % t != 0 || !in_subfield(a, t))
    throw DomainError(std::string(who) + ": element not in F_{p^" +
                      std::to_string(t) + "}");
}

mpz_class group_order(const FqField& F, unsigned t) {
  return nt::ipow(F.characteristic(), t) - 1;
}

// One r-th root of a in F_{p^t} (r prime), or nothing.
std::optional<FqElem> rth_root(const FqElem& a, unsigned r, unsigned t) {
  const FqField& F = a.field();
  if (a.is_zero()) return a;
  const mpz_class N = group_order(F, t);
  if (!mpz_divisible_ui_p(N.get_mpz_t(), r)) {
    mpz_class e;
    const mpz_class rz = r;
    mpz_invert(e.get_mpz_t(), rz.get_mpz_t(), N.get_mpz_t());
    return a.pow(e);
  }
  if (!a.pow(mpz_class(N / r)).is_one()) return std::nullopt;
  unsigned s = 0;
  mpz_class mprime = N;
  while (mpz_divisible_ui_p(mprime.get_mpz_t(), r)) {
    mprime /= r;
    ++s;
  }
  SubfieldTrials trials(F, t);
  FqElem z = F.one();
  for (;;) {
    z = trials.next();
    if (!z.is_zero() && !z.pow(mpz_class(N / r)).is_one()) break;
  }
  const FqElem C = z.pow(mprime);
  mpz_class lambda = 0;
  if (mprime > 1) {
    const mpz_class rz = r;
    mpz_invert(lambda.get_mpz_t(), rz.get_mpz_t(), mprime.get_mpz_t());
  }
  const FqElem x0 = a.pow(lambda);
  const FqElem b = a.pow(mpz_class(lambda * r - 1));
  const FqElem target = b.inverse();
  const FqElem gamma = C.pow(nt::ipow(r, s - 1));
  mpz_class e = 0;
  for (unsigned j = 0; j < s; ++j) {
    const FqElem h =
        (target * C.pow(mpz_class(-e))).pow(nt::ipow(r, s - 1 - j));
    FqElem g = F.one();
    unsigned digit = 0;
    while (!(g == h)) {
      g *= gamma;
      if (++digit >= r) throw InternalError("rth_root: discrete log failed");
    }
    e += mpz_class(digit) * nt::ipow(r, j);
  }
  SDNB_CHECK(mpz_divisible_ui_p(e.get_mpz_t(), r), "rth_root: exponent");
  const FqElem x = x0 * C.pow(mpz_class(e / r));
  SDNB_CHECK(x.pow(std::uint64_t(r)) == a, "rth_root: verification");
  return x;
}

void split_roots(const FqPoly& g, unsigned t, std::vector<FqElem>& out) {
  const int n = g.degree();
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(-g.coeffs()[0] * g.lead().inverse());
    return;
  }
  const FqField& F = g.field();
  const unsigned p = F.characteristic();
  const FrobeniusMod frob(g);
  const FqPoly X = FqPoly::monomial(F, F.one(), 1);
  const FqPoly one(F, {F.one()});
  SubfieldTrials trials(F, t);
  for (unsigned attempt = 0; attempt < 100000; ++attempt) {
    const FqElem delta = trials.next();
    FqPoly b(F);
    if (p == 2) {
      if (delta.is_zero()) continue;
      FqPoly cur = (X * delta) % g;
      b = cur;
      for (unsigned k = 1; k < t; ++k) {
        cur = frob.apply(cur);
        b += cur;
      }
    } else {
      const FqPoly lin = X + FqPoly(F, {delta});
      FqPoly cur = powmod(lin, mpz_class((p - 1) / 2), g);
      b = cur;
      for (unsigned k = 1; k < t; ++k) {
        cur = frob.apply(cur);
        b = mulmod(b, cur, g);
      }
      b -= one;
    }
    FqPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < n) {
      FqPoly q(F), r(F);
      divrem(g, h, q, r);
      split_roots(h, t, out);
      split_roots(q, t, out);
      return;
    }
  }
  throw InternalError("find_roots: splitting did not terminate");
}

}  // namespace

SubfieldTrials::SubfieldTrials(FqField field, unsigned t)
    : field_(std::move(field)), t_(t) {
  if (t == 0 || field_.degree() % t != 0)
    throw DomainError("SubfieldTrials: t must divide the field degree");
}

FqElem SubfieldTrials::next() {
  const unsigned M = field_.degree();
  const mpz_class limit = field_.size();
  const mpz_class sub_size = nt::ipow(field_.characteristic(), t_);
  while (k_ < limit) {
    if (mpz_class(seen_.size()) >= sub_size) break;
    FqElem e = field_.lex_element(k_);
    k_ += 1;
    FqElem v = field_.zero();
    if (t_ == M) {
      v = e;
    } else {
      for (unsigned i = 0; i < M; ++i) {
        if (!e[i]) continue;
        if (basis_traces_.size() < M) basis_traces_.resize(M);
        if (!basis_traces_[i].field().valid()) {
          basis_traces_[i] =
              rel_trace(field_.gen().pow(std::uint64_t(i)), t_, M / t_);
        }
        v += basis_traces_[i].scaled(e[i]);
      }
    }
    if (seen_.insert(v.coeffs()).second) return v;
  }
  throw InternalError("SubfieldTrials: subfield exhausted");
}

std::vector<FqElem> find_roots(const FqPoly& f, unsigned t) {
  if (f.is_zero()) throw DomainError("find_roots: zero polynomial");
  const FqField& F = f.field();
  if (t == 0 || F.degree() % t != 0)
    throw DomainError("find_roots: root degree must divide field degree");
  std::vector<FqElem> out;
  if (f.degree() <= 0) return out;
  const FqPoly fm = f.monic();
  const FrobeniusMod frob(fm);
  const FqPoly X = FqPoly::monomial(F, F.one(), 1) % fm;
  FqPoly h = frob.apply(X, t) - X;
  FqPoly g = gcd(fm, h);
  if (h.is_zero()) g = fm;
  split_roots(g, t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FqElem> find_roots(const FqPoly& f) {
  return find_roots(f, f.field().degree());
}

FqElem find_root(const FqPoly& f, unsigned t) {
  auto roots = find_roots(f, t);
  if (roots.empty()) throw NotFoundError("find_root: polynomial has no root");
  return roots.front();
}

FqElem find_root(const FqPoly& f) { return find_root(f, f.field().degree()); }

bool is_square(const FqElem& a, unsigned t) {
  require_subfield(a, t, "is_square");
  const unsigned p = a.field().characteristic();
  if (p == 2 || a.is_zero()) return true;
  const Coeff n = rel_norm(a, 1, t)[0];
  return nt::powmod(n, (p - 1) / 2, p) == 1;
}

bool is_square(const FqElem& a) { return is_square(a, a.field().degree()); }

FqElem sqrt_ff(const FqElem& a, unsigned t) {
  require_subfield(a, t, "sqrt_ff");
  const FqField& F = a.field();
  const unsigned p = F.characteristic();
  if (a.is_zero()) return a;
  if (p == 2) return a.frobenius(t - 1);
  if (!is_square(a, t)) throw DomainError("sqrt_ff: not a square");
  const mpz_class N = group_order(F, t);
  unsigned s = 0;
  mpz_class o = N;
  while (mpz_even_p(o.get_mpz_t())) {
    o /= 2;
    ++s;
  }
  SubfieldTrials trials(F, t);
  FqElem z = trials.next();
  while (z.is_zero() || is_square(z, t)) z = trials.next();
  FqElem c = z.pow(o);
  FqElem tt = a.pow(o);
  FqElem R = a.pow(mpz_class((o + 1) / 2));
  unsigned Ms = s;
  while (!tt.is_one()) {
    unsigned i = 0;
    FqElem x = tt;
    while (!x.is_one()) {
      x = x.square();
      ++i;
      if (i >= Ms) throw InternalError("sqrt_ff: Tonelli-Shanks failed");
    }
    FqElem b = c;
    for (unsigned j = 0; j + i + 1 < Ms; ++j) b = b.square();
    Ms = i;
    c = b.square();
    tt *= c;
    R *= b;
  }
  SDNB_CHECK(R.square() == a, "sqrt_ff: result");
  const FqElem Rn = -R;
  return Rn < R ? Rn : R;
}

FqElem sqrt_ff(const FqElem& a) { return sqrt_ff(a, a.field().degree()); }

mpz_class element_order(const FqElem& x, unsigned t) {
  require_subfield(x, t, "element_order");
  if (x.is_zero()) throw DomainError("element_order: zero");
  mpz_class n = group_order(x.field(), t);
  for (const auto& [q, e] : nt::factor(n)) {
    for (unsigned i = 0; i < e; ++i) {
      const mpz_class cand = n / q;
      if (x.pow(cand).is_one())
        n = cand;
      else
        break;
    }
  }
  return n;
}

FqElem mult_generator(const FqField& F) {
  const mpz_class N = F.size() - 1;
  const auto fac = nt::factor(N);
  for (mpz_class k = 1; k < F.size(); ++k) {
    const FqElem x = F.lex_element(k);
    bool ok = true;
    for (const auto& [q, e] : fac) {
      if (x.pow(mpz_class(N / q)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  throw InternalError("mult_generator: none found");
}

FqElem primitive_root_of_unity(const FqField& F, unsigned d, unsigned t) {
  if (d == 0) throw DomainError("root of unity of order 0");
  const mpz_class N = group_order(F, t);
  if (!mpz_divisible_ui_p(N.get_mpz_t(), d))
    throw DomainError("primitive_root_of_unity: d does not divide p^t - 1");
  if (d == 1) return F.one();
  const auto primes = nt::factor(std::uint64_t(d));
  SubfieldTrials trials(F, t);
  FqElem z;
  for (;;) {
    const FqElem c = trials.next();
    if (c.is_zero()) continue;
    z = c.pow(mpz_class(N / d));
    bool ok = true;
    for (const auto& pr : primes)
      if (z.pow(std::uint64_t(d / pr.first)).is_one()) ok = false;
    if (ok) break;
  }
  FqElem best = z;
  FqElem cur = z;
  for (unsigned k = 2; k < d; ++k) {
    cur *= z;
    if (std::gcd(k, d) == 1 && cur < best) best = cur;
  }
  return best;
}

std::vector<FqElem> binomial_roots(const FqElem& a, unsigned d, unsigned t) {
  require_subfield(a, t, "binomial_roots");
  const FqField& F = a.field();
  if (d == 0) throw DomainError("binomial_roots: d = 0");
  if (a.is_zero()) return {a};
  std::vector<unsigned> primes;
  for (const auto& [r, e] : nt::factor(std::uint64_t(d)))
    for (unsigned i = 0; i < e; ++i) primes.push_back(unsigned(r));
  const mpz_class N = group_order(F, t);
  std::function<std::optional<FqElem>(const FqElem&, std::size_t)> rec =
      [&](const FqElem& x, std::size_t idx) -> std::optional<FqElem> {
    if (idx == primes.size()) return x;
    const unsigned r = primes[idx];
    auto y0 = rth_root(x, r, t);
    if (!y0) return std::nullopt;
    if (!mpz_divisible_ui_p(N.get_mpz_t(), r)) return rec(*y0, idx + 1);
    const FqElem w = primitive_root_of_unity(F, r, t);
    FqElem y = *y0;
    for (unsigned k = 0; k < r; ++k) {
      if (auto res = rec(y, idx + 1)) return res;
      y *= w;
    }
    return std::nullopt;
  };
  auto theta0 = rec(a, 0);
  if (!theta0) return {};
  const unsigned g =
      unsigned(mpz_gcd_ui(nullptr, N.get_mpz_t(), static_cast<unsigned long>(d)));
  const FqElem w = primitive_root_of_unity(F, g, t);
  std::vector<FqElem> out;
  FqElem cur = *theta0;
  for (unsigned k = 0; k < g; ++k) {
    out.push_back(cur);
    cur *= w;
  }
  std::sort(out.begin(), out.end());
  for (const auto& x : out)
    SDNB_CHECK(x.pow(std::uint64_t(d)) == a, "binomial_roots: verification");
  return out;
}

}  // namespace sdnb::ff
