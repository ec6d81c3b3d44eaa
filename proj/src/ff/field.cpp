#include "sdnb/ff/field.hpp"

#include <algorithm>
#include <sstream>

#include "sdnb/error.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::ff {

namespace {

using Acc = std::vector<std::uint64_t>;

void trim(CoeffVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeff inv_mod(Coeff a, unsigned p) {
  return static_cast<Coeff>(nt::powmod(a, p - 2, p));
}

// Dense arithmetic in F_p[Y]; used only for modulus selection.
CoeffVec fp_mod(CoeffVec a, const CoeffVec& f, unsigned p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const Coeff lead_inv = inv_mod(f.back(), p);
  while (a.size() > n) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i)
      a[shift + i] = static_cast<Coeff>(
          (a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

CoeffVec fp_gcd(CoeffVec a, CoeffVec b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    CoeffVec r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

CoeffVec fp_mulmod(const CoeffVec& a, const CoeffVec& b, const CoeffVec& f,
                   unsigned p) {
  if (a.empty() || b.empty()) return {};
  Acc acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] += std::uint64_t(a[i]) * b[j];
    if ((i & 63) == 63)
      for (auto& v : acc) v %= p;
  }
  CoeffVec r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = Coeff(acc[i] % p);
  return fp_mod(std::move(r), f, p);
}

CoeffVec fp_powmod(CoeffVec base, mpz_class e, const CoeffVec& f,
                   unsigned p) {
  CoeffVec r{1};
  base = fp_mod(std::move(base), f, p);
  for (long i = long(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = fp_mulmod(r, r, f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mulmod(r, base, f, p);
  }
  return r;
}

void reduce_acc(const detail::FieldData& F, Acc& acc, CoeffVec& out) {
  const unsigned p = F.p, m = F.m;
  for (std::size_t k = acc.size(); k-- > m;) {
    const std::uint64_t c = acc[k] % p;
    if (!c) continue;
    const std::size_t base = k - m;
    for (const auto& [idx, t] : F.taps) acc[base + idx] += c * t;
  }
  out.assign(m, 0);
  for (unsigned i = 0; i < m && i < acc.size(); ++i)
    out[i] = Coeff(acc[i] % p);
}

std::shared_ptr<detail::FieldData> build_data(unsigned p, CoeffVec modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = unsigned(modulus.size() - 1);
  d->modulus = std::move(modulus);
  for (unsigned i = 0; i < d->m; ++i)
    if (d->modulus[i]) d->taps.emplace_back(i, (p - d->modulus[i]) % p);
  d->inv.assign(p, 0);
  for (unsigned a = 1; a < p; ++a) d->inv[a] = inv_mod(a, p);
  return d;
}

}  // namespace

bool is_irreducible(unsigned p, const CoeffVec& f0) {
  CoeffVec f = f0;
  trim(f);
  if (f.size() < 2) return false;
  if (f.size() == 2) return true;
  if (f[0] == 0) return false;
  const std::size_t n = f.size() - 1;
  CoeffVec h{0, 1};
  const mpz_class pz = p;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = fp_powmod(h, pz, f, p);
    CoeffVec t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;
    if (fp_gcd(f, t, p).size() > 1) return false;
  }
  return true;
}

FqField FqField::make(unsigned p, unsigned m) {
  if (!nt::is_prime(p) || p >= (1u << 16))
    throw ParameterError("make_field: p must be a prime below 65536, got " +
                         std::to_string(p));
  if (m == 0) throw ParameterError("make_field: degree must be positive");
  if (m == 1) return FqField(build_data(p, {0, 1}));
  CoeffVec c(m + 1, 0);
  c[m] = 1;
  c[0] = 1;
  for (;;) {
    if (is_irreducible(p, c)) return FqField(build_data(p, c));
    // odometer with c_{m-1} least significant
    std::size_t i = m;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
    if (c[0] == 0) c[0] = 1;
  }
}

FqField FqField::from_modulus(unsigned p, CoeffVec modulus) {
  if (!nt::is_prime(p) || p >= (1u << 16))
    throw ParameterError("modulus: invalid characteristic");
  for (auto& v : modulus)
    if (v >= p) throw ParameterError("modulus: coefficient not reduced");
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw ParameterError("modulus: must be monic of positive degree");
  if (!is_irreducible(p, modulus))
    throw ParameterError("modulus: polynomial is reducible");
  return FqField(build_data(p, std::move(modulus)));
}

FqField make_field(unsigned p, unsigned m) { return FqField::make(p, m); }

mpz_class FqField::size() const { return nt::ipow(data_->p, data_->m); }

FqElem FqField::zero() const { return FqElem(*this, CoeffVec(degree(), 0)); }

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(long v) const {
  CoeffVec c(degree(), 0);
  const long p = long(characteristic());
  c[0] = Coeff(((v % p) + p) % p);
  return FqElem(*this, std::move(c));
}

FqElem FqField::element(CoeffVec coeffs) const {
  if (coeffs.size() > degree()) {
    for (std::size_t i = degree(); i < coeffs.size(); ++i)
      if (coeffs[i] % characteristic())
        throw ParameterError("element: too many coefficients");
    coeffs.resize(degree());
  }
  coeffs.resize(degree(), 0);
  for (auto& v : coeffs) v %= characteristic();
  return FqElem(*this, std::move(coeffs));
}

FqElem FqField::gen() const {
  if (degree() == 1) return from_int(long(characteristic() - data_->modulus[0]));
  CoeffVec c(degree(), 0);
  c[1] = 1;
  return FqElem(*this, std::move(c));
}

FqElem FqField::lex_element(const mpz_class& k) const {
  if (k < 0 || k >= size()) throw DomainError("lex_element: out of range");
  CoeffVec c(degree(), 0);
  mpz_class r = k;
  for (std::size_t i = degree(); i-- > 0;) {
    c[i] = Coeff(mpz_fdiv_ui(r.get_mpz_t(), characteristic()));
    r /= characteristic();
  }
  return FqElem(*this, std::move(c));
}

FqElem::FqElem(FqField f, CoeffVec c) : field_(std::move(f)), c_(std::move(c)) {}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coeff v) { return v == 0; });
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coeff v) { return v == 0; });
}

FqElem FqElem::operator-() const {
  FqElem r = *this;
  const unsigned p = field_.characteristic();
  for (auto& v : r.c_) v = v ? p - v : 0;
  return r;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  const unsigned p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Coeff s = c_[i] + o.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  const unsigned p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

FqElem FqElem::scaled(Coeff k) const {
  FqElem r = *this;
  const unsigned p = field_.characteristic();
  k %= p;
  for (auto& v : r.c_) v = Coeff(std::uint64_t(v) * k % p);
  return r;
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  const auto& F = a.field_.data();
  const unsigned m = F.m;
  if (m == 1)
    return FqElem(a.field_, {Coeff(std::uint64_t(a.c_[0]) * b.c_[0] % F.p)});
  Acc acc(2 * m - 1, 0);
  const bool big = F.p > 4096;
  for (unsigned i = 0; i < m; ++i) {
    const std::uint64_t ai = a.c_[i];
    if (!ai) continue;
    std::uint64_t* dst = acc.data() + i;
    const Coeff* src = b.c_.data();
    for (unsigned j = 0; j < m; ++j) dst[j] += ai * src[j];
    if (big && (i & 1023) == 1023)
      for (auto& v : acc) v %= F.p;
  }
  for (auto& v : acc) v %= F.p;
  CoeffVec out;
  reduce_acc(F, acc, out);
  return FqElem(a.field_, std::move(out));
}

FqElem& FqElem::operator*=(const FqElem& o) { return *this = *this * o; }

FqElem FqElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  const auto& F = field_.data();
  const unsigned p = F.p;
  // extended Euclid: track s with s * a = r mod modulus
  CoeffVec r0 = F.modulus, r1 = c_;
  trim(r1);
  CoeffVec s0{}, s1{1};
  auto sub_mul = [p](CoeffVec& x, const CoeffVec& y, Coeff c, std::size_t sh) {
    if (x.size() < y.size() + sh) x.resize(y.size() + sh, 0);
    for (std::size_t i = 0; i < y.size(); ++i)
      x[i + sh] = Coeff((x[i + sh] + std::uint64_t(p - c) * y[i]) % p);
    trim(x);
  };
  while (r1.size() > 1) {
    CoeffVec q;
    const Coeff li = F.inv[r1.back()];
    while (r0.size() >= r1.size() && !r0.empty()) {
      const std::size_t sh = r0.size() - r1.size();
      const Coeff c = Coeff(std::uint64_t(r0.back()) * li % p);
      if (q.size() < sh + 1) q.resize(sh + 1, 0);
      q[sh] = c;
      sub_mul(r0, r1, c, sh);
    }
    // s0 - q*s1
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i]) sub_mul(s0, s1, q[i], i);
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  SDNB_CHECK(r1.size() == 1, "inverse: modulus not irreducible");
  const Coeff k = F.inv[r1[0]];
  CoeffVec out(F.m, 0);
  for (std::size_t i = 0; i < s1.size(); ++i)
    out[i] = Coeff(std::uint64_t(s1[i]) * k % p);
  return FqElem(field_, std::move(out));
}

FqElem FqElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  FqElem r = field_.one();
  const long bits = long(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = bits - 1; i >= 0; --i) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r = field_.one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FqElem FqElem::frobenius(unsigned k) const {
  const auto& F = field_.data();
  const unsigned p = F.p, m = F.m;
  if (m == 1) return *this;
  k %= m;
  CoeffVec cur = c_;
  for (unsigned step = 0; step < k; ++step) {
    Acc acc(std::size_t(m - 1) * p + 1, 0);
    for (unsigned i = 0; i < m; ++i) acc[std::size_t(i) * p] = cur[i];
    reduce_acc(F, acc, cur);
  }
  return FqElem(field_, std::move(cur));
}

std::string FqElem::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

FqElem frobenius_pow(const FqElem& x, unsigned t, unsigned base_degree) {
  const unsigned m = x.field().degree();
  return x.frobenius(unsigned((std::uint64_t(t) * base_degree) % m));
}

bool in_subfield(const FqElem& x, unsigned t) {
  if (t == 0) return false;
  return x.frobenius(t) == x;
}

FqElem rel_trace(const FqElem& x, unsigned sub_degree, unsigned rel_degree) {
  const unsigned m = x.field().degree();
  if (sub_degree == 0 || rel_degree == 0 ||
      m % (sub_degree * rel_degree) != 0 ||
      !in_subfield(x, sub_degree * rel_degree))
    throw DomainError("rel_trace: element outside the stated extension");
  FqElem acc = x, cur = x;
  for (unsigned j = 1; j < rel_degree; ++j) {
    cur = cur.frobenius(sub_degree);
    acc += cur;
  }
  SDNB_CHECK(in_subfield(acc, sub_degree), "trace not in target subfield");
  return acc;
}

FqElem rel_norm(const FqElem& x, unsigned sub_degree, unsigned rel_degree) {
  const unsigned m = x.field().degree();
  if (sub_degree == 0 || rel_degree == 0 ||
      m % (sub_degree * rel_degree) != 0 ||
      !in_subfield(x, sub_degree * rel_degree))
    throw DomainError("rel_norm: element outside the stated extension");
  FqElem acc = x, cur = x;
  for (unsigned j = 1; j < rel_degree; ++j) {
    cur = cur.frobenius(sub_degree);
    acc *= cur;
  }
  return acc;
}

}  // namespace sdnb::ff
