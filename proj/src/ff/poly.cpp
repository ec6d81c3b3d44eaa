#include "sdnb/ff/poly.hpp"

#include "sdnb/error.hpp"

namespace sdnb::ff {

FqPoly::FqPoly(FqField f, std::vector<FqElem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

FqPoly FqPoly::monomial(const FqField& f, const FqElem& c, std::size_t k) {
  std::vector<FqElem> v(k + 1, f.zero());
  v[k] = c;
  return FqPoly(f, std::move(v));
}

FqPoly FqPoly::x_minus(const FqElem& a) {
  return FqPoly(a.field(), {-a, a.field().one()});
}

FqPoly FqPoly::from_fp(const FqField& f, const CoeffVec& c) {
  std::vector<FqElem> v;
  v.reserve(c.size());
  for (Coeff x : c) v.push_back(f.from_int(long(x)));
  return FqPoly(f, std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqElem FqPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : field_.zero();
}

FqElem FqPoly::operator()(const FqElem& x) const {
  FqElem acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

FqPoly FqPoly::derivative() const {
  std::vector<FqElem> v;
  for (std::size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i].scaled(Coeff(i % field_.characteristic())));
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * lead().inverse();
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return FqPoly(a.field_);
  std::vector<FqElem> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return FqPoly(a.field_, std::move(v));
}

FqPoly FqPoly::operator*(const FqElem& k) const {
  std::vector<FqElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * k);
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::frobenius_coeffs(unsigned k) const {
  std::vector<FqElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.frobenius(k));
  return FqPoly(field_, std::move(v));
}

void divrem(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FqField& F = a.field();
  std::vector<FqElem> rem = a.coeffs();
  const int db = b.degree();
  const FqElem li = b.lead().inverse();
  std::vector<FqElem> quo;
  if (int(rem.size()) - 1 >= db) quo.assign(rem.size() - db, F.zero());
  for (int k = int(rem.size()) - 1; k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const FqElem c = rem[k] * li;
    quo[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b.coeffs()[i];
  }
  if (int(rem.size()) > db) rem.resize(db > 0 ? db : 0, F.zero());
  q = FqPoly(F, std::move(quo));
  r = FqPoly(F, std::move(rem));
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) {
  FqPoly q(a.field()), r(a.field());
  divrem(a, b, q, r);
  return r;
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& f) {
  return (a * b) % f;
}

FqPoly powmod(const FqPoly& a, const mpz_class& e, const FqPoly& f) {
  FqPoly r = FqPoly(f.field(), {f.field().one()}) % f;
  const FqPoly base = a % f;
  for (long i = long(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = mulmod(r, r, f);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, f);
  }
  return r;
}

FrobeniusMod::FrobeniusMod(const FqPoly& f) : f_(f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("FrobeniusMod: modulus must have degree >= 1");
  const FqField& F = f.field();
  const FqPoly x = FqPoly::monomial(F, F.one(), 1) % f;
  const FqPoly xp = powmod(x, mpz_class(F.characteristic()), f);
  table_.reserve(n);
  table_.push_back(FqPoly(F, {F.one()}) % f);
  for (int i = 1; i < n; ++i) table_.push_back(mulmod(table_.back(), xp, f));
}

FqPoly FrobeniusMod::apply(const FqPoly& h) const {
  FqPoly r(f_.field());
  const FqPoly hr = h.degree() >= f_.degree() ? h % f_ : h;
  for (std::size_t i = 0; i < hr.coeffs().size(); ++i) {
    const FqElem& c = hr.coeffs()[i];
    if (c.is_zero()) continue;
    r += table_[i] * c.frobenius(1);
  }
  return r;
}

FqPoly FrobeniusMod::apply(const FqPoly& h, unsigned k) const {
  FqPoly r = h % f_;
  for (unsigned i = 0; i < k; ++i) r = apply(r);
  return r;
}

}  // namespace sdnb::ff
