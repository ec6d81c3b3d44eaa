#include "sdnb/padic/ring.hpp"

#include <algorithm>
#include <sstream>

#include "sdnb/error.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::padic {

namespace {

long vp(const mpz_class& a, unsigned p) {
  if (a == 0) return -1;
  return long(nt::valuation(a, p));
}

void mod_in_place(mpz_class& a, const mpz_class& m) {
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

void check_same_ring(const LocalElem& a, const LocalElem& b) {
  if (!a.valid() || !b.valid() || a.ring() != b.ring())
    throw ParameterError("local elements from different rings");
}

}  // namespace

std::shared_ptr<const LocalRing> LocalRing::make(unsigned p, unsigned F,
                                                 std::vector<mpz_class> E,
                                                 int precision) {
  if (!nt::is_prime(p)) throw ParameterError("local ring: p must be prime");
  if (F == 0) throw ParameterError("local ring: unramified degree must be positive");
  if (precision < 1) throw ParameterError("local ring: precision must be positive");
  if (E.size() < 2 || E.back() != 1)
    throw ParameterError("local ring: ramification polynomial must be monic");
  const unsigned e = unsigned(E.size() - 1);
  const bool trivial = e == 1 && E[0] == 0;
  if (!trivial) {
    const mpz_class pp = mpz_class(p) * p;
    for (unsigned l = 0; l < e; ++l)
      if (E[l] % p != 0) throw ParameterError("polynomial is not Eisenstein");
    if (E[0] % pp == 0) throw ParameterError("polynomial is not Eisenstein");
  }

  std::shared_ptr<LocalRing> r(new LocalRing());
  r->p_ = p;
  r->F_ = F;
  r->e_ = e;
  r->N_ = precision;
  r->pows_.resize(precision + 1);
  r->pows_[0] = 1;
  for (int k = 1; k <= precision; ++k) r->pows_[k] = r->pows_[k - 1] * p;
  r->pN_ = r->pows_[precision];
  r->residue_ = ff::make_field(p, F);
  for (ff::Coeff c : r->residue_.modulus()) r->h_.push_back(c);
  r->E_ = std::move(E);
  for (auto& c : r->E_) mod_in_place(c, r->pN_);

  const unsigned n = F * e;
  r->traces_.assign(n, 0);
  for (unsigned k = 0; k < n; ++k) {
    std::vector<mpz_class> bk(n, 0);
    bk[k] = 1;
    for (unsigned l = 0; l < n; ++l) {
      std::vector<mpz_class> bl(n, 0);
      bl[l] = 1;
      r->traces_[k] += r->mul_raw(bk, bl)[l];
    }
    mod_in_place(r->traces_[k], r->pN_);
  }
  return r;
}

const mpz_class& LocalRing::ppow(int k) const {
  if (k < 0 || k > N_) throw InternalError("ppow out of range");
  return pows_[k];
}

std::string LocalRing::describe() const {
  std::ostringstream os;
  os << "Z_" << p_ << "[y]/(";
  for (std::size_t i = h_.size(); i-- > 0;) os << h_[i] << (i ? "," : "");
  os << ")[t]/(";
  for (std::size_t i = E_.size(); i-- > 0;) os << E_[i] << (i ? "," : "");
  os << ") mod p^" << N_;
  return os.str();
}

std::vector<mpz_class> LocalRing::mul_raw(const std::vector<mpz_class>& a,
                                          const std::vector<mpz_class>& b) const {
  const unsigned F = F_, e = e_;
  const unsigned W = 2 * F - 1;
  std::vector<std::vector<mpz_class>> g(2 * e - 1, std::vector<mpz_class>(W));
  for (unsigned ka = 0; ka < a.size(); ++ka) {
    if (a[ka] == 0) continue;
    const unsigned ia = ka % F, ja = ka / F;
    for (unsigned kb = 0; kb < b.size(); ++kb) {
      if (b[kb] == 0) continue;
      mpz_addmul(g[ja + kb / F][ia + kb % F].get_mpz_t(), a[ka].get_mpz_t(),
                 b[kb].get_mpz_t());
    }
  }
  // t^e = -sum_{l<e} E_l t^l
  for (unsigned j = 2 * e - 1; j-- > e;) {
    for (auto& c : g[j]) mod_in_place(c, pN_);
    for (unsigned l = 0; l < e; ++l) {
      if (E_[l] == 0) continue;
      for (unsigned i = 0; i < W; ++i)
        if (g[j][i] != 0)
          mpz_submul(g[j - e + l][i].get_mpz_t(), E_[l].get_mpz_t(),
                     g[j][i].get_mpz_t());
    }
  }
  std::vector<mpz_class> out(F * e);
  for (unsigned j = 0; j < e; ++j) {
    auto& row = g[j];
    for (auto& c : row) mod_in_place(c, pN_);
    for (unsigned i = W; i-- > F;) {
      if (row[i] == 0) continue;
      for (unsigned l = 0; l < F; ++l)
        if (h_[l] != 0)
          mpz_submul(row[i - F + l].get_mpz_t(), h_[l].get_mpz_t(),
                     row[i].get_mpz_t());
    }
    for (unsigned i = 0; i < F; ++i) {
      mod_in_place(row[i], pN_);
      out[j * F + i] = std::move(row[i]);
    }
  }
  return out;
}

LocalElem::LocalElem(RingPtr ring, std::vector<mpz_class> c, long shift,
                     long prec)
    : ring_(std::move(ring)), c_(std::move(c)), shift_(shift), prec_(prec) {
  if (!ring_) throw ParameterError("local element without ring");
  if (c_.size() != ring_->dim())
    throw ParameterError("local element: coordinate count mismatch");
  normalize();
}

void LocalElem::normalize() {
  const unsigned p = ring_->p();
  long n = prec_ - shift_;
  if (n > ring_->precision()) {
    n = ring_->precision();
    prec_ = shift_ + n;
  }
  auto make_zero = [&] {
    for (auto& c : c_) c = 0;
    shift_ = prec_;
  };
  if (n <= 0) return make_zero();
  const mpz_class& m = ring_->ppow(int(n));
  long v = -1;
  for (auto& c : c_) {
    mod_in_place(c, m);
    if (c == 0) continue;
    const long w = vp(c, p);
    if (v < 0 || w < v) v = w;
  }
  if (v < 0) return make_zero();
  if (v > 0) {
    const mpz_class& d = ring_->ppow(int(v));
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    shift_ += v;
  }
}

LocalElem LocalElem::zero(const RingPtr& r) {
  return LocalElem(r, std::vector<mpz_class>(r->dim()), r->precision(),
                   r->precision());
}

LocalElem LocalElem::one(const RingPtr& r) { return from_int(r, 1); }

LocalElem LocalElem::from_int(const RingPtr& r, long v) {
  return from_mpz(r, mpz_class(v));
}

LocalElem LocalElem::from_mpz(const RingPtr& r, const mpz_class& v) {
  if (v == 0) return zero(r);
  const long s = vp(v, r->p());
  std::vector<mpz_class> c(r->dim());
  c[0] = v;
  mpz_divexact(c[0].get_mpz_t(), c[0].get_mpz_t(), mpz_class(nt::ipow(r->p(), s)).get_mpz_t());
  return LocalElem(r, std::move(c), s, s + r->precision());
}

LocalElem LocalElem::basis(const RingPtr& r, unsigned k) {
  if (k >= r->dim()) throw ParameterError("basis index out of range");
  std::vector<mpz_class> c(r->dim());
  c[k] = 1;
  return LocalElem(r, std::move(c), 0, r->precision());
}

LocalElem LocalElem::y(const RingPtr& r) {
  if (r->unram_degree() == 1) {
    // y is the root of the linear modulus Y + h_0.
    return from_mpz(r, -r->unram_modulus()[0]);
  }
  return basis(r, 1);
}

LocalElem LocalElem::t(const RingPtr& r) {
  if (r->ram_degree() == 1) return from_mpz(r, -r->eisenstein()[0]);
  return basis(r, r->unram_degree());
}

LocalElem LocalElem::lift(const RingPtr& r, const ff::FqElem& u) {
  if (!(u.field() == r->residue_field()))
    throw ParameterError("lift: element is not in the residue field");
  std::vector<mpz_class> c(r->dim());
  for (unsigned i = 0; i < r->unram_degree(); ++i) c[i] = u[i];
  return LocalElem(r, std::move(c), 0, r->precision());
}

bool LocalElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

long LocalElem::valuation() const {
  if (is_zero())
    throw PrecisionError("valuation: element is zero to working precision");
  const unsigned p = ring_->p(), F = ring_->unram_degree();
  const long e = ring_->ram_degree();
  long best = -1;
  for (unsigned k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const long w = e * vp(c_[k], p) + long(k / F);
    if (best < 0 || w < best) best = w;
  }
  return e * shift_ + best;
}

long LocalElem::content() const {
  if (is_zero())
    throw PrecisionError("content: element is zero to working precision");
  return shift_;
}

long LocalElem::content_or_precision() const {
  return is_zero() ? prec_ : shift_;
}

ff::FqElem LocalElem::residue() const {
  const ff::FqField& k = ring_->residue_field();
  if (is_zero()) {
    if (prec_ < 1) throw PrecisionError("residue: no digits known");
    return k.zero();
  }
  if (shift_ < 0) throw DomainError("residue: element is not integral");
  if (shift_ > 0) return k.zero();
  ff::CoeffVec c(ring_->unram_degree());
  for (unsigned i = 0; i < c.size(); ++i)
    c[i] = ff::Coeff(mpz_fdiv_ui(c_[i].get_mpz_t(), ring_->p()));
  return k.element(std::move(c));
}

LocalElem LocalElem::operator-() const {
  LocalElem r = *this;
  for (auto& c : r.c_) c = -c;
  r.normalize();
  return r;
}

LocalElem& LocalElem::operator+=(const LocalElem& o) {
  check_same_ring(*this, o);
  const long s = std::min(shift_, o.shift_);
  const long P = std::min(prec_, o.prec_);
  if (P <= s) {
    for (auto& c : c_) c = 0;
    shift_ = prec_ = P;
    return *this;
  }
  const long n = P - s;
  const long da = shift_ - s, db = o.shift_ - s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (da >= n) c_[k] = 0;
    else if (da > 0) c_[k] *= ring_->ppow(int(da));
    if (db < n && o.c_[k] != 0) {
      if (db > 0) mpz_addmul(c_[k].get_mpz_t(), o.c_[k].get_mpz_t(),
                             ring_->ppow(int(db)).get_mpz_t());
      else c_[k] += o.c_[k];
    }
  }
  shift_ = s;
  prec_ = P;
  normalize();
  return *this;
}

LocalElem& LocalElem::operator-=(const LocalElem& o) { return *this += -o; }

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  check_same_ring(a, b);
  const long prec = std::min(a.prec_ + b.shift_, b.prec_ + a.shift_);
  if (a.is_zero() || b.is_zero()) {
    return LocalElem(a.ring_, std::vector<mpz_class>(a.c_.size()), prec, prec);
  }
  return LocalElem(a.ring_, a.ring_->mul_raw(a.c_, b.c_), a.shift_ + b.shift_,
                   prec);
}

LocalElem LocalElem::mul_int(const mpz_class& k) const {
  if (k == 0) {
    const long P = prec_ + ring_->precision();
    return LocalElem(ring_, std::vector<mpz_class>(c_.size()), P, P);
  }
  const long v = vp(k, ring_->p());
  mpz_class u = k;
  mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), mpz_class(nt::ipow(ring_->p(), v)).get_mpz_t());
  std::vector<mpz_class> c = c_;
  for (auto& x : c) x *= u;
  return LocalElem(ring_, std::move(c), shift_ + v, prec_ + v);
}

LocalElem LocalElem::mul_ppow(long k) const {
  LocalElem r = *this;
  r.shift_ += k;
  r.prec_ += k;
  return r;
}

LocalElem LocalElem::pow(unsigned long e) const {
  LocalElem r = one(ring_);
  LocalElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

LocalElem LocalElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  LocalElem r = one(ring_);
  for (long i = long(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

LocalElem LocalElem::unit_inverse() const {
  if (is_zero() || valuation() != 0)
    throw NonUnitError("unit_inverse: element is not a unit");
  LocalElem z = lift(ring_, residue().inverse());
  const LocalElem one_ = one(ring_);
  for (int it = 0; it < 80; ++it) {
    const LocalElem err = one_ - *this * z;
    if (err.is_zero()) return z.with_precision(prec_);
    z = z + z * err;
  }
  throw InternalError("unit_inverse: Newton iteration did not converge");
}

LocalElem LocalElem::inverse() const {
  if (is_zero()) throw PrecisionError("inverse: element is zero to working precision");
  const LocalElem u = mul_ppow(-shift_);
  const long w = u.valuation();
  if (w == 0) return u.unit_inverse().mul_ppow(-shift_);
  const unsigned e = ring_->ram_degree();
  const LocalElem tk = t(ring_).pow((unsigned long)(e - w));
  const LocalElem v = (u * tk).mul_ppow(-1);
  return (tk * v.unit_inverse()).mul_ppow(-1 - shift_);
}

LocalElem LocalElem::with_precision(long abs_prec) const {
  LocalElem r = *this;
  if (abs_prec < r.prec_) {
    r.prec_ = abs_prec;
    r.normalize();
  }
  return r;
}

std::vector<std::vector<unsigned>> LocalElem::digits() const {
  const unsigned p = ring_->p();
  const long n = is_zero() ? 0 : rel_precision();
  std::vector<std::vector<unsigned>> out;
  for (const auto& c : c_) {
    std::vector<unsigned> d;
    mpz_class r = c;
    for (long i = 0; i < n; ++i) {
      d.push_back(unsigned(mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), p)));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string LocalElem::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(p^" << prec_ << ")";
    return os.str();
  }
  os << "p^" << shift_ << "*(";
  for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k];
  os << ") + O(p^" << prec_ << ")";
  return os.str();
}

LocalElem matrix_trace(const LocalElem& x) {
  const RingPtr& r = x.ring();
  std::vector<mpz_class> c(r->dim());
  if (x.is_zero()) return LocalElem(r, c, x.abs_precision(), x.abs_precision());
  for (unsigned k = 0; k < r->dim(); ++k)
    mpz_addmul(c[0].get_mpz_t(), x.coords()[k].get_mpz_t(),
               r->basis_trace(k).get_mpz_t());
  return LocalElem(r, std::move(c), x.shift(), x.abs_precision());
}

LocalElem matrix_norm(const LocalElem& x) {
  const RingPtr& r = x.ring();
  const unsigned n = r->dim(), p = r->p();
  const long dim = long(n);
  if (x.is_zero()) {
    const long P = x.abs_precision() * dim;
    return LocalElem(r, std::vector<mpz_class>(n), P, P);
  }
  const long rel = x.rel_precision();
  const mpz_class& mod = r->ppow(int(rel));
  // Column k of the multiplication matrix holds the coordinates of x * b_k.
  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n));
  for (unsigned k = 0; k < n; ++k) {
    std::vector<mpz_class> bk(n, 0);
    bk[k] = 1;
    const auto col = r->mul_raw(x.coords(), bk);
    for (unsigned i = 0; i < n; ++i) A[i][k] = col[i] % mod;
  }
  mpz_class det = 1;
  long vtot = 0;
  int sign = 1;
  for (unsigned c = 0; c < n; ++c) {
    long best = -1;
    unsigned bi = c, bj = c;
    for (unsigned i = c; i < n; ++i)
      for (unsigned j = c; j < n; ++j) {
        if (A[i][j] == 0) continue;
        const long v = vp(A[i][j], p);
        if (best < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best < 0) {
      const long P = x.shift() * dim + rel;
      return LocalElem(r, std::vector<mpz_class>(n), P, P);
    }
    if (bi != c) {
      std::swap(A[bi], A[c]);
      sign = -sign;
    }
    if (bj != c) {
      for (auto& row : A) std::swap(row[bj], row[c]);
      sign = -sign;
    }
    const mpz_class& pv = r->ppow(int(best));
    mpz_class unit = A[c][c] / pv;
    mpz_class uinv;
    mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    det = det * unit % mod;
    vtot += best;
    for (unsigned i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      const mpz_class f = (A[i][c] / pv) * uinv % mod;
      for (unsigned j = c; j < n; ++j) {
        A[i][j] -= f * A[c][j];
        mod_in_place(A[i][j], mod);
      }
    }
  }
  std::vector<mpz_class> out(n);
  out[0] = sign * det;
  const long s = x.shift() * dim;
  return LocalElem(r, std::move(out), s + vtot, s + rel);
}

LocalElem teichmuller(const RingPtr& r, const ff::FqElem& u) {
  if (u.is_zero()) throw DomainError("teichmuller: zero residue");
  const mpz_class q = nt::ipow(r->p(), r->unram_degree());
  LocalElem x = LocalElem::lift(r, u);
  for (int it = 0; it <= r->precision() + 2; ++it) {
    LocalElem y = x.pow(q);
    if ((y - x).is_zero()) return y;
    x = std::move(y);
  }
  throw InternalError("teichmuller: iteration did not stabilize");
}

LocalElem eval(const LocalPoly& h, const LocalElem& x) {
  if (h.empty()) return LocalElem::zero(x.ring());
  LocalElem acc = h.back();
  for (std::size_t i = h.size() - 1; i-- > 0;) acc = acc * x + h[i];
  return acc;
}

LocalPoly derivative(const LocalPoly& h) {
  LocalPoly d;
  for (std::size_t i = 1; i < h.size(); ++i) d.push_back(h[i].mul_int(long(i)));
  return d;
}

LocalElem hensel_root(const LocalPoly& h, const LocalElem& x0) {
  if (h.size() < 2) throw DomainError("hensel_root: constant polynomial");
  const LocalPoly dh = derivative(h);
  const LocalElem f0 = eval(h, x0);
  if (f0.is_zero()) return x0;
  const LocalElem d0 = eval(dh, x0);
  if (d0.is_zero() || f0.valuation() <= 2 * d0.valuation())
    throw DomainError("hensel_root: Hensel condition |h(x0)| < |h'(x0)|^2 fails");
  LocalElem x = x0;
  for (int it = 0; it < 200; ++it) {
    const LocalElem fx = eval(h, x);
    if (fx.is_zero()) return x;
    x = x - fx * eval(dh, x).inverse();
  }
  throw InternalError("hensel_root: Newton iteration did not converge");
}

}  // namespace sdnb::padic
