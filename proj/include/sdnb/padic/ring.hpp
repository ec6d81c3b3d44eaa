#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sdnb/ff/field.hpp"

namespace sdnb::padic {

class LocalElem;

// O = Z_p[y]/(h) [t]/(E): h lifts the lex-least modulus of F_{p^F}, E is
// Eisenstein over Z_p of degree e (E = t when e = 1). Basis y^i t^j has
// index j * F + i. Coordinates are stored modulo p^N.
class LocalRing {
 public:
  static std::shared_ptr<const LocalRing> make(unsigned p, unsigned F,
                                               std::vector<mpz_class> eisenstein,
                                               int precision);
  static std::shared_ptr<const LocalRing> unramified(unsigned p, unsigned F,
                                                     int precision) {
    return make(p, F, {0, 1}, precision);
  }

  unsigned p() const { return p_; }
  unsigned unram_degree() const { return F_; }
  unsigned ram_degree() const { return e_; }
  unsigned dim() const { return F_ * e_; }
  int precision() const { return N_; }
  const mpz_class& pN() const { return pN_; }
  const mpz_class& ppow(int k) const;  // p^k, 0 <= k <= N
  const std::vector<mpz_class>& unram_modulus() const { return h_; }
  const std::vector<mpz_class>& eisenstein() const { return E_; }
  const ff::FqField& residue_field() const { return residue_; }
  // Tr_{O/Z_p} of basis element k, reduced mod p^N.
  const mpz_class& basis_trace(unsigned k) const { return traces_[k]; }

  std::string describe() const;

  // Raw product of coordinate vectors, reduced mod p^N.
  std::vector<mpz_class> mul_raw(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b) const;

 private:
  LocalRing() = default;
  unsigned p_ = 0, F_ = 1, e_ = 1;
  int N_ = 0;
  mpz_class pN_;
  std::vector<mpz_class> pows_;
  std::vector<mpz_class> h_, E_;
  ff::FqField residue_;
  std::vector<mpz_class> traces_;
};

using RingPtr = std::shared_ptr<const LocalRing>;

// Truncated element p^shift * sum c_k b_k, known modulo p^prec (absolute,
// in powers of p). Normalized so that some c_k is prime to p, unless the
// element is zero to its precision (then c = 0 and shift = prec).
class LocalElem {
 public:
  LocalElem() = default;
  LocalElem(RingPtr ring, std::vector<mpz_class> c, long shift, long prec);

  static LocalElem zero(const RingPtr& r);
  static LocalElem one(const RingPtr& r);
  static LocalElem from_int(const RingPtr& r, long v);
  static LocalElem from_mpz(const RingPtr& r, const mpz_class& v);
  static LocalElem y(const RingPtr& r);
  static LocalElem t(const RingPtr& r);
  static LocalElem basis(const RingPtr& r, unsigned k);
  // Coordinate-wise lift of a residue field element.
  static LocalElem lift(const RingPtr& r, const ff::FqElem& u);

  const RingPtr& ring() const { return ring_; }
  const std::vector<mpz_class>& coords() const { return c_; }
  long shift() const { return shift_; }
  long abs_precision() const { return prec_; }
  long rel_precision() const { return prec_ - shift_; }
  bool valid() const { return static_cast<bool>(ring_); }

  bool is_zero() const;  // zero to its precision
  // v_L in units where v_L(t) = 1, v_L(p) = e. PrecisionError if zero.
  long valuation() const;
  // min over coordinates of v_p, plus shift (the p-content).
  long content() const;
  // Content, or abs precision when the element is zero.
  long content_or_precision() const;

  ff::FqElem residue() const;  // requires valuation >= 0

  LocalElem operator-() const;
  LocalElem& operator+=(const LocalElem& o);
  LocalElem& operator-=(const LocalElem& o);
  friend LocalElem operator+(LocalElem a, const LocalElem& b) { return a += b; }
  friend LocalElem operator-(LocalElem a, const LocalElem& b) { return a -= b; }
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);

  LocalElem mul_int(const mpz_class& k) const;
  LocalElem mul_ppow(long k) const;  // times p^k, k may be negative
  LocalElem pow(const mpz_class& e) const;
  LocalElem pow(unsigned long e) const;
  LocalElem inverse() const;
  LocalElem unit_inverse() const;  // valuation must be 0
  LocalElem with_precision(long abs_prec) const;

  // Digits of each coordinate, base p, low to high, rel_precision() of them.
  std::vector<std::vector<unsigned>> digits() const;
  std::string to_string() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<mpz_class> c_;
  long shift_ = 0;
  long prec_ = 0;
};

// Tr_{O/Z_p}(x) as a constant of the same ring.
LocalElem matrix_trace(const LocalElem& x);
// N_{O/Z_p}(x) as a constant of the same ring, via valuation-pivot elimination.
LocalElem matrix_norm(const LocalElem& x);

LocalElem teichmuller(const RingPtr& r, const ff::FqElem& u);

// Polynomial with LocalElem coefficients, low to high.
using LocalPoly = std::vector<LocalElem>;
LocalElem eval(const LocalPoly& h, const LocalElem& x);
LocalPoly derivative(const LocalPoly& h);
// Newton iteration; DomainError when v(h(x0)) <= 2 v(h'(x0)).
LocalElem hensel_root(const LocalPoly& h, const LocalElem& x0);

}  // namespace sdnb::padic
