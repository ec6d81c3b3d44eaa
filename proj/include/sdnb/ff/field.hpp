#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sdnb::ff {

using Coeff = std::uint32_t;
using CoeffVec = std::vector<Coeff>;

class FqElem;

namespace detail {
struct FieldData {
  unsigned p = 0;
  unsigned m = 0;
  CoeffVec modulus;  // monic, low to high, size m + 1
  // Y^m = sum of coeff * Y^index over these pairs.
  std::vector<std::pair<unsigned, Coeff>> taps;
  std::vector<Coeff> inv;  // inverses mod p, inv[0] unused
};
}  // namespace detail

// F_p[Y]/(modulus). Copies share the same immutable data.
class FqField {
 public:
  FqField() = default;

  // Lexicographically least monic irreducible modulus of degree m.
  static FqField make(unsigned p, unsigned m);
  // Explicit modulus (monic, low to high); rejected unless irreducible.
  static FqField from_modulus(unsigned p, CoeffVec modulus);

  bool valid() const { return static_cast<bool>(data_); }
  unsigned characteristic() const { return data_->p; }
  unsigned degree() const { return data_->m; }
  const CoeffVec& modulus() const { return data_->modulus; }
  mpz_class size() const;

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(long v) const;
  FqElem element(CoeffVec coeffs) const;
  FqElem gen() const;  // the class of Y
  // The k-th element when the field is listed in lexicographic order of
  // (c_0, ..., c_{m-1}).
  FqElem lex_element(const mpz_class& k) const;

  const detail::FieldData& data() const { return *data_; }

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.data_ == b.data_ ||
           (a.data_ && b.data_ && a.data_->p == b.data_->p &&
            a.data_->modulus == b.data_->modulus);
  }

 private:
  explicit FqField(std::shared_ptr<const detail::FieldData> d)
      : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

FqField make_field(unsigned p, unsigned m);

// Ben-Or irreducibility test over F_p, f monic low to high.
bool is_irreducible(unsigned p, const CoeffVec& f);

class FqElem {
 public:
  FqElem() = default;
  FqElem(FqField f, CoeffVec c);

  const FqField& field() const { return field_; }
  const CoeffVec& coeffs() const { return c_; }
  Coeff operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem scaled(Coeff k) const;

  FqElem inverse() const;
  FqElem pow(const mpz_class& e) const;
  FqElem pow(std::uint64_t e) const;
  FqElem square() const { return *this * *this; }
  // x^(p^k)
  FqElem frobenius(unsigned k = 1) const;

  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.c_ == b.c_;
  }
  // c_0 is the most significant coefficient.
  friend bool operator<(const FqElem& a, const FqElem& b) {
    return a.c_ < b.c_;
  }

  std::string to_string() const;

 private:
  FqField field_;
  CoeffVec c_;
};

// x^((p^base_degree)^t)
FqElem frobenius_pow(const FqElem& x, unsigned t, unsigned base_degree);

// True iff x lies in the subfield F_{p^t}.
bool in_subfield(const FqElem& x, unsigned t);

// Sum of x^((p^sub_degree)^j), j < rel_degree. x must lie in F_{p^(sub*rel)}.
FqElem rel_trace(const FqElem& x, unsigned sub_degree, unsigned rel_degree);

// Product of the same conjugates.
FqElem rel_norm(const FqElem& x, unsigned sub_degree, unsigned rel_degree);

}  // namespace sdnb::ff
