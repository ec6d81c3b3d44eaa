#pragma once

#include <vector>

#include "sdnb/ff/field.hpp"

namespace sdnb::ff {

// Dense univariate polynomial over an FqField, coefficients low to high.
class FqPoly {
 public:
  explicit FqPoly(FqField f) : field_(std::move(f)) {}
  FqPoly(FqField f, std::vector<FqElem> coeffs);

  static FqPoly monomial(const FqField& f, const FqElem& c, std::size_t k);
  static FqPoly x_minus(const FqElem& a);  // X - a
  // Lift a polynomial with F_p coefficients into f.
  static FqPoly from_fp(const FqField& f, const CoeffVec& c);

  const FqField& field() const { return field_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const FqElem& lead() const { return c_.back(); }
  FqElem coeff(std::size_t i) const;

  FqElem operator()(const FqElem& x) const;
  FqPoly derivative() const;
  FqPoly monic() const;

  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly operator*(const FqElem& k) const;
  friend bool operator==(const FqPoly& a, const FqPoly& b) {
    return a.c_ == b.c_;
  }

  // Coefficient-wise x -> x^(p^k).
  FqPoly frobenius_coeffs(unsigned k) const;

 private:
  void trim();
  FqField field_;
  std::vector<FqElem> c_;
};

void divrem(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
FqPoly gcd(FqPoly a, FqPoly b);  // monic, or zero
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& f);
FqPoly powmod(const FqPoly& a, const mpz_class& e, const FqPoly& f);

// Precomputed X^(i p) mod f for the map h -> h^p mod f.
class FrobeniusMod {
 public:
  explicit FrobeniusMod(const FqPoly& f);
  FqPoly apply(const FqPoly& h) const;          // h^p mod f
  FqPoly apply(const FqPoly& h, unsigned k) const;  // h^(p^k) mod f
 private:
  FqPoly f_;
  std::vector<FqPoly> table_;
};

}  // namespace sdnb::ff
