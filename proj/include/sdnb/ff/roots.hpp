#pragma once

#include <map>
#include <set>
#include <vector>

#include "sdnb/ff/field.hpp"
#include "sdnb/ff/poly.hpp"

namespace sdnb::ff {

// Deterministic stream of distinct elements of the subfield F_{p^t}:
// traces down to F_{p^t} of the field elements in lexicographic order.
class SubfieldTrials {
 public:
  SubfieldTrials(FqField field, unsigned t);
  FqElem next();

 private:
  FqField field_;
  unsigned t_;
  mpz_class k_ = 0;
  std::vector<FqElem> basis_traces_;  // Tr(Y^i), computed lazily
  std::set<CoeffVec> seen_;
};

// All distinct roots of f lying in F_{p^root_degree}, sorted lexicographically.
std::vector<FqElem> find_roots(const FqPoly& f, unsigned root_degree);
std::vector<FqElem> find_roots(const FqPoly& f);

// Lexicographically least root; NotFoundError if there is none.
FqElem find_root(const FqPoly& f, unsigned root_degree);
FqElem find_root(const FqPoly& f);

// a must lie in F_{p^t}; squareness is decided inside F_{p^t}.
bool is_square(const FqElem& a, unsigned t);
bool is_square(const FqElem& a);
// Lex-least of the two roots; DomainError for non-squares.
FqElem sqrt_ff(const FqElem& a, unsigned t);
FqElem sqrt_ff(const FqElem& a);

// Lexicographically least element of order |F| - 1.
FqElem mult_generator(const FqField& field);

// Lexicographically least primitive d-th root of unity in F_{p^t}.
FqElem primitive_root_of_unity(const FqField& field, unsigned d, unsigned t);

// All roots of X^d - a inside F_{p^t}, sorted lexicographically.
std::vector<FqElem> binomial_roots(const FqElem& a, unsigned d, unsigned t);

// Multiplicative order of a nonzero x in F_{p^t}.
mpz_class element_order(const FqElem& x, unsigned t);

}  // namespace sdnb::ff
