#include "sdnb/ff/embedding.hpp"

#include "sdnb/error.hpp"
#include "sdnb/ff/poly.hpp"
#include "sdnb/ff/roots.hpp"
#include "sdnb/util/numtheory.hpp"

namespace sdnb::ff {

namespace {

Coeff inv_p(Coeff a, unsigned p) {
  return Coeff(nt::powmod(a, p - 2, p));
}

// Gauss-Jordan inverse mod p; empty result if singular.
std::vector<std::vector<Coeff>> invert_mod_p(std::vector<std::vector<Coeff>> a,
                                             unsigned p) {
  const std::size_t n = a.size();
  std::vector<std::vector<Coeff>> inv(n, std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Coeff k = inv_p(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = Coeff(std::uint64_t(a[col][j]) * k % p);
      inv[col][j] = Coeff(std::uint64_t(inv[col][j]) * k % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::uint64_t f = p - a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = Coeff((a[r][j] + f * a[col][j]) % p);
        inv[r][j] = Coeff((inv[r][j] + f * inv[col][j]) % p);
      }
    }
  }
  return inv;
}

}  // namespace

SubfieldEmbedding::SubfieldEmbedding(FqField small, FqField big)
    : small_(std::move(small)), big_(std::move(big)) {
  const unsigned p = small_.characteristic();
  const unsigned m = small_.degree(), M = big_.degree();
  if (big_.characteristic() != p || M % m != 0)
    throw DomainError("SubfieldEmbedding: degree must divide");
  beta_ = m == 1 ? big_.zero()
                 : find_root(FqPoly::from_fp(big_, small_.modulus()), m);
  powers_.push_back(big_.one());
  for (unsigned i = 1; i < m; ++i) powers_.push_back(powers_.back() * beta_);

  // Choose m independent rows of the M x m matrix [beta^i]_r.
  std::vector<std::vector<Coeff>> echelon;
  std::vector<std::size_t> lead;
  for (unsigned r = 0; r < M && pivot_row_.size() < m; ++r) {
    std::vector<Coeff> row(m);
    for (unsigned i = 0; i < m; ++i) row[i] = powers_[i][r];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Coeff c = row[lead[k]];
      if (!c) continue;
      for (unsigned j = 0; j < m; ++j)
        row[j] = Coeff((row[j] + std::uint64_t(p - c) * echelon[k][j]) % p);
    }
    std::size_t l = 0;
    while (l < m && row[l] == 0) ++l;
    if (l == m) continue;
    const Coeff k = inv_p(row[l], p);
    for (auto& v : row) v = Coeff(std::uint64_t(v) * k % p);
    echelon.push_back(row);
    lead.push_back(l);
    pivot_row_.push_back(r);
  }
  SDNB_CHECK(pivot_row_.size() == m, "embedding powers not independent");
  std::vector<std::vector<Coeff>> sub(m, std::vector<Coeff>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned i = 0; i < m; ++i) sub[a][i] = powers_[i][pivot_row_[a]];
  solve_rows_ = invert_mod_p(std::move(sub), p);
  SDNB_CHECK(!solve_rows_.empty(), "embedding submatrix singular");
}

FqElem SubfieldEmbedding::embed(const FqElem& s) const {
  if (!(s.field() == small_)) throw DomainError("embed: wrong field");
  FqElem acc = big_.zero();
  for (unsigned i = 0; i < small_.degree(); ++i)
    if (s[i]) acc += powers_[i].scaled(s[i]);
  return acc;
}

FqElem SubfieldEmbedding::restrict(const FqElem& b) const {
  if (!(b.field() == big_)) throw DomainError("restrict: wrong field");
  const unsigned p = small_.characteristic(), m = small_.degree();
  CoeffVec s(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (unsigned a = 0; a < m; ++a)
      acc = (acc + std::uint64_t(solve_rows_[i][a]) * b[pivot_row_[a]]) % p;
    s[i] = Coeff(acc);
  }
  FqElem out = small_.element(std::move(s));
  if (!(embed(out) == b))
    throw DomainError("restrict: element not in the embedded subfield");
  return out;
}

}  // namespace sdnb::ff
