#pragma once

#include <utility>
#include <vector>

#include "sdnb/error.hpp"
#include "sdnb/grpalg/group.hpp"

namespace sdnb::grpalg {

// Specialized per coefficient type:
//   static bool is_unit(const T&);
//   static T inverse(const T&);      // for units
//   static bool equal(const T&, const T&);
template <class T>
struct CoeffTraits;

// Element of R[G]; coefficient i belongs to group element i.
template <class T>
class GroupAlgebraElem {
 public:
  GroupAlgebraElem() = default;
  GroupAlgebraElem(GroupPtr g, std::vector<T> coeffs)
      : group_(std::move(g)), c_(std::move(coeffs)) {
    if (c_.size() != group_->order())
      throw ParameterError("GroupAlgebraElem: coefficient count mismatch");
  }

  // c * g where g is a group element index.
  static GroupAlgebraElem monomial(GroupPtr g, std::size_t elem, const T& c) {
    const T zero = c - c;
    std::vector<T> v(g->order(), zero);
    v[elem] = c;
    return GroupAlgebraElem(std::move(g), std::move(v));
  }
  static GroupAlgebraElem scalar(GroupPtr g, const T& c) {
    return monomial(std::move(g), 0, c);
  }

  const GroupPtr& group() const { return group_; }
  const AbelianGroup& grp() const { return *group_; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  std::size_t size() const { return c_.size(); }
  T zero_coeff() const { return c_[0] - c_[0]; }

  GroupAlgebraElem involution() const {
    std::vector<T> v = c_;
    for (std::size_t g = 0; g < c_.size(); ++g) v[group_->inv(g)] = c_[g];
    return GroupAlgebraElem(group_, std::move(v));
  }

  T augmentation() const {
    T s = c_[0];
    for (std::size_t g = 1; g < c_.size(); ++g) s = s + c_[g];
    return s;
  }

  GroupAlgebraElem& operator+=(const GroupAlgebraElem& o) {
    check_same(o);
    for (std::size_t g = 0; g < c_.size(); ++g) c_[g] = c_[g] + o.c_[g];
    return *this;
  }
  GroupAlgebraElem& operator-=(const GroupAlgebraElem& o) {
    check_same(o);
    for (std::size_t g = 0; g < c_.size(); ++g) c_[g] = c_[g] - o.c_[g];
    return *this;
  }
  friend GroupAlgebraElem operator+(GroupAlgebraElem a, const GroupAlgebraElem& b) {
    return a += b;
  }
  friend GroupAlgebraElem operator-(GroupAlgebraElem a, const GroupAlgebraElem& b) {
    return a -= b;
  }
  friend GroupAlgebraElem operator*(const GroupAlgebraElem& a,
                                    const GroupAlgebraElem& b) {
    a.check_same(b);
    const AbelianGroup& G = *a.group_;
    std::vector<T> v(a.c_.size(), a.zero_coeff());
    std::vector<bool> touched(a.c_.size(), false);
    for (std::size_t g = 0; g < a.c_.size(); ++g) {
      for (std::size_t h = 0; h < b.c_.size(); ++h) {
        const std::size_t k = G.mul(g, h);
        if (touched[k]) {
          v[k] = v[k] + a.c_[g] * b.c_[h];
        } else {
          v[k] = a.c_[g] * b.c_[h];
          touched[k] = true;
        }
      }
    }
    return GroupAlgebraElem(a.group_, std::move(v));
  }
  GroupAlgebraElem scaled(const T& k) const {
    std::vector<T> v = c_;
    for (auto& x : v) x = x * k;
    return GroupAlgebraElem(group_, std::move(v));
  }

  GroupAlgebraElem pow(unsigned long e) const {
    GroupAlgebraElem r = scalar(group_, one_like());
    GroupAlgebraElem b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  bool equals(const GroupAlgebraElem& o) const {
    check_same(o);
    for (std::size_t g = 0; g < c_.size(); ++g)
      if (!CoeffTraits<T>::equal(c_[g], o.c_[g])) return false;
    return true;
  }
  bool is_one() const { return equals(scalar(group_, one_like())); }
  bool is_j_fixed() const { return equals(involution()); }

  T one_like() const { return CoeffTraits<T>::one_like(c_[0]); }

 private:
  void check_same(const GroupAlgebraElem& o) const {
    if (!(*group_ == *o.group_))
      throw ParameterError("group algebra elements over different groups");
  }
  GroupPtr group_;
  std::vector<T> c_;
};

// Inverse by Gaussian elimination on the regular representation; pivots must
// be units of the coefficient ring. Throws NonUnitError for non-units.
template <class T>
GroupAlgebraElem<T> invert_unit(const GroupAlgebraElem<T>& a) {
  using Tr = CoeffTraits<T>;
  const AbelianGroup& G = a.grp();
  const std::size_t n = G.order();
  const T zero = a.zero_coeff();
  const T one = a.one_like();
  // (a z)_g = sum_h a_{g h^-1} z_h
  std::vector<std::vector<T>> M(n, std::vector<T>(n + 1, zero));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) M[g][h] = a[G.mul(g, G.inv(h))];
    M[g][n] = g == 0 ? one : zero;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !Tr::is_unit(M[piv][col])) ++piv;
    if (piv == n) throw NonUnitError("invert_unit: element is not a unit");
    std::swap(M[piv], M[col]);
    const T k = Tr::inverse(M[col][col]);
    for (std::size_t j = col; j <= n; ++j) M[col][j] = M[col][j] * k;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || Tr::is_zero(M[r][col])) continue;
      const T f = M[r][col];
      for (std::size_t j = col; j <= n; ++j) M[r][j] = M[r][j] - f * M[col][j];
    }
  }
  std::vector<T> z(n, zero);
  for (std::size_t h = 0; h < n; ++h) z[h] = M[h][n];
  return GroupAlgebraElem<T>(a.group(), std::move(z));
}

// a o x = sum_g a_g g(x); `act(g, x)` applies group element g.
template <class T, class X, class Act>
X group_act(const GroupAlgebraElem<T>& a, const X& x, Act&& act) {
  X acc = act(std::size_t(0), x) * a[0];
  for (std::size_t g = 1; g < a.size(); ++g) acc = acc + act(g, x) * a[g];
  return acc;
}

// R(x) = sum_g Tr(x g(x)) g for an extension `ext` with group(), apply(g, x)
// and trace(x). Asserts J-fixedness and eps(R) = Tr(x)^2.
template <class Ext, class X>
auto resolvend_gram(const X& x, const Ext& ext) {
  using T = decltype(ext.trace(x));
  const GroupPtr& G = ext.group();
  std::vector<T> v;
  v.reserve(G->order());
  for (std::size_t g = 0; g < G->order(); ++g)
    v.push_back(ext.trace(x * ext.apply(g, x)));
  GroupAlgebraElem<T> R(G, std::move(v));
  SDNB_CHECK(R.is_j_fixed(), "resolvend is not J-fixed");
  const T tr = ext.trace(x);
  SDNB_CHECK(CoeffTraits<T>::equal(R.augmentation(), tr * tr),
             "augmentation of resolvend differs from Tr(x)^2");
  return R;
}

}  // namespace sdnb::grpalg
