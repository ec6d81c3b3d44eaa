#pragma once

#include <memory>
#include <vector>

namespace sdnb::grpalg {

// Finite abelian group C_{n_1} x ... x C_{n_k}. Elements are numbered by
// mixed radix with the first factor varying slowest.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<unsigned> orders);
  static std::shared_ptr<const AbelianGroup> cyclic(unsigned n);
  static std::shared_ptr<const AbelianGroup> product(std::vector<unsigned> orders);

  const std::vector<unsigned>& factors() const { return orders_; }
  std::size_t order() const { return size_; }

  std::vector<unsigned> tuple(std::size_t index) const;
  std::size_t index(const std::vector<unsigned>& tuple) const;

  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return 0; }
  std::size_t power(std::size_t a, long k) const;

  // Subgroup generated by the given elements, sorted.
  std::vector<std::size_t> subgroup(const std::vector<std::size_t>& gens) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<unsigned> orders_;
  std::size_t size_ = 1;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

}  // namespace sdnb::grpalg
