#include "sdnb/grpalg/group.hpp"

#include <algorithm>
#include <set>

#include "sdnb/error.hpp"

namespace sdnb::grpalg {

AbelianGroup::AbelianGroup(std::vector<unsigned> orders)
    : orders_(std::move(orders)) {
  for (unsigned n : orders_) {
    if (n == 0) throw ParameterError("AbelianGroup: factor order must be >= 1");
    size_ *= n;
  }
  if (size_ > 4096) throw ParameterError("AbelianGroup: group too large");
  mul_.resize(size_ * size_);
  inv_.resize(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    const auto ta = tuple(a);
    for (std::size_t b = 0; b < size_; ++b) {
      auto tb = tuple(b);
      for (std::size_t i = 0; i < orders_.size(); ++i)
        tb[i] = (ta[i] + tb[i]) % orders_[i];
      mul_[a * size_ + b] = index(tb);
    }
    auto ti = ta;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      ti[i] = (orders_[i] - ta[i]) % orders_[i];
    inv_[a] = index(ti);
  }
}

std::shared_ptr<const AbelianGroup> AbelianGroup::cyclic(unsigned n) {
  return std::make_shared<const AbelianGroup>(std::vector<unsigned>{n});
}

std::shared_ptr<const AbelianGroup> AbelianGroup::product(
    std::vector<unsigned> orders) {
  return std::make_shared<const AbelianGroup>(std::move(orders));
}

std::vector<unsigned> AbelianGroup::tuple(std::size_t idx) const {
  std::vector<unsigned> t(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    t[i] = unsigned(idx % orders_[i]);
    idx /= orders_[i];
  }
  return t;
}

std::size_t AbelianGroup::index(const std::vector<unsigned>& t) const {
  if (t.size() != orders_.size()) throw ParameterError("group tuple arity");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx = idx * orders_[i] + (t[i] % orders_[i]);
  return idx;
}

std::size_t AbelianGroup::power(std::size_t a, long k) const {
  long n = long(size_);
  k = ((k % n) + n) % n;
  std::size_t r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::size_t> AbelianGroup::subgroup(
    const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> h{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(h.begin(), h.end());
    for (std::size_t x : cur)
      for (std::size_t g : gens)
        if (h.insert(mul(x, g)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

}  // namespace sdnb::grpalg
