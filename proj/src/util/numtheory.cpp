#include "sdnb/util/numtheory.hpp"

#include <numeric>

#include "sdnb/error.hpp"

namespace sdnb::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n0) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class n = n0;
  if (n < 1) throw DomainError("factor: argument must be positive");
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
    if (d > 100000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) break;
      throw InternalError("factor: cofactor too large for trial division");
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw DomainError("mult_order: not a unit");
  std::uint64_t k = 1, x = a % n;
  while (x != 1) {
    x = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * (a % n) % n);
    ++k;
  }
  return k;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  return std::lcm(a, b);
}

mpz_class ipow(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

unsigned valuation(const mpz_class& n, unsigned long p) {
  if (n == 0) throw DomainError("valuation of zero");
  mpz_class m = n;
  unsigned k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    ++k;
  }
  return k;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace sdnb::nt
