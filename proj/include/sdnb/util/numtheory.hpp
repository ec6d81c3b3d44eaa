#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sdnb::nt {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Multiplicative order of a modulo n, gcd(a, n) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

mpz_class ipow(unsigned long base, unsigned long e);

// Largest k with p^k | n, n != 0.
unsigned valuation(const mpz_class& n, unsigned long p);
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace sdnb::nt
