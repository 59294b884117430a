#pragma once

// Small exact integer helpers shared by every module. All 64-bit operations
// are overflow-checked and throw Error(Errc::overflow) instead of wrapping.

#include <cstdint>
#include <utility>
#include <vector>

namespace homok::arith {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, std::uint64_t exp);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

// Least nonnegative residue of a modulo m (m >= 1).
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m);
// Throws invalid_argument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

struct Bezout {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};
// g = gcd(a, b) >= 0 and a*x + b*y = g.
Bezout ext_gcd(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);
// Prime factorization of n >= 1, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

// Largest divisor of n coprime to p, and the p-part n / that.
std::int64_t prime_to_part(std::int64_t n, std::int64_t p);
std::int64_t p_part(std::int64_t n, std::int64_t p);

}  // namespace homok::arith
