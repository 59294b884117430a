#pragma once

// Higher orders o_d(k) = gcd{u^d - 1 : u = 1 (mod k)}, by closed form and by
// a direct big-integer gcd oracle, plus p-adic valuation helpers.

#include <cstdint>

#include <gmpxx.h>

namespace homok {

/// Stopping rule for the oracle's gcd over u = 1 + a*k, a = 1, 2, ...
struct OraclePolicy {
  int min_terms = 16;
  int stable_window = 8;
  int max_terms = 512;
};

/// Largest e with p^e | n. Throws for n == 0 or composite p.
int vp(std::int64_t n, std::int64_t p);
int vp(const mpz_class& n, std::int64_t p);

/// sum_{i >= 1} floor(n / p^i), the p-adic valuation of n!.
std::int64_t vp_factorial(std::int64_t n, std::int64_t p);

/// o_{p^s}(k): k (p,k)^s for odd p, k (2,k)^(s-1) (4,2+k) for p = 2.
std::int64_t o_prime_power(std::int64_t p, int s, std::int64_t k);

/// o_d(k). o_0(k) = 0 and o_{+-1}(k) = k; otherwise multiplicative over the
/// prime-power factors of |d| relative to k.
std::int64_t higher_order(std::int64_t d, std::int64_t k);

struct OracleResult {
  mpz_class value;
  int terms = 0;
};

/// gcd of (1 + a k)^|d| - 1 over a = 1..N, growing N until the gcd is unchanged
/// for `stable_window` steps with N >= max(min_terms, |d|). Throws
/// not_stabilized past max_terms.
OracleResult higher_order_oracle_run(std::int64_t d, std::int64_t k, const OraclePolicy& policy = {});
mpz_class higher_order_oracle(std::int64_t d, std::int64_t k, const OraclePolicy& policy = {});

}  // namespace homok
