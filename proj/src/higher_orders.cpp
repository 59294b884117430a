#include "homok/higher_orders.hpp"

#include <numeric>
#include <string>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {

void require_prime(std::int64_t p) {
  if (!arith::is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
}

}  // namespace

int vp(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n == 0) throw Error(Errc::invalid_argument, "valuation of 0 is undefined");
  if (n < 0) n = -n;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int vp(const mpz_class& n, std::int64_t p) {
  require_prime(p);
  if (n == 0) throw Error(Errc::invalid_argument, "valuation of 0 is undefined");
  mpz_class m = abs(n);
  int e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= static_cast<unsigned long>(p);
    ++e;
  }
  return e;
}

std::int64_t vp_factorial(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n < 0) throw Error(Errc::invalid_argument, "factorial of a negative integer");
  std::int64_t total = 0;
  for (std::int64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

std::int64_t o_prime_power(std::int64_t p, int s, std::int64_t k) {
  require_prime(p);
  if (s < 1) throw Error(Errc::invalid_argument, "prime-power exponent must be >= 1");
  if (k < 1) throw Error(Errc::invalid_argument, "k must be >= 1");
  if (p != 2) return arith::checked_mul(k, arith::checked_pow(std::gcd(p, k), static_cast<std::uint64_t>(s)));
  std::int64_t r = arith::checked_mul(k, arith::checked_pow(std::gcd<std::int64_t>(2, k), static_cast<std::uint64_t>(s - 1)));
  return arith::checked_mul(r, std::gcd<std::int64_t>(4, 2 + k));
}

std::int64_t higher_order(std::int64_t d, std::int64_t k) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be >= 1");
  if (d == 0) return 0;
  const std::int64_t magnitude = d < 0 ? -d : d;
  std::int64_t result = k;
  for (auto [p, s] : arith::factorize(magnitude)) result = arith::checked_mul(result, o_prime_power(p, s, k) / k);
  return result;
}

OracleResult higher_order_oracle_run(std::int64_t d, std::int64_t k, const OraclePolicy& policy) {
  if (d == 0) throw Error(Errc::invalid_argument, "the oracle needs d != 0");
  if (k < 1) throw Error(Errc::invalid_argument, "k must be >= 1");
  if (policy.min_terms < 1 || policy.stable_window < 1 || policy.min_terms > policy.max_terms)
    throw Error(Errc::invalid_argument, "invalid oracle policy");
  const auto exponent = static_cast<unsigned long>(d < 0 ? -d : d);
  // A prime p not dividing k divides every term only if (p - 1) | d, and the
  // term with 1 + a k = 0 (mod p) appears by a = p - 1 <= |d|.
  const auto floor_terms = static_cast<std::int64_t>(exponent);
  if (floor_terms > policy.max_terms)
    throw Error(Errc::not_stabilized, "max_terms " + std::to_string(policy.max_terms) + " is below |d|=" +
                                          std::to_string(floor_terms));
  mpz_class g = 0, u, term;
  int stable = 0;
  for (int a = 1; a <= policy.max_terms; ++a) {
    u = 1;
    u += mpz_class(static_cast<long>(a)) * static_cast<long>(k);
    mpz_pow_ui(term.get_mpz_t(), u.get_mpz_t(), exponent);
    term -= 1;
    mpz_class next = gcd(g, term);
    stable = (next == g) ? stable + 1 : 0;
    g = std::move(next);
    if (a >= policy.min_terms && a >= floor_terms && stable >= policy.stable_window) return {g, a};
  }
  throw Error(Errc::not_stabilized, "gcd for d=" + std::to_string(d) + ", k=" + std::to_string(k) +
                                        " did not stabilize within " + std::to_string(policy.max_terms) + " terms");
}

mpz_class higher_order_oracle(std::int64_t d, std::int64_t k, const OraclePolicy& policy) {
  return higher_order_oracle_run(d, k, policy).value;
}

}  // namespace homok
