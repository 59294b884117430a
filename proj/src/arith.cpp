#include "homok/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homok/error.hpp"

namespace homok {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::not_stabilized: return "not_stabilized";
    case Errc::overflow: return "overflow";
    case Errc::compute: return "compute";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace homok

namespace homok::arith {

namespace {
[[noreturn]] void overflow(const char* op) {
  throw Error(Errc::overflow, std::string("64-bit overflow in ") + op);
}
}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::uint64_t exp) {
  std::int64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m);
  return static_cast<std::int64_t>(r % m);
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    exp >>= 1U;
  }
  return result;
}

Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  Bezout e = ext_gcd(mod(a, m), m);
  if (e.g != 1) {
    throw Error(Errc::invalid_argument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(e.x, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw Error(Errc::invalid_argument, "factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t existing = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::int64_t prime_to_part(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

std::int64_t p_part(std::int64_t n, std::int64_t p) { return n / prime_to_part(n, p); }

}  // namespace homok::arith
