#include "homok/rational.hpp"

#include <numeric>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

RationalResidue::RationalResidue(std::int64_t num, std::int64_t den) {
  if (den < 1) throw Error(Errc::invalid_argument, "residue denominator must be >= 1");
  num = arith::mod(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalResidue RationalResidue::operator+(const RationalResidue& other) const {
  std::int64_t l = arith::checked_lcm(den_, other.den_);
  std::int64_t a = arith::mulmod(num_, l / den_, l);
  std::int64_t b = arith::mulmod(other.num_, l / other.den_, l);
  return {arith::mod(a + b, l), l};
}

RationalResidue RationalResidue::operator-() const { return {den_ - num_, den_}; }

RationalResidue RationalResidue::operator-(const RationalResidue& other) const {
  return *this + (-other);
}

RationalResidue RationalResidue::scaled(std::int64_t n) const {
  return {arith::mulmod(num_, n, den_), den_};
}

RationalResidue RationalResidue::scaled(const mpz_class& n) const {
  mpz_class r = n % den_;
  if (r < 0) r += den_;
  return scaled(static_cast<std::int64_t>(r.get_si()));
}

std::string RationalResidue::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace homok
