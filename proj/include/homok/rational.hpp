#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace homok {

/// An element of Q/Z stored as a reduced fraction num/den with 0 <= num < den.
/// Zero is 0/1.
class RationalResidue {
 public:
  RationalResidue() = default;
  RationalResidue(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  /// Additive order in Q/Z, which is the reduced denominator.
  std::int64_t order() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  RationalResidue operator+(const RationalResidue& other) const;
  RationalResidue operator-(const RationalResidue& other) const;
  RationalResidue operator-() const;
  RationalResidue& operator+=(const RationalResidue& other) { return *this = *this + other; }
  RationalResidue scaled(std::int64_t n) const;
  RationalResidue scaled(const mpz_class& n) const;

  friend bool operator==(const RationalResidue&, const RationalResidue&) = default;
  friend auto operator<=>(const RationalResidue&, const RationalResidue&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace homok
