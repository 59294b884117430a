#pragma once

// CSV tables of Hmg, Coc and Hmg/Coc over a family of groups indexed by a
// prime p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homok/group.hpp"

namespace homok {

/// A group spec whose terms may mention p: `p`, `p**E`, or an integer, each
/// optionally repeated with `^k`. Shorthands: `homocyclic:E` is
/// `p**E,p**E`, `elementary:N` is `p^N`.
class FamilyTemplate {
 public:
  static FamilyTemplate parse(std::string_view text);
  std::string instantiate(std::int64_t p) const;
  const std::string& text() const noexcept { return text_; }

 private:
  struct Term {
    bool uses_p = false;
    std::int64_t value = 0;  // constant, or exponent of p
    std::int64_t repeat = 1;
  };
  std::string text_;
  std::vector<Term> terms_;
};

/// "3,5,7" or "3..31" (every prime in the range), or a mix.
std::vector<std::int64_t> parse_prime_list(std::string_view text);

struct TableResult {
  std::string csv;
  std::vector<std::string> skipped;  // one reason per row left out
};

TableResult generate_table(const FamilyTemplate& family, const std::vector<std::int64_t>& primes,
                           std::int64_t order_cap = kDefaultOrderCap);

inline constexpr const char* kTableHeader = "prime,group,hmg,coc_order,sk1,theorem_4_1_applies";

}  // namespace homok
