#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homok/rational.hpp"
#include "homok/snf.hpp"

namespace homok {

inline constexpr std::int64_t kDefaultOrderCap = 100000;

/// Index of an element in the row-major (lexicographic) order over residue
/// tuples; the last factor varies fastest.
using ElementIndex = std::size_t;

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group presented as a direct sum of cyclic factors.
class Group {
 public:
  /// The trivial group.
  Group();

  static Group from_factor_orders(std::vector<std::int64_t> factor_orders,
                                  std::int64_t order_cap = kDefaultOrderCap);
  /// Parses `term ("," term)*` with `term := INT | INT "^" INT`.
  static Group parse(std::string_view spec, std::int64_t order_cap = kDefaultOrderCap);
  /// The group presented by its own invariant factors.
  static Group from_invariants(const InvariantFactors& inv, std::int64_t order_cap = kDefaultOrderCap);

  const std::vector<std::int64_t>& factor_orders() const noexcept { return factor_orders_; }
  const InvariantFactors& invariant_factors() const noexcept { return invariants_; }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  std::size_t rank() const noexcept { return factor_orders_.size(); }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Presented spec, e.g. "9,3".
  std::string spec() const;
  /// Spec of the invariant-factor form, e.g. "3,9"; "1" for the trivial group.
  std::string canonical_spec() const;

  GroupElement zero() const;
  GroupElement element(ElementIndex index) const;
  ElementIndex index_of(const GroupElement& g) const;
  /// Throws invalid_argument unless g has the right shape and reduced residues.
  void validate(const GroupElement& g) const;
  GroupElement make_element(std::vector<std::int64_t> residues) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(std::int64_t n, const GroupElement& a) const;

  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex scale(std::int64_t n, ElementIndex a) const;

  std::int64_t element_order(const GroupElement& g) const;
  std::int64_t element_order(ElementIndex g) const;

  friend bool operator==(const Group& a, const Group& b) { return a.factor_orders_ == b.factor_orders_; }

 private:
  std::vector<std::int64_t> factor_orders_;
  std::vector<std::size_t> strides_;
  InvariantFactors invariants_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

std::int64_t element_order(const Group& G, const GroupElement& g);

/// One cyclic subgroup with its lexicographically least generator.
struct CyclicSubgroupRecord {
  GroupElement canonical_generator;
  ElementIndex generator_index = 0;
  std::int64_t subgroup_order = 1;
  std::vector<ElementIndex> members;  // sorted
};

/// Every cyclic subgroup of a group, plus for each element the record it
/// generates and the multiplier n with g = n * x (gcd(n, o(x)) = 1).
class CyclicSubgroupIndex {
 public:
  explicit CyclicSubgroupIndex(const Group& G);

  const Group& group() const noexcept { return group_; }
  const std::vector<CyclicSubgroupRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  const CyclicSubgroupRecord& operator[](std::size_t i) const { return records_[i]; }

  std::size_t record_of(ElementIndex g) const { return record_of_[g]; }
  std::int64_t multiplier_of(ElementIndex g) const { return multiplier_of_[g]; }
  /// Index of the trivial subgroup (always 0 with the canonical sort).
  std::size_t trivial_record() const noexcept { return 0; }

 private:
  Group group_;
  std::vector<CyclicSubgroupRecord> records_;
  std::vector<std::size_t> record_of_;
  std::vector<std::int64_t> multiplier_of_;
};

/// Sorted by (subgroup_order, canonical_generator); length q(G).
std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& G);
std::size_t count_cyclic_subgroups(const Group& G);

struct SylowPart {
  std::int64_t prime = 0;
  Group sylow_group;          // G_p, canonical invariant factors
  Group complement_quotient;  // G / G_p, canonical invariant factors
  std::size_t q_complement = 1;
};

/// One part per prime dividing |G|, primes ascending.
std::vector<SylowPart> sylow_decompose(const Group& G);

/// Character coordinates chi[i] in [0, factor_orders[i]); the pairing is
/// sum_i chi[i] * g[i] / n_i mod 1.
RationalResidue character_value(const Group& G, std::span<const std::int64_t> chi, const GroupElement& g);

/// Every abelian group of order 1..max_order, each once, in canonical
/// invariant-factor presentation, ordered by (order, invariant factors).
std::vector<Group> abelian_groups_up_to(std::int64_t max_order);
/// Abelian groups of exactly the given order.
std::vector<Group> abelian_groups_of_order(std::int64_t order);

}  // namespace homok
