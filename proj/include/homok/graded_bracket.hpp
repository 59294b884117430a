#pragma once

// The graded bracket G[d] stored structurally as one cyclic summand
// Z/o_d(|C|) per cyclic subgroup C of G, and the groups Hom(G[d], H).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "homok/group.hpp"
#include "homok/snf.hpp"

namespace homok {

class GradedPresentation {
 public:
  GradedPresentation(std::shared_ptr<const CyclicSubgroupIndex> subgroups, std::int64_t degree);

  const Group& group() const noexcept { return subgroups_->group(); }
  std::int64_t degree() const noexcept { return degree_; }
  const CyclicSubgroupIndex& subgroups() const noexcept { return *subgroups_; }
  std::shared_ptr<const CyclicSubgroupIndex> subgroups_ptr() const noexcept { return subgroups_; }

  std::size_t size() const noexcept { return moduli_.size(); }
  const CyclicSubgroupRecord& record(std::size_t summand) const { return (*subgroups_)[summand]; }
  /// o_d(|C|) per summand; 0 for every summand when d = 0 (free summands).
  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::int64_t modulus(std::size_t summand) const { return moduli_[summand]; }
  std::size_t free_rank() const noexcept { return degree_ == 0 ? moduli_.size() : 0; }

  /// Isomorphism type of G[d].
  InvariantFactors invariants() const;
  /// |G[d]| for d != 0.
  mpz_class order() const;

 private:
  std::shared_ptr<const CyclicSubgroupIndex> subgroups_;
  std::int64_t degree_;
  std::vector<std::int64_t> moduli_;
};

GradedPresentation graded_presentation(const Group& G, std::int64_t d);

struct Projection {
  std::size_t summand = 0;
  std::int64_t coordinate = 0;

  friend bool operator==(const Projection&, const Projection&) = default;
};

/// Image of [g] in G[d]: g = n x for the canonical generator x of <g>, giving
/// coordinate n^d (n^-|d| for d < 0) modulo o_d(x). Requires d != 0.
Projection project_element(const GradedPresentation& P, ElementIndex g);
Projection project_element(const GradedPresentation& P, const GroupElement& g);

/// Coefficient group H for Hom(G[d], H).
class HomTarget {
 public:
  enum class Kind { rationals_mod_integers, integers, finite };

  static HomTarget rationals_mod_integers() { return HomTarget(Kind::rationals_mod_integers, {}); }
  static HomTarget integers() { return HomTarget(Kind::integers, {}); }
  static HomTarget finite(InvariantFactors h);
  static HomTarget cyclic(std::int64_t m);

  Kind kind() const noexcept { return kind_; }
  const InvariantFactors& factors() const noexcept { return factors_; }
  std::string to_string() const;

 private:
  HomTarget(Kind k, InvariantFactors f) : kind_(k), factors_(std::move(f)) {}
  Kind kind_;
  InvariantFactors factors_;
};

/// Invariants of Hmg^d(G, H) = Hom(G[d], H). Q/Z is rejected for d = 0.
InvariantFactors hom_invariants(const GradedPresentation& P, const HomTarget& target);

/// Right-hand side of the Sylow decomposition of Hmg^d(G): the sum over p of
/// Hmg^d(G_p) repeated q(G/G_p) times. Requires d != 0.
InvariantFactors sylow_decomposition_invariants(const Group& G, std::int64_t d);

}  // namespace homok
