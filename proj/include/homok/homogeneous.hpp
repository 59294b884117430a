#pragma once

// Homogeneous functions G -> Q/Z (or G -> Z for degree 0) as explicit value
// tables, and their identification with Hom(G[d], H).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homok/graded_bracket.hpp"
#include "homok/group.hpp"
#include "homok/rational.hpp"

namespace homok {

class FunctionTable {
 public:
  /// Values in Q/Z, one per element in index order.
  static FunctionTable rational(Group domain, std::int64_t degree, std::vector<RationalResidue> values);
  /// Integer values; degree 0 only.
  static FunctionTable integral(Group domain, std::vector<std::int64_t> values);
  static FunctionTable zero(Group domain, std::int64_t degree);

  const Group& domain() const noexcept { return domain_; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_integral() const noexcept { return integral_; }
  const std::vector<RationalResidue>& rational_values() const;
  const std::vector<std::int64_t>& integer_values() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  FunctionTable(Group domain, std::int64_t degree, bool integral)
      : domain_(std::move(domain)), degree_(degree), integral_(integral) {}

  Group domain_;
  std::int64_t degree_ = 0;
  bool integral_ = false;
  std::vector<RationalResidue> rational_;
  std::vector<std::int64_t> integer_;
};

struct HomogeneityViolation {
  ElementIndex x = 0;
  std::int64_t n = 0;
};

struct HomogeneityReport {
  bool homogeneous = true;
  std::optional<HomogeneityViolation> violation;
};

/// Checks f(nx) = n^d f(x) (d >= 0) or n^-d f(nx) = f(x) (d < 0) for every x
/// and every n in 1..L(x) coprime to o(x). L(x) is the lcm of o(x) and the
/// orders of the values involved, which makes the finite range exhaustive.
HomogeneityReport is_homogeneous(const FunctionTable& t);

/// The table of the homomorphism G[d] -> Q/Z sending the generator of summand
/// i to coords[i]. Each coords[i] must have order dividing the summand modulus
/// (and dividing target_modulus when given).
FunctionTable from_coordinates(const GradedPresentation& P, std::span<const RationalResidue> coords,
                               std::optional<std::int64_t> target_modulus = std::nullopt);
/// Degree 0 with values in Z: one free coordinate per cyclic subgroup.
FunctionTable from_integer_coordinates(const GradedPresentation& P, std::span<const std::int64_t> coords);

/// Values at the canonical generators, after checking homogeneity and the
/// order constraint.
std::vector<RationalResidue> to_coordinates(const FunctionTable& t, const GradedPresentation& P);
std::vector<RationalResidue> to_coordinates(const FunctionTable& t);
std::vector<std::int64_t> to_integer_coordinates(const FunctionTable& t, const GradedPresentation& P);

/// sum_i weights[i] * tables[i], pointwise.
FunctionTable pointwise_combine(std::span<const FunctionTable> tables, std::span<const std::int64_t> weights);

/// g' -> t(alpha(g')) for a map alpha: source -> t.domain() given by images.
FunctionTable precompose(const FunctionTable& t, const Group& source, std::span<const ElementIndex> alpha);

}  // namespace homok
