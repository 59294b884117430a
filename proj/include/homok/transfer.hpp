#pragma once

// The map t~: G[d] -> G'[d] induced by a homogeneous t: G -> G', the
// transfer T_t: Hom(G[d], Q/Z) -> Hom(G'[d], Q/Z) and the pullback t*.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "homok/graded_bracket.hpp"
#include "homok/group.hpp"
#include "homok/homogeneous.hpp"
#include "homok/rational.hpp"

namespace homok {

/// A function t: source -> target given by its values, with a declared degree.
struct HomogeneousMap {
  Group source;
  Group target;
  std::int64_t degree = 1;
  std::vector<ElementIndex> values;  // one target element per source element
};

/// t(nx) = n^d t(x) (d >= 0) or n^-d t(nx) = t(x) (d < 0) for all x and n
/// coprime to o(x); n runs over 1..lcm(o(x), exp(target)).
HomogeneityReport is_homogeneous(const HomogeneousMap& t);
bool is_injective(const HomogeneousMap& t);

struct SummandImage {
  std::size_t summand = 0;  // target summand j(i)
  std::int64_t coefficient = 0;  // c_i, reduced modulo the target modulus
};

struct Section {
  std::size_t source_summand = 0;
  std::int64_t coordinate = 0;  // u with u * c ≡ 1 modulo the target modulus
};

class InducedGradedMap {
 public:
  /// Builds t~ after checking |G| odd, d != 0, homogeneity of t, and auditing
  /// that every defining relation of G[d] maps to zero in G'[d].
  explicit InducedGradedMap(const HomogeneousMap& t);

  const GradedPresentation& source() const noexcept { return source_; }
  const GradedPresentation& target() const noexcept { return target_; }
  std::int64_t degree() const noexcept { return source_.degree(); }
  const std::vector<SummandImage>& images() const noexcept { return images_; }
  /// Per target summand: a section of its generator, or nothing if missed.
  const std::vector<std::optional<Section>>& sections() const noexcept { return sections_; }
  bool is_onto(std::size_t target_summand) const {
    return sections_[target_summand].has_value() || target_.modulus(target_summand) == 1;
  }
  const mpz_class& kernel_size() const noexcept { return kernel_size_; }
  const mpz_class& image_size() const noexcept { return image_size_; }

  /// t~ applied to a coordinate vector of G[d].
  std::vector<std::int64_t> apply(std::span<const std::int64_t> source_coords) const;

 private:
  GradedPresentation source_;
  GradedPresentation target_;
  std::vector<SummandImage> images_;
  std::vector<std::optional<Section>> sections_;
  mpz_class kernel_size_;
  mpz_class image_size_;
};

/// Coordinates of an element of Hom(G[d], Q/Z): value per summand generator.
using HomCoordinates = std::vector<RationalResidue>;

/// Checks each value's order divides the summand modulus.
void validate_hom_coordinates(const GradedPresentation& P, std::span<const RationalResidue> f);

/// T_t(f) by the closed form: 0 on missed summands, |ker t~| * f(section) on
/// the others.
HomCoordinates transfer_apply(const InducedGradedMap& m, std::span<const RationalResidue> f);
/// (t* g)(e_i) = g(t~ e_i).
HomCoordinates pullback(const InducedGradedMap& m, std::span<const RationalResidue> g);

/// sum of f(y) over all y in G[d] with t~(y) = [g'], for every g' in G', by
/// exact summation over preimages (no use of |ker t~|). Values are indexed by
/// target element.
std::vector<RationalResidue> transfer_literal(const InducedGradedMap& m, std::span<const RationalResidue> f);

/// The table of T_t(f) on G' obtained from the closed-form coordinates.
std::vector<RationalResidue> transfer_table(const InducedGradedMap& m, std::span<const RationalResidue> f);

/// Number of f in Hom(G[d], Q/Z) with T_t(f) = 0.
mpz_class transfer_kernel_size(const InducedGradedMap& m);
/// The same count by enumerating all f; requires |G[d]| <= limit.
mpz_class transfer_kernel_size_enumerated(const InducedGradedMap& m, std::uint64_t limit = 1u << 20);

/// Random homogeneous map of degree 1: each cyclic subgroup C = <x_C> is sent
/// to n x_C -> n y_C for a random y_C with o(y_C) | |C|. With `injective`,
/// distinct C go to distinct cyclic subgroups of the same order, generator to
/// generator; returns nothing when the target has too few of them.
std::optional<HomogeneousMap> random_degree_one_map(const Group& source, const Group& target, bool injective,
                                                    std::mt19937_64& rng);

}  // namespace homok
