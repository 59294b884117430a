#pragma once

// Cocyclic subgroups, the cocyclic subgroup Coc(G) of Hmg(G) = sum_C Hom(C, Q/Z),
// and the quotient Hmg(G)/Coc(G), which is SK_1(Z[G]) for G of odd order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homok/group.hpp"
#include "homok/snf.hpp"

namespace homok {

struct CocyclicSubgroup {
  std::vector<ElementIndex> members;  // sorted
  /// Independent generators (residue tuples in G) with orders m1 | m2 | ...
  SubgroupBasis generator_basis;
  std::int64_t quotient_order = 1;
};

/// Kernels of all characters of G, each once, sorted by (size, members).
std::vector<CocyclicSubgroup> cocyclic_subgroups(const Group& G);

/// The character phi of K with phi(b_j) = phi_coords[j] / m_j on the basis,
/// extended by zero off K, as a vector over sum_C Z/|C|: the coordinate at C
/// is phi(x_C) * |C| when x_C lies in K. `multipliers`, if given, replaces
/// each canonical generator x_C by multipliers[C] * x_C.
std::vector<std::int64_t> cocyclic_vector(const CyclicSubgroupIndex& subgroups, const CocyclicSubgroup& K,
                                          std::span<const std::int64_t> phi_coords,
                                          std::span<const std::int64_t> multipliers = {});

/// One row per (K, phi) over all |K| characters of every cocyclic K.
IntMatrix coc_generator_matrix(const Group& G, std::span<const std::int64_t> multipliers = {});

/// Rows for a generating set of each dual group K^ only (the dual basis of the
/// generator basis). Spans the same subgroup as coc_generator_matrix.
IntMatrix coc_generator_rows(const CyclicSubgroupIndex& subgroups, std::span<const CocyclicSubgroup> cocyclic,
                             std::span<const std::int64_t> multipliers = {});

struct SK1Report {
  Group group;
  InvariantFactors hmg;
  InvariantFactors coc;
  InvariantFactors quotient;
  bool theorem_4_1_applies = false;
  std::size_t q = 0;
  /// q(G/G_p) for every prime p dividing |G|.
  std::vector<std::pair<std::int64_t, std::size_t>> q_complements;
};

struct SK1Options {
  /// One unit per cyclic subgroup; alternative generator choice (testing).
  std::vector<std::int64_t> generator_multipliers;
  /// Use coc_generator_matrix (every character) instead of dual-basis rows.
  bool all_characters = false;
};

SK1Report sk1_invariants(const Group& G, const SK1Options& options = {});

struct SylowCheckReport {
  InvariantFactors direct;
  InvariantFactors assembled;
  bool equal = false;
};

/// Hmg(G)/Coc(G) against the sum over p of (Hmg(G_p)/Coc(G_p))^q(G/G_p).
SylowCheckReport sk1_sylow_check(const Group& G);

}  // namespace homok
