#include "homok/cocyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {

// Members of the subgroup generated by the given elements.
std::vector<ElementIndex> span_of(const Group& G, const std::vector<ElementIndex>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<ElementIndex> out{0};
  seen[0] = 1;
  for (ElementIndex g : gens) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      ElementIndex y = G.add(out[i], g);
      while (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        y = G.add(y, g);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupBasis basis_of_members(const Group& G, const std::vector<ElementIndex>& members) {
  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> spanned{0};
  for (ElementIndex g : members) {
    if (spanned.size() == members.size()) break;
    if (std::binary_search(spanned.begin(), spanned.end(), g)) continue;
    gens.push_back(g);
    spanned = span_of(G, gens);
  }
  IntMatrix rows(0, G.rank());
  for (ElementIndex g : gens) rows.append_row(G.element(g).residues);
  return subgroup_basis(rows, G.factor_orders());
}

// Coordinates a with x = sum_j a_j b_j for every member x, in index order.
std::vector<std::pair<ElementIndex, std::vector<std::int64_t>>> basis_coordinates(const Group& G,
                                                                                  const CocyclicSubgroup& K) {
  const auto& gens = K.generator_basis.generators;
  const auto& orders = K.generator_basis.orders;
  std::vector<ElementIndex> gen_index;
  for (const auto& g : gens) gen_index.push_back(G.index_of(G.make_element(g)));
  std::vector<std::pair<ElementIndex, std::vector<std::int64_t>>> out;
  std::vector<std::int64_t> a(gens.size(), 0);
  for (;;) {
    ElementIndex x = 0;
    for (std::size_t j = 0; j < a.size(); ++j) x = G.add(x, G.scale(a[j], gen_index[j]));
    out.emplace_back(x, a);
    std::size_t j = 0;
    while (j < a.size() && ++a[j] == orders[j]) a[j++] = 0;
    if (j == a.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t multiplier_for(std::span<const std::int64_t> multipliers, std::size_t c) {
  return multipliers.empty() ? 1 : multipliers[c];
}

void check_multipliers(const CyclicSubgroupIndex& subgroups, std::span<const std::int64_t> multipliers) {
  if (multipliers.empty()) return;
  if (multipliers.size() != subgroups.size())
    throw Error(Errc::invalid_argument, "one generator multiplier per cyclic subgroup required");
  for (std::size_t c = 0; c < subgroups.size(); ++c) {
    const std::int64_t k = subgroups[c].subgroup_order;
    if (std::gcd(arith::mod(multipliers[c], k), k) != 1)
      throw Error(Errc::invalid_argument, "generator multiplier must be a unit modulo the subgroup order");
  }
}

// Rows of the cocyclic vectors of K for the given characters (each given in
// basis coordinates).
void append_rows(const CyclicSubgroupIndex& subgroups, const CocyclicSubgroup& K,
                 const std::vector<std::vector<std::int64_t>>& characters, std::span<const std::int64_t> multipliers,
                 IntMatrix& out) {
  const Group& G = subgroups.group();
  const auto coords = basis_coordinates(G, K);
  auto coordinates_of = [&](ElementIndex x) -> const std::vector<std::int64_t>* {
    auto it = std::lower_bound(coords.begin(), coords.end(), x,
                               [](const auto& entry, ElementIndex key) { return entry.first < key; });
    return (it != coords.end() && it->first == x) ? &it->second : nullptr;
  };
  const auto& orders = K.generator_basis.orders;
  // Per cyclic subgroup: basis coordinates of the chosen generator, if it lies in K.
  std::vector<const std::vector<std::int64_t>*> located(subgroups.size());
  for (std::size_t c = 0; c < subgroups.size(); ++c) {
    ElementIndex x = G.scale(multiplier_for(multipliers, c), subgroups[c].generator_index);
    located[c] = coordinates_of(x);
  }
  std::vector<std::int64_t> row(subgroups.size());
  for (const auto& phi : characters) {
    for (std::size_t c = 0; c < subgroups.size(); ++c) {
      row[c] = 0;
      if (!located[c]) continue;
      RationalResidue value;
      for (std::size_t j = 0; j < orders.size(); ++j)
        value += RationalResidue(arith::mulmod(phi[j], (*located[c])[j], orders[j]), orders[j]);
      const std::int64_t k = subgroups[c].subgroup_order;
      if (k % value.den() != 0) throw Error(Errc::compute, "character value order does not divide |C|");
      row[c] = value.num() * (k / value.den());
    }
    out.append_row(row);
  }
}

std::vector<std::vector<std::int64_t>> all_characters(const std::vector<std::int64_t>& orders) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> a(orders.size(), 0);
  for (;;) {
    out.push_back(a);
    std::size_t j = 0;
    while (j < a.size() && ++a[j] == orders[j]) a[j++] = 0;
    if (j == a.size()) break;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> dual_basis(const std::vector<std::int64_t>& orders) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::vector<std::int64_t> phi(orders.size(), 0);
    phi[j] = 1;
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace

std::vector<CocyclicSubgroup> cocyclic_subgroups(const Group& G) {
  // ker chi depends only on the cyclic subgroup <chi> of the character group,
  // which has the same presentation as G.
  const CyclicSubgroupIndex characters(G);
  const auto size = static_cast<ElementIndex>(G.order());
  std::set<std::vector<ElementIndex>> seen;
  std::vector<CocyclicSubgroup> out;
  std::vector<GroupElement> elements;
  elements.reserve(size);
  for (ElementIndex g = 0; g < size; ++g) elements.push_back(G.element(g));
  for (const CyclicSubgroupRecord& rec : characters.records()) {
    const auto& chi = rec.canonical_generator.residues;
    std::vector<ElementIndex> members;
    for (ElementIndex g = 0; g < size; ++g)
      if (character_value(G, chi, elements[g]).is_zero()) members.push_back(g);
    if (!seen.insert(members).second) continue;
    CocyclicSubgroup K;
    K.quotient_order = rec.subgroup_order;
    if (static_cast<std::int64_t>(members.size()) * K.quotient_order != G.order())
      throw Error(Errc::compute, "character kernel has the wrong index");
    K.members = std::move(members);
    out.push_back(std::move(K));
  }
  for (CocyclicSubgroup& K : out) K.generator_basis = basis_of_members(G, K.members);
  std::sort(out.begin(), out.end(), [](const CocyclicSubgroup& a, const CocyclicSubgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<std::int64_t> cocyclic_vector(const CyclicSubgroupIndex& subgroups, const CocyclicSubgroup& K,
                                          std::span<const std::int64_t> phi_coords,
                                          std::span<const std::int64_t> multipliers) {
  const auto& orders = K.generator_basis.orders;
  if (phi_coords.size() != orders.size())
    throw Error(Errc::invalid_argument, "character needs one coordinate per basis generator");
  for (std::size_t j = 0; j < orders.size(); ++j)
    if (phi_coords[j] < 0 || phi_coords[j] >= orders[j])
      throw Error(Errc::invalid_argument, "character coordinate out of range");
  check_multipliers(subgroups, multipliers);
  IntMatrix m(0, subgroups.size());
  append_rows(subgroups, K, {std::vector<std::int64_t>(phi_coords.begin(), phi_coords.end())}, multipliers, m);
  std::vector<std::int64_t> out(subgroups.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = m(0, c).get_si();
  return out;
}

IntMatrix coc_generator_matrix(const Group& G, std::span<const std::int64_t> multipliers) {
  const CyclicSubgroupIndex subgroups(G);
  check_multipliers(subgroups, multipliers);
  IntMatrix out(0, subgroups.size());
  for (const CocyclicSubgroup& K : cocyclic_subgroups(G))
    append_rows(subgroups, K, all_characters(K.generator_basis.orders), multipliers, out);
  return out;
}

IntMatrix coc_generator_rows(const CyclicSubgroupIndex& subgroups, std::span<const CocyclicSubgroup> cocyclic,
                             std::span<const std::int64_t> multipliers) {
  check_multipliers(subgroups, multipliers);
  IntMatrix out(0, subgroups.size());
  for (const CocyclicSubgroup& K : cocyclic)
    append_rows(subgroups, K, dual_basis(K.generator_basis.orders), multipliers, out);
  return out;
}

SK1Report sk1_invariants(const Group& G, const SK1Options& options) {
  const CyclicSubgroupIndex subgroups(G);
  std::vector<std::int64_t> moduli;
  for (const auto& rec : subgroups.records()) moduli.push_back(rec.subgroup_order);

  IntMatrix rows = options.all_characters ? coc_generator_matrix(G, options.generator_multipliers)
                                          : coc_generator_rows(subgroups, cocyclic_subgroups(G),
                                                               options.generator_multipliers);
  ModularHermiteBasis lattice(moduli);
  if (rows.rows() > 0) lattice.insert(rows);
  const IntMatrix basis = lattice.basis();

  SK1Report r;
  r.group = G;
  r.hmg = InvariantFactors::from_cyclic_orders(moduli);
  r.coc = subgroup_invariants(basis, moduli);
  r.quotient = cokernel_invariants(basis, moduli);
  r.theorem_4_1_applies = G.order() % 2 == 1;
  r.q = subgroups.size();
  for (const SylowPart& part : sylow_decompose(G)) r.q_complements.emplace_back(part.prime, part.q_complement);
  if (r.hmg.order() != r.coc.order() * r.quotient.order())
    throw Error(Errc::compute, "|Hmg| != |Coc| * |Hmg/Coc|");
  return r;
}

SylowCheckReport sk1_sylow_check(const Group& G) {
  SylowCheckReport r;
  r.direct = sk1_invariants(G).quotient;
  for (const SylowPart& part : sylow_decompose(G))
    r.assembled = r.assembled + sk1_invariants(part.sylow_group).quotient.repeated(part.q_complement);
  r.equal = r.direct == r.assembled;
  return r;
}

}  // namespace homok
