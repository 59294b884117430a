#include "homok/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {

std::int64_t degree_power(std::int64_t n, std::int64_t d, std::int64_t modulus) {
  if (modulus == 1) return 0;
  const auto e = static_cast<std::uint64_t>(d < 0 ? -d : d);
  const std::int64_t p = arith::powmod(arith::mod(n, modulus), e, modulus);
  return d < 0 ? arith::inverse_mod(p, modulus) : p;
}

// An element of a graded presentation given by one coordinate, with every
// zero identified.
bool same_point(const Projection& a, const Projection& b) {
  if (a.coordinate == 0 || b.coordinate == 0) return a.coordinate == b.coordinate;
  return a == b;
}

}  // namespace

HomogeneityReport is_homogeneous(const HomogeneousMap& t) {
  const Group& G = t.source;
  const Group& H = t.target;
  if (t.values.size() != static_cast<std::size_t>(G.order()))
    throw Error(Errc::invalid_argument, "map must give one value per source element");
  for (ElementIndex v : t.values)
    if (v >= static_cast<ElementIndex>(H.order())) throw Error(Errc::invalid_argument, "map value out of range");
  const auto e = static_cast<std::uint64_t>(t.degree < 0 ? -t.degree : t.degree);
  for (ElementIndex x = 0; x < t.values.size(); ++x) {
    const std::int64_t o = G.element_order(x);
    const std::int64_t range = arith::checked_lcm(o, H.exponent());
    for (std::int64_t n = 1; n <= range; ++n) {
      if (std::gcd(n, o) != 1) continue;
      const std::int64_t ne = arith::powmod(n, e, H.exponent());
      const ElementIndex tnx = t.values[G.scale(n, x)];
      const bool ok = t.degree >= 0 ? tnx == H.scale(ne, t.values[x]) : H.scale(ne, tnx) == t.values[x];
      if (!ok) return {false, HomogeneityViolation{x, n}};
    }
  }
  return {};
}

bool is_injective(const HomogeneousMap& t) {
  std::vector<ElementIndex> v = t.values;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

InducedGradedMap::InducedGradedMap(const HomogeneousMap& t)
    : source_(graded_presentation(t.source, t.degree == 0 ? 1 : t.degree)),
      target_(graded_presentation(t.target, t.degree == 0 ? 1 : t.degree)) {
  if (t.degree == 0) throw Error(Errc::invalid_argument, "the transfer needs d != 0 (G[0] is free)");
  if (t.source.order() % 2 == 0)
    throw Error(Errc::invalid_argument, "the transfer is only defined for source groups of odd order");
  HomogeneityReport h = is_homogeneous(t);
  if (!h.homogeneous) {
    throw Error(Errc::invalid_argument, "map is not homogeneous of degree " + std::to_string(t.degree) +
                                            " (x=" + std::to_string(h.violation->x) +
                                            ", n=" + std::to_string(h.violation->n) + ")");
  }
  const std::int64_t d = t.degree;
  const Group& G = t.source;

  for (std::size_t i = 0; i < source_.size(); ++i) {
    const Projection p = project_element(target_, t.values[source_.record(i).generator_index]);
    images_.push_back({p.summand, p.coordinate});
  }

  // Audit: [t(n x)] must equal n^d [t(x)] in G'[d] for every generator x and
  // every n coprime to o(x); n matters modulo lcm(o(x), b).
  for (std::size_t i = 0; i < source_.size(); ++i) {
    const auto& rec = source_.record(i);
    const std::int64_t k = rec.subgroup_order;
    const std::int64_t b = target_.modulus(images_[i].summand);
    const std::int64_t range = arith::checked_lcm(k, b);
    for (std::int64_t n = 1; n <= range; ++n) {
      if (std::gcd(n, k) != 1) continue;
      const Projection actual = project_element(target_, t.values[G.scale(n, rec.generator_index)]);
      const Projection expected{images_[i].summand,
                                arith::mulmod(images_[i].coefficient, degree_power(n, d, b), b)};
      if (!same_point(actual, expected)) {
        throw Error(Errc::compute, "induced map is not well defined on G[" + std::to_string(d) +
                                       "]: the relation [n x] - n^d [x] fails for x=" +
                                       std::to_string(rec.generator_index) + ", n=" + std::to_string(n));
      }
    }
    if (arith::mulmod(source_.modulus(i) % b, images_[i].coefficient, b) != 0)
      throw Error(Errc::compute, "summand order does not kill its image");
  }

  sections_.assign(target_.size(), std::nullopt);
  for (std::size_t i = 0; i < source_.size(); ++i) {
    const auto [j, c] = images_[i];
    const std::int64_t b = target_.modulus(j);
    if (c == 0 || b == 1) continue;
    if (std::gcd(c, b) != 1)
      throw Error(Errc::compute, "image meets target summand " + std::to_string(j) + " in a proper nonzero subgroup");
    if (!sections_[j]) sections_[j] = Section{i, arith::inverse_mod(c, b)};
  }
  image_size_ = 1;
  for (std::size_t j = 0; j < target_.size(); ++j)
    if (sections_[j]) image_size_ *= static_cast<long>(target_.modulus(j));
  kernel_size_ = source_.order() / image_size_;
}

std::vector<std::int64_t> InducedGradedMap::apply(std::span<const std::int64_t> source_coords) const {
  if (source_coords.size() != source_.size()) throw Error(Errc::invalid_argument, "wrong number of coordinates");
  std::vector<std::int64_t> out(target_.size(), 0);
  for (std::size_t i = 0; i < source_.size(); ++i) {
    const auto [j, c] = images_[i];
    const std::int64_t b = target_.modulus(j);
    out[j] = (out[j] + arith::mulmod(arith::mod(source_coords[i], b), c, b)) % b;
  }
  return out;
}

void validate_hom_coordinates(const GradedPresentation& P, std::span<const RationalResidue> f) {
  if (f.size() != P.size())
    throw Error(Errc::invalid_argument, "expected " + std::to_string(P.size()) + " coordinates, got " +
                                            std::to_string(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (P.modulus(i) % f[i].order() != 0)
      throw Error(Errc::invalid_argument, "coordinate " + f[i].to_string() + " at summand " + std::to_string(i) +
                                              " has order not dividing " + std::to_string(P.modulus(i)));
}

HomCoordinates transfer_apply(const InducedGradedMap& m, std::span<const RationalResidue> f) {
  validate_hom_coordinates(m.source(), f);
  HomCoordinates out(m.target().size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& s = m.sections()[j];
    if (s) out[j] = f[s->source_summand].scaled(s->coordinate).scaled(m.kernel_size());
  }
  return out;
}

HomCoordinates pullback(const InducedGradedMap& m, std::span<const RationalResidue> g) {
  validate_hom_coordinates(m.target(), g);
  HomCoordinates out(m.source().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[m.images()[i].summand].scaled(m.images()[i].coefficient);
  return out;
}

namespace {

// Over the source summands mapping into one target summand Z/b: for every
// residue r, the number of coordinate choices with sum c_i y_i = r and the
// sum of f over them.
struct BlockTotals {
  std::vector<mpz_class> count;
  std::vector<RationalResidue> fsum;
};

BlockTotals block_totals(const InducedGradedMap& m, std::span<const RationalResidue> f,
                         const std::vector<std::size_t>& members, std::int64_t b) {
  BlockTotals t{std::vector<mpz_class>(static_cast<std::size_t>(b)),
                std::vector<RationalResidue>(static_cast<std::size_t>(b))};
  t.count[0] = 1;
  for (std::size_t i : members) {
    const std::int64_t a = m.source().modulus(i);
    const std::int64_t c = m.images()[i].coefficient;
    BlockTotals next{std::vector<mpz_class>(static_cast<std::size_t>(b)),
                     std::vector<RationalResidue>(static_cast<std::size_t>(b))};
    for (std::int64_t r = 0; r < b; ++r) {
      if (t.count[r] == 0) continue;
      for (std::int64_t y = 0; y < a; ++y) {
        const auto r2 = static_cast<std::size_t>((r + arith::mulmod(c, y, b)) % b);
        next.count[r2] += t.count[r];
        next.fsum[r2] += t.fsum[r] + f[i].scaled(y).scaled(t.count[r]);
      }
    }
    t = std::move(next);
  }
  return t;
}

}  // namespace

std::vector<RationalResidue> transfer_literal(const InducedGradedMap& m, std::span<const RationalResidue> f) {
  validate_hom_coordinates(m.source(), f);
  const GradedPresentation& T = m.target();

  // Source summands sent to zero form a free factor of every preimage set.
  mpz_class zero_count = 1;
  RationalResidue zero_fsum;
  std::vector<std::vector<std::size_t>> members(T.size());
  for (std::size_t i = 0; i < m.source().size(); ++i) {
    if (m.images()[i].coefficient == 0) {
      const std::int64_t a = m.source().modulus(i);
      zero_count *= static_cast<long>(a);
    } else {
      members[m.images()[i].summand].push_back(i);
    }
  }
  for (std::size_t i = 0; i < m.source().size(); ++i) {
    if (m.images()[i].coefficient != 0) continue;
    const std::int64_t a = m.source().modulus(i);
    // sum over y < a of f_i * y, times the choices for the other zero summands
    const mpz_class tri = mpz_class(static_cast<long>(a)) * (a - 1) / 2;
    zero_fsum += f[i].scaled(tri * (zero_count / static_cast<long>(a)));
  }

  std::vector<std::size_t> blocks;
  std::vector<BlockTotals> totals(T.size());
  for (std::size_t j = 0; j < T.size(); ++j) {
    if (members[j].empty()) continue;
    blocks.push_back(j);
    totals[j] = block_totals(m, f, members[j], T.modulus(j));
  }

  // For a target point supported on summand j0 (or on none), the preimage set
  // is a product over blocks; its f-sum expands one block at a time.
  auto others_at_zero = [&](std::size_t skip) {
    mpz_class count = zero_count;
    RationalResidue fsum = zero_fsum;
    for (std::size_t j : blocks) {
      if (j == skip) continue;
      fsum = fsum.scaled(totals[j].count[0]) + totals[j].fsum[0].scaled(count);
      count *= totals[j].count[0];
    }
    return std::pair{count, fsum};
  };

  const Group& H = T.group();
  std::vector<RationalResidue> out(static_cast<std::size_t>(H.order()));
  const auto all_zero = others_at_zero(T.size());
  std::vector<std::optional<std::pair<mpz_class, RationalResidue>>> cache(T.size());
  for (ElementIndex g = 0; g < out.size(); ++g) {
    const Projection p = project_element(T, g);
    if (p.coordinate == 0) {
      out[g] = all_zero.second;
      continue;
    }
    const std::size_t j0 = p.summand;
    if (members[j0].empty()) continue;  // empty preimage
    if (!cache[j0]) cache[j0] = others_at_zero(j0);
    const auto& [count, fsum] = *cache[j0];
    const auto r = static_cast<std::size_t>(p.coordinate);
    out[g] = totals[j0].fsum[r].scaled(count) + fsum.scaled(totals[j0].count[r]);
  }
  return out;
}

std::vector<RationalResidue> transfer_table(const InducedGradedMap& m, std::span<const RationalResidue> f) {
  const HomCoordinates coords = transfer_apply(m, f);
  const GradedPresentation& T = m.target();
  std::vector<RationalResidue> out(static_cast<std::size_t>(T.group().order()));
  for (ElementIndex g = 0; g < out.size(); ++g) {
    const Projection p = project_element(T, g);
    out[g] = coords[p.summand].scaled(p.coordinate);
  }
  return out;
}

mpz_class transfer_kernel_size(const InducedGradedMap& m) {
  std::vector<std::optional<std::int64_t>> section_unit(m.source().size());
  for (const auto& s : m.sections())
    if (s) section_unit[s->source_summand] = s->coordinate;
  mpz_class count = 1;
  for (std::size_t i = 0; i < m.source().size(); ++i) {
    const mpz_class a = static_cast<long>(m.source().modulus(i));
    if (!section_unit[i]) {
      count *= a;
      continue;
    }
    // f_i in (1/a)Z/Z with (|ker| * u) f_i = 0
    mpz_class g;
    const mpz_class factor = m.kernel_size() * static_cast<long>(*section_unit[i]);
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), factor.get_mpz_t());
    count *= g;
  }
  return count;
}

mpz_class transfer_kernel_size_enumerated(const InducedGradedMap& m, std::uint64_t limit) {
  if (m.source().order() > limit) throw Error(Errc::cap_exceeded, "too many homomorphisms to enumerate");
  const std::size_t n = m.source().size();
  std::vector<std::int64_t> y(n, 0);
  HomCoordinates f(n);
  mpz_class zeros = 0;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) f[i] = RationalResidue(y[i], m.source().modulus(i));
    const HomCoordinates image = transfer_apply(m, f);
    if (std::all_of(image.begin(), image.end(), [](const RationalResidue& v) { return v.is_zero(); })) ++zeros;
    std::size_t i = 0;
    while (i < n && ++y[i] == m.source().modulus(i)) y[i++] = 0;
    if (i == n) break;
  }
  return zeros;
}

std::optional<HomogeneousMap> random_degree_one_map(const Group& source, const Group& target, bool injective,
                                                    std::mt19937_64& rng) {
  const CyclicSubgroupIndex S(source);
  HomogeneousMap t{source, target, 1, std::vector<ElementIndex>(static_cast<std::size_t>(source.order()), 0)};

  std::vector<std::int64_t> target_orders(static_cast<std::size_t>(target.order()));
  for (ElementIndex y = 0; y < target_orders.size(); ++y) target_orders[y] = target.element_order(y);

  std::optional<CyclicSubgroupIndex> T;
  std::vector<char> used;
  if (injective) {
    T.emplace(target);
    used.assign(T->size(), 0);
  }
  for (const CyclicSubgroupRecord& rec : S.records()) {
    const std::int64_t k = rec.subgroup_order;
    ElementIndex y = 0;
    if (injective) {
      std::vector<std::size_t> candidates;
      for (std::size_t c = 0; c < T->size(); ++c)
        if (!used[c] && (*T)[c].subgroup_order == k) candidates.push_back(c);
      if (candidates.empty()) return std::nullopt;
      const std::size_t c = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      used[c] = 1;
      std::vector<std::int64_t> units;
      for (std::int64_t u = 1; u <= k; ++u)
        if (std::gcd(u, k) == 1) units.push_back(u);
      const std::int64_t u = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
      y = target.scale(u, (*T)[c].generator_index);
    } else {
      std::vector<ElementIndex> candidates;
      for (ElementIndex z = 0; z < target_orders.size(); ++z)
        if (k % target_orders[z] == 0) candidates.push_back(z);
      y = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    }
    for (std::int64_t n = 1; n <= k; ++n)
      if (std::gcd(n, k) == 1) t.values[source.scale(n, rec.generator_index)] = target.scale(n, y);
  }
  return t;
}

}  // namespace homok
