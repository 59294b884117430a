#include "homok/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(Errc::parse, "malformed group spec '" + std::string(whole) + "': empty term");
  std::int64_t v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(Errc::parse, "malformed group spec '" + std::string(whole) + "': unexpected '" +
                                   std::string(1, ch) + "'");
    }
    if (v > (INT64_MAX - 9) / 10) throw Error(Errc::parse, "integer too large in group spec '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

Group::Group() : factor_orders_{1}, strides_{1} {}

Group Group::from_factor_orders(std::vector<std::int64_t> factor_orders, std::int64_t order_cap) {
  Group g;
  g.factor_orders_.clear();
  std::int64_t order = 1;
  std::int64_t exponent = 1;
  for (std::int64_t n : factor_orders) {
    if (n < 1) throw Error(Errc::invalid_argument, "cyclic factor orders must be >= 1, got " + std::to_string(n));
    if (__builtin_mul_overflow(order, n, &order) || order > order_cap) {
      throw Error(Errc::cap_exceeded, "group order exceeds the enumeration cap " + std::to_string(order_cap));
    }
    exponent = std::lcm(exponent, n);
  }
  g.factor_orders_ = std::move(factor_orders);
  g.order_ = order;
  g.exponent_ = exponent;
  g.strides_.assign(g.factor_orders_.size(), 1);
  for (std::size_t i = g.factor_orders_.size(); i-- > 1;) {
    g.strides_[i - 1] = g.strides_[i] * static_cast<std::size_t>(g.factor_orders_[i]);
  }
  g.invariants_ = InvariantFactors::from_cyclic_orders(g.factor_orders_);
  return g;
}

Group Group::parse(std::string_view spec, std::int64_t order_cap) {
  std::vector<std::int64_t> orders;
  std::size_t start = 0;
  if (spec.empty()) throw Error(Errc::parse, "empty group spec");
  while (true) {
    std::size_t comma = spec.find(',', start);
    std::string_view term = spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t caret = term.find('^');
    std::int64_t base, times = 1;
    if (caret == std::string_view::npos) {
      base = parse_int(term, spec);
    } else {
      base = parse_int(term.substr(0, caret), spec);
      times = parse_int(term.substr(caret + 1), spec);
      if (times < 1) throw Error(Errc::parse, "repetition count must be >= 1 in '" + std::string(spec) + "'");
    }
    if (base < 1) throw Error(Errc::parse, "cyclic factor orders must be >= 1 in '" + std::string(spec) + "'");
    if ((base > 1 && times > 64) || times > 4096) {
      throw Error(Errc::cap_exceeded, "group order exceeds the enumeration cap " + std::to_string(order_cap));
    }
    for (std::int64_t i = 0; i < times; ++i) orders.push_back(base);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_factor_orders(std::move(orders), order_cap);
}

Group Group::from_invariants(const InvariantFactors& inv, std::int64_t order_cap) {
  if (!inv.is_finite()) throw Error(Errc::invalid_argument, "groups must be finite");
  if (inv.empty()) return from_factor_orders({1}, order_cap);
  return from_factor_orders(inv.factors(), order_cap);
}

std::string Group::spec() const { return join(factor_orders_); }

std::string Group::canonical_spec() const {
  return invariants_.empty() ? "1" : join(invariants_.factors());
}

GroupElement Group::zero() const { return GroupElement{std::vector<std::int64_t>(factor_orders_.size(), 0)}; }

GroupElement Group::element(ElementIndex index) const {
  if (index >= static_cast<ElementIndex>(order_)) throw Error(Errc::invalid_argument, "element index out of range");
  GroupElement g = zero();
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    g.residues[i] = static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return g;
}

void Group::validate(const GroupElement& g) const {
  if (g.residues.size() != factor_orders_.size()) {
    throw Error(Errc::invalid_argument, "element has " + std::to_string(g.residues.size()) +
                                            " coordinates, group has " + std::to_string(factor_orders_.size()));
  }
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= factor_orders_[i])
      throw Error(Errc::invalid_argument, "element residue out of range");
  }
}

GroupElement Group::make_element(std::vector<std::int64_t> residues) const {
  if (residues.size() != factor_orders_.size()) {
    throw Error(Errc::invalid_argument, "element has " + std::to_string(residues.size()) +
                                            " coordinates, group has " + std::to_string(factor_orders_.size()));
  }
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = arith::mod(residues[i], factor_orders_[i]);
  return GroupElement{std::move(residues)};
}

ElementIndex Group::index_of(const GroupElement& g) const {
  validate(g);
  ElementIndex idx = 0;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) idx += static_cast<std::size_t>(g.residues[i]) * strides_[i];
  return idx;
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  validate(a);
  validate(b);
  GroupElement r = zero();
  for (std::size_t i = 0; i < factor_orders_.size(); ++i)
    r.residues[i] = (a.residues[i] + b.residues[i]) % factor_orders_[i];
  return r;
}

GroupElement Group::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement Group::scale(std::int64_t n, const GroupElement& a) const {
  validate(a);
  GroupElement r = zero();
  for (std::size_t i = 0; i < factor_orders_.size(); ++i)
    r.residues[i] = arith::mulmod(n, a.residues[i], factor_orders_[i]);
  return r;
}

ElementIndex Group::add(ElementIndex a, ElementIndex b) const {
  ElementIndex r = 0;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(factor_orders_[i]);
    const std::size_t ra = (a / strides_[i]) % n, rb = (b / strides_[i]) % n;
    r += ((ra + rb) % n) * strides_[i];
  }
  return r;
}

ElementIndex Group::scale(std::int64_t k, ElementIndex a) const {
  ElementIndex r = 0;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const std::int64_t n = factor_orders_[i];
    const auto ra = static_cast<std::int64_t>((a / strides_[i]) % static_cast<std::size_t>(n));
    r += static_cast<std::size_t>(arith::mulmod(k, ra, n)) * strides_[i];
  }
  return r;
}

std::int64_t Group::element_order(const GroupElement& g) const {
  validate(g);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const std::int64_t n = factor_orders_[i];
    o = std::lcm(o, n / std::gcd(n, g.residues[i]));
  }
  return o;
}

std::int64_t Group::element_order(ElementIndex g) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factor_orders_.size(); ++i) {
    const std::int64_t n = factor_orders_[i];
    const auto r = static_cast<std::int64_t>((g / strides_[i]) % static_cast<std::size_t>(n));
    o = std::lcm(o, n / std::gcd(n, r));
  }
  return o;
}

std::int64_t element_order(const Group& G, const GroupElement& g) { return G.element_order(g); }

// ---------------------------------------------------------------------------

CyclicSubgroupIndex::CyclicSubgroupIndex(const Group& G) : group_(G) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  const auto n = static_cast<std::size_t>(G.order());
  std::vector<std::size_t> raw_record(n, unassigned);
  multiplier_of_.assign(n, 0);
  std::vector<CyclicSubgroupRecord> raw;
  for (ElementIndex g = 0; g < n; ++g) {
    if (raw_record[g] != unassigned) continue;
    const std::int64_t o = G.element_order(g);
    CyclicSubgroupRecord rec;
    rec.generator_index = g;
    rec.canonical_generator = G.element(g);
    rec.subgroup_order = o;
    ElementIndex cur = 0;
    for (std::int64_t k = 0; k < o; ++k) {
      rec.members.push_back(cur);
      if (std::gcd(k, o) == 1) {
        raw_record[cur] = raw.size();
        multiplier_of_[cur] = k;
      }
      cur = G.add(cur, g);
    }
    if (o == 1) {
      raw_record[0] = raw.size();
      multiplier_of_[0] = 1;
    }
    std::sort(rec.members.begin(), rec.members.end());
    raw.push_back(std::move(rec));
  }
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].subgroup_order != raw[b].subgroup_order) return raw[a].subgroup_order < raw[b].subgroup_order;
    return raw[a].generator_index < raw[b].generator_index;
  });
  std::vector<std::size_t> new_id(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = i;
    records_.push_back(std::move(raw[perm[i]]));
  }
  record_of_.resize(n);
  for (ElementIndex g = 0; g < n; ++g) record_of_[g] = new_id[raw_record[g]];
}

std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& G) { return CyclicSubgroupIndex(G).records(); }

std::size_t count_cyclic_subgroups(const Group& G) {
  // Each cyclic subgroup of order k has phi(k) generators.
  std::map<std::int64_t, std::int64_t> by_order;
  for (ElementIndex g = 0; g < static_cast<ElementIndex>(G.order()); ++g) ++by_order[G.element_order(g)];
  std::size_t q = 0;
  for (auto [k, count] : by_order) q += static_cast<std::size_t>(count / arith::euler_phi(k));
  return q;
}

std::vector<SylowPart> sylow_decompose(const Group& G) {
  std::vector<SylowPart> parts;
  for (std::int64_t p : arith::prime_divisors(G.order())) {
    std::vector<std::int64_t> p_orders, rest_orders;
    for (std::int64_t n : G.factor_orders()) {
      p_orders.push_back(arith::p_part(n, p));
      rest_orders.push_back(arith::prime_to_part(n, p));
    }
    SylowPart part;
    part.prime = p;
    part.sylow_group = Group::from_invariants(InvariantFactors::from_cyclic_orders(p_orders));
    part.complement_quotient = Group::from_invariants(InvariantFactors::from_cyclic_orders(rest_orders));
    part.q_complement = count_cyclic_subgroups(part.complement_quotient);
    parts.push_back(std::move(part));
  }
  return parts;
}

RationalResidue character_value(const Group& G, std::span<const std::int64_t> chi, const GroupElement& g) {
  G.validate(g);
  if (chi.size() != G.rank()) {
    throw Error(Errc::invalid_argument, "character has " + std::to_string(chi.size()) +
                                            " coordinates, group has " + std::to_string(G.rank()));
  }
  RationalResidue total;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const std::int64_t n = G.factor_orders()[i];
    if (chi[i] < 0 || chi[i] >= n) throw Error(Errc::invalid_argument, "character coordinate out of range");
    total += RationalResidue(arith::mulmod(chi[i], g.residues[i], n), n);
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Group> abelian_groups_of_order(std::int64_t order) {
  std::vector<std::vector<std::int64_t>> combos{{}};
  for (auto [p, e] : arith::factorize(order)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& base : combos) {
      for (const auto& part : parts) {
        auto extended = base;
        for (int k : part) extended.push_back(arith::checked_pow(p, static_cast<std::uint64_t>(k)));
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }
  std::vector<Group> out;
  for (const auto& c : combos) out.push_back(Group::from_invariants(InvariantFactors::from_cyclic_orders(c), order));
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.invariant_factors().factors() < b.invariant_factors().factors();
  });
  return out;
}

std::vector<Group> abelian_groups_up_to(std::int64_t max_order) {
  std::vector<Group> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    auto groups = abelian_groups_of_order(n);
    out.insert(out.end(), std::make_move_iterator(groups.begin()), std::make_move_iterator(groups.end()));
  }
  return out;
}

}  // namespace homok
