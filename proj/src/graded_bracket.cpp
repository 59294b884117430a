#include "homok/graded_bracket.hpp"

#include <numeric>

#include "homok/arith.hpp"
#include "homok/error.hpp"
#include "homok/higher_orders.hpp"

namespace homok {

GradedPresentation::GradedPresentation(std::shared_ptr<const CyclicSubgroupIndex> subgroups, std::int64_t degree)
    : subgroups_(std::move(subgroups)), degree_(degree) {
  moduli_.reserve(subgroups_->size());
  for (const auto& rec : subgroups_->records()) moduli_.push_back(higher_order(degree_, rec.subgroup_order));
}

InvariantFactors GradedPresentation::invariants() const {
  if (degree_ == 0) return InvariantFactors::free(moduli_.size());
  return InvariantFactors::from_cyclic_orders(moduli_);
}

mpz_class GradedPresentation::order() const {
  if (degree_ == 0) throw Error(Errc::invalid_argument, "G[0] is free abelian");
  mpz_class n = 1;
  for (std::int64_t m : moduli_) n *= static_cast<long>(m);
  return n;
}

GradedPresentation graded_presentation(const Group& G, std::int64_t d) {
  return GradedPresentation(std::make_shared<const CyclicSubgroupIndex>(G), d);
}

Projection project_element(const GradedPresentation& P, ElementIndex g) {
  if (P.degree() == 0) throw Error(Errc::invalid_argument, "projection into G[0] is not defined here (d = 0)");
  if (g >= static_cast<ElementIndex>(P.group().order())) throw Error(Errc::invalid_argument, "element index out of range");
  const CyclicSubgroupIndex& idx = P.subgroups();
  const std::size_t summand = idx.record_of(g);
  const std::int64_t modulus = P.modulus(summand);
  if (g == 0) return {summand, 0};
  const std::int64_t n = idx.multiplier_of(g);
  const std::int64_t d = P.degree();
  std::int64_t coord = arith::powmod(n, static_cast<std::uint64_t>(d < 0 ? -d : d), modulus);
  if (d < 0) coord = arith::inverse_mod(coord, modulus);
  return {summand, coord};
}

Projection project_element(const GradedPresentation& P, const GroupElement& g) {
  return project_element(P, P.group().index_of(g));
}

HomTarget HomTarget::finite(InvariantFactors h) {
  if (!h.is_finite()) throw Error(Errc::invalid_argument, "finite target must have no free part");
  return HomTarget(Kind::finite, std::move(h));
}

HomTarget HomTarget::cyclic(std::int64_t m) {
  if (m < 1) throw Error(Errc::invalid_argument, "cyclic target order must be >= 1");
  const std::int64_t orders[] = {m};
  return finite(InvariantFactors::from_cyclic_orders(orders));
}

std::string HomTarget::to_string() const {
  switch (kind_) {
    case Kind::rationals_mod_integers: return "Q/Z";
    case Kind::integers: return "Z";
    case Kind::finite: return factors_.empty() ? "1" : factors_.to_string();
  }
  return "?";
}

InvariantFactors hom_invariants(const GradedPresentation& P, const HomTarget& target) {
  const bool degree_zero = P.degree() == 0;
  switch (target.kind()) {
    case HomTarget::Kind::rationals_mod_integers:
      if (degree_zero)
        throw Error(Errc::invalid_argument, "Hmg^0 is taken with values in Z; Q/Z is not a valid target for d = 0");
      // Hom(Z/a, Q/Z) = Z/a.
      return InvariantFactors::from_cyclic_orders(P.moduli());
    case HomTarget::Kind::integers:
      // Hom(Z, Z) = Z, Hom(Z/a, Z) = 0.
      return degree_zero ? InvariantFactors::free(P.size()) : InvariantFactors();
    case HomTarget::Kind::finite: {
      // Hom(Z/a, Z/b) = Z/gcd(a, b), with gcd(0, b) = b.
      std::vector<std::int64_t> orders;
      for (std::int64_t a : P.moduli())
        for (std::int64_t b : target.factors().factors()) orders.push_back(std::gcd(a, b));
      return InvariantFactors::from_cyclic_orders(orders);
    }
  }
  throw Error(Errc::invalid_argument, "unknown target");
}

InvariantFactors sylow_decomposition_invariants(const Group& G, std::int64_t d) {
  if (d == 0) throw Error(Errc::invalid_argument, "the Sylow decomposition is stated for d != 0");
  std::vector<std::int64_t> orders;
  for (const SylowPart& part : sylow_decompose(G)) {
    const InvariantFactors local =
        hom_invariants(graded_presentation(part.sylow_group, d), HomTarget::rationals_mod_integers());
    for (std::size_t i = 0; i < part.q_complement; ++i)
      orders.insert(orders.end(), local.factors().begin(), local.factors().end());
  }
  return InvariantFactors::from_cyclic_orders(orders);
}

}  // namespace homok
