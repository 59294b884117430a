#include "homok/homogeneous.hpp"

#include <atomic>
#include <numeric>
#include <string>

#include "homok/arith.hpp"
#include "homok/config.hpp"
#include "homok/error.hpp"

namespace homok {

namespace {
std::atomic<bool> g_debug_checks{false};
}  // namespace

void set_debug_checks(bool enabled) noexcept { g_debug_checks.store(enabled); }
bool debug_checks() noexcept { return g_debug_checks.load(); }

FunctionTable FunctionTable::rational(Group domain, std::int64_t degree, std::vector<RationalResidue> values) {
  if (values.size() != static_cast<std::size_t>(domain.order()))
    throw Error(Errc::invalid_argument, "table must have one value per group element");
  FunctionTable t(std::move(domain), degree, false);
  t.rational_ = std::move(values);
  return t;
}

FunctionTable FunctionTable::integral(Group domain, std::vector<std::int64_t> values) {
  if (values.size() != static_cast<std::size_t>(domain.order()))
    throw Error(Errc::invalid_argument, "table must have one value per group element");
  FunctionTable t(std::move(domain), 0, true);
  t.integer_ = std::move(values);
  return t;
}

FunctionTable FunctionTable::zero(Group domain, std::int64_t degree) {
  const auto n = static_cast<std::size_t>(domain.order());
  if (degree == 0) return integral(std::move(domain), std::vector<std::int64_t>(n, 0));
  return rational(std::move(domain), degree, std::vector<RationalResidue>(n));
}

const std::vector<RationalResidue>& FunctionTable::rational_values() const {
  if (integral_) throw Error(Errc::invalid_argument, "table has integer values");
  return rational_;
}

const std::vector<std::int64_t>& FunctionTable::integer_values() const {
  if (!integral_) throw Error(Errc::invalid_argument, "table has Q/Z values");
  return integer_;
}

HomogeneityReport is_homogeneous(const FunctionTable& t) {
  const Group& G = t.domain();
  const std::int64_t d = t.degree();
  const auto abs_d = static_cast<std::uint64_t>(d < 0 ? -d : d);
  const auto size = static_cast<ElementIndex>(G.order());
  auto fail = [](ElementIndex x, std::int64_t n) { return HomogeneityReport{false, HomogeneityViolation{x, n}}; };

  for (ElementIndex x = 0; x < size; ++x) {
    const std::int64_t o = G.element_order(x);
    if (t.is_integral()) {
      const auto& v = t.integer_values();
      for (std::int64_t n = 1; n <= o; ++n) {
        if (std::gcd(n, o) != 1) continue;
        if (v[G.scale(n, x)] != v[x]) return fail(x, n);
      }
      continue;
    }
    const auto& v = t.rational_values();
    std::int64_t range = arith::checked_lcm(o, v[x].order());
    if (d < 0) {
      for (std::int64_t n = 1; n <= o; ++n)
        if (std::gcd(n, o) == 1) range = arith::checked_lcm(range, v[G.scale(n, x)].order());
    }
    for (std::int64_t n = 1; n <= range; ++n) {
      if (std::gcd(n, o) != 1) continue;
      const RationalResidue& fnx = v[G.scale(n, x)];
      if (d >= 0) {
        if (fnx != v[x].scaled(arith::powmod(n, abs_d, v[x].den()))) return fail(x, n);
      } else {
        if (fnx.scaled(arith::powmod(n, abs_d, fnx.den())) != v[x]) return fail(x, n);
      }
    }
  }
  return {};
}

namespace {

void require_homogeneous_in_debug(const FunctionTable& t, const char* where) {
  if (!debug_checks()) return;
  HomogeneityReport r = is_homogeneous(t);
  if (!r.homogeneous) {
    throw Error(Errc::compute, std::string(where) + " produced a non-homogeneous table (x=" +
                                   std::to_string(r.violation->x) + ", n=" + std::to_string(r.violation->n) + ")");
  }
}

void require_same_shape(const GradedPresentation& P, std::size_t n) {
  if (n != P.size()) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(P.size()) + " coordinates, got " +
                                            std::to_string(n));
  }
}

}  // namespace

FunctionTable from_coordinates(const GradedPresentation& P, std::span<const RationalResidue> coords,
                               std::optional<std::int64_t> target_modulus) {
  require_same_shape(P, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (P.degree() != 0 && P.modulus(i) % coords[i].order() != 0) {
      throw Error(Errc::invalid_argument, "coordinate " + coords[i].to_string() + " at summand " + std::to_string(i) +
                                              " has order not dividing o_d = " + std::to_string(P.modulus(i)));
    }
    if (target_modulus && *target_modulus % coords[i].order() != 0) {
      throw Error(Errc::invalid_argument, "coordinate " + coords[i].to_string() + " does not lie in Z/" +
                                              std::to_string(*target_modulus));
    }
  }
  const Group& G = P.group();
  const auto size = static_cast<ElementIndex>(G.order());
  std::vector<RationalResidue> values(size);
  for (ElementIndex g = 0; g < size; ++g) {
    if (P.degree() == 0) {
      values[g] = coords[P.subgroups().record_of(g)];
      continue;
    }
    const Projection pr = project_element(P, g);
    values[g] = coords[pr.summand].scaled(pr.coordinate);
  }
  FunctionTable t = FunctionTable::rational(G, P.degree(), std::move(values));
  require_homogeneous_in_debug(t, "from_coordinates");
  return t;
}

FunctionTable from_integer_coordinates(const GradedPresentation& P, std::span<const std::int64_t> coords) {
  if (P.degree() != 0) throw Error(Errc::invalid_argument, "integer-valued tables are degree 0 only");
  require_same_shape(P, coords.size());
  const Group& G = P.group();
  std::vector<std::int64_t> values(static_cast<std::size_t>(G.order()));
  for (ElementIndex g = 0; g < values.size(); ++g) values[g] = coords[P.subgroups().record_of(g)];
  return FunctionTable::integral(G, std::move(values));
}

namespace {

void require_matching(const FunctionTable& t, const GradedPresentation& P) {
  if (!(t.domain() == P.group()) || t.degree() != P.degree())
    throw Error(Errc::invalid_argument, "table and presentation disagree on group or degree");
  HomogeneityReport r = is_homogeneous(t);
  if (!r.homogeneous) {
    throw Error(Errc::invalid_argument, "table is not homogeneous of degree " + std::to_string(t.degree()) +
                                            " (x=" + std::to_string(r.violation->x) +
                                            ", n=" + std::to_string(r.violation->n) + ")");
  }
}

}  // namespace

std::vector<RationalResidue> to_coordinates(const FunctionTable& t, const GradedPresentation& P) {
  require_matching(t, P);
  const auto& v = t.rational_values();
  std::vector<RationalResidue> coords;
  coords.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    const RationalResidue& value = v[P.record(i).generator_index];
    if (P.degree() != 0 && P.modulus(i) % value.order() != 0) {
      throw Error(Errc::compute, "value at summand " + std::to_string(i) + " has order " +
                                     std::to_string(value.order()) + " not dividing o_d = " +
                                     std::to_string(P.modulus(i)));
    }
    coords.push_back(value);
  }
  return coords;
}

std::vector<RationalResidue> to_coordinates(const FunctionTable& t) {
  return to_coordinates(t, graded_presentation(t.domain(), t.degree()));
}

std::vector<std::int64_t> to_integer_coordinates(const FunctionTable& t, const GradedPresentation& P) {
  require_matching(t, P);
  const auto& v = t.integer_values();
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < P.size(); ++i) coords.push_back(v[P.record(i).generator_index]);
  return coords;
}

FunctionTable pointwise_combine(std::span<const FunctionTable> tables, std::span<const std::int64_t> weights) {
  if (tables.empty()) throw Error(Errc::invalid_argument, "nothing to combine");
  if (tables.size() != weights.size()) throw Error(Errc::invalid_argument, "one weight per table required");
  const FunctionTable& first = tables.front();
  for (const FunctionTable& t : tables) {
    if (!(t.domain() == first.domain()) || t.degree() != first.degree() || t.is_integral() != first.is_integral())
      throw Error(Errc::invalid_argument, "tables differ in domain, degree or value type");
  }
  const auto size = static_cast<std::size_t>(first.domain().order());
  if (first.is_integral()) {
    std::vector<std::int64_t> sum(size, 0);
    for (std::size_t k = 0; k < tables.size(); ++k)
      for (std::size_t g = 0; g < size; ++g)
        sum[g] = arith::checked_add(sum[g], arith::checked_mul(weights[k], tables[k].integer_values()[g]));
    return FunctionTable::integral(first.domain(), std::move(sum));
  }
  std::vector<RationalResidue> sum(size);
  for (std::size_t k = 0; k < tables.size(); ++k)
    for (std::size_t g = 0; g < size; ++g) sum[g] += tables[k].rational_values()[g].scaled(weights[k]);
  FunctionTable out = FunctionTable::rational(first.domain(), first.degree(), std::move(sum));
  require_homogeneous_in_debug(out, "pointwise_combine");
  return out;
}

FunctionTable precompose(const FunctionTable& t, const Group& source, std::span<const ElementIndex> alpha) {
  if (alpha.size() != static_cast<std::size_t>(source.order()))
    throw Error(Errc::invalid_argument, "map must give one image per source element");
  for (ElementIndex y : alpha)
    if (y >= static_cast<ElementIndex>(t.domain().order())) throw Error(Errc::invalid_argument, "image out of range");
  if (t.is_integral()) {
    std::vector<std::int64_t> v;
    for (ElementIndex y : alpha) v.push_back(t.integer_values()[y]);
    return FunctionTable::integral(source, std::move(v));
  }
  std::vector<RationalResidue> v;
  for (ElementIndex y : alpha) v.push_back(t.rational_values()[y]);
  return FunctionTable::rational(source, t.degree(), std::move(v));
}

}  // namespace homok
