#pragma once

// JSON documents for every computation. Keys are emitted in sorted order, so
// output is byte-stable for equal inputs.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "homok/cocyclic.hpp"
#include "homok/graded_bracket.hpp"
#include "homok/group.hpp"
#include "homok/homogeneous.hpp"
#include "homok/snf.hpp"
#include "homok/transfer.hpp"

namespace homok::json_io {

using Json = nlohmann::json;

Json big(const mpz_class& v);
Json invariants(const InvariantFactors& f);
Json rational(const RationalResidue& r);
RationalResidue parse_rational(const Json& j);
Json element(const GroupElement& g);

Json group_report(const Group& G);
Json higher_order_report(std::int64_t d, std::int64_t k, bool with_oracle);
Json graded_report(const GradedPresentation& P);
Json hmg_report(const Group& G, std::int64_t d, const HomTarget& target);
Json cocyclic_report(const Group& G);
Json sk1_report(const SK1Report& r);

/// {"group": spec, "degree": d, "values": [[num, den], ...]}; degree 0
/// integer tables write [v, 1].
Json function_table(const FunctionTable& t);
FunctionTable parse_function_table(const Json& j, std::int64_t order_cap = kDefaultOrderCap);

/// Transfer job {"d", "source", "target", "t_values", "f_coords"}.
struct TransferJob {
  HomogeneousMap map;
  std::vector<RationalResidue> f;
};
TransferJob parse_transfer_job(const Json& j, std::int64_t order_cap = kDefaultOrderCap);
Json transfer_report(const TransferJob& job);

/// Target text for Hom: empty or "QZ" for Q/Z, "Z" for the integers,
/// otherwise a group spec.
HomTarget parse_target(const std::string& text);

}  // namespace homok::json_io
