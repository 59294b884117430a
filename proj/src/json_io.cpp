#include "homok/json_io.hpp"

#include <algorithm>

#include "homok/config.hpp"
#include "homok/error.hpp"
#include "homok/higher_orders.hpp"

namespace homok::json_io {

Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json invariants(const InvariantFactors& f) { return Json(f.factors()); }

Json rational(const RationalResidue& r) { return Json::array({r.num(), r.den()}); }

RationalResidue parse_rational(const Json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return RationalResidue(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  if (j.is_number_integer()) return RationalResidue(j.get<std::int64_t>(), 1);
  throw Error(Errc::parse, "expected [num, den], got " + j.dump());
}

Json element(const GroupElement& g) { return Json(g.residues); }

Json group_report(const Group& G) {
  const CyclicSubgroupIndex index(G);
  Json subgroups = Json::array();
  for (const auto& rec : index.records())
    subgroups.push_back({{"generator", element(rec.canonical_generator)}, {"order", rec.subgroup_order}});
  return {{"group", G.spec()},
          {"canonical", G.canonical_spec()},
          {"invariant_factors", invariants(G.invariant_factors())},
          {"order", G.order()},
          {"exponent", G.exponent()},
          {"q", index.size()},
          {"cyclic_subgroups", subgroups}};
}

Json higher_order_report(std::int64_t d, std::int64_t k, bool with_oracle) {
  Json j{{"d", d}, {"k", k}, {"closed_form", higher_order(d, k)}};
  if (with_oracle && d != 0) {
    OracleResult r = higher_order_oracle_run(d, k);
    j["oracle"] = big(r.value);
    j["oracle_terms"] = r.terms;
    j["agreement"] = r.value == higher_order(d, k);
  }
  return j;
}

Json graded_report(const GradedPresentation& P) {
  Json summands = Json::array();
  for (std::size_t i = 0; i < P.size(); ++i) {
    summands.push_back({{"generator", element(P.record(i).canonical_generator)},
                        {"subgroup_order", P.record(i).subgroup_order},
                        {"modulus", P.modulus(i)}});
  }
  return {{"group", P.group().canonical_spec()},
          {"degree", P.degree()},
          {"free_rank", P.free_rank()},
          {"summands", summands},
          {"invariants", invariants(P.invariants())}};
}

Json hmg_report(const Group& G, std::int64_t d, const HomTarget& target) {
  const GradedPresentation P = graded_presentation(G, d);
  const InvariantFactors inv = hom_invariants(P, target);
  Json j{{"group", G.canonical_spec()}, {"degree", d}, {"target", target.to_string()}, {"invariants", invariants(inv)}};
  if (inv.is_finite()) j["order"] = big(inv.order());
  return j;
}

Json cocyclic_report(const Group& G) {
  const SK1Report r = sk1_invariants(G);
  // Entries are sorted by isomorphism data only, so the document does not
  // depend on the presentation of G.
  std::vector<Json> list;
  for (const CocyclicSubgroup& K : cocyclic_subgroups(G)) {
    list.push_back({{"size", K.members.size()},
                    {"quotient_order", K.quotient_order},
                    {"invariants", K.generator_basis.orders}});
  }
  std::sort(list.begin(), list.end());
  return {{"group", G.canonical_spec()},
          {"cocyclic_subgroups", list},
          {"hmg", invariants(r.hmg)},
          {"coc", invariants(r.coc)},
          {"coc_order", big(r.coc.order())}};
}

Json sk1_report(const SK1Report& r) {
  Json q{{"total", r.q}};
  for (const auto& [p, count] : r.q_complements) q[std::to_string(p)] = count;
  return {{"group", r.group.canonical_spec()},
          {"hmg", invariants(r.hmg)},
          {"coc", invariants(r.coc)},
          {"quotient", invariants(r.quotient)},
          {"sk1", r.theorem_4_1_applies ? invariants(r.quotient) : Json(nullptr)},
          {"theorem_4_1_applies", r.theorem_4_1_applies},
          {"q_counts", q}};
}

Json function_table(const FunctionTable& t) {
  Json values = Json::array();
  if (t.is_integral()) {
    for (std::int64_t v : t.integer_values()) values.push_back(Json::array({v, 1}));
  } else {
    for (const RationalResidue& v : t.rational_values()) values.push_back(rational(v));
  }
  return {{"group", t.domain().spec()}, {"degree", t.degree()}, {"values", values}};
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(Errc::parse, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(Errc::parse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

FunctionTable parse_function_table(const Json& j, std::int64_t order_cap) {
  Group G = Group::parse(string_field(j, "group"), order_cap);
  const std::int64_t d = int_field(j, "degree");
  const Json& values = field(j, "values");
  if (!values.is_array()) throw Error(Errc::parse, "field 'values' must be an array");
  if (d == 0) {
    std::vector<std::int64_t> v;
    for (const Json& x : values) {
      if (x.is_array() && x.size() == 2 && x[1] == 1 && x[0].is_number_integer()) {
        v.push_back(x[0].get<std::int64_t>());
      } else if (x.is_number_integer()) {
        v.push_back(x.get<std::int64_t>());
      } else {
        throw Error(Errc::parse, "degree-0 values must be integers, got " + x.dump());
      }
    }
    return FunctionTable::integral(std::move(G), std::move(v));
  }
  std::vector<RationalResidue> v;
  for (const Json& x : values) v.push_back(parse_rational(x));
  return FunctionTable::rational(std::move(G), d, std::move(v));
}

TransferJob parse_transfer_job(const Json& j, std::int64_t order_cap) {
  TransferJob job;
  job.map.degree = int_field(j, "d");
  job.map.source = Group::parse(string_field(j, "source"), order_cap);
  job.map.target = Group::parse(string_field(j, "target"), order_cap);
  const Json& t = field(j, "t_values");
  if (!t.is_array()) throw Error(Errc::parse, "field 't_values' must be an array");
  for (const Json& y : t) {
    if (!y.is_array()) throw Error(Errc::parse, "each t value must be a residue tuple");
    std::vector<std::int64_t> residues;
    for (const Json& r : y) {
      if (!r.is_number_integer()) throw Error(Errc::parse, "residues must be integers");
      residues.push_back(r.get<std::int64_t>());
    }
    job.map.values.push_back(job.map.target.index_of(job.map.target.make_element(std::move(residues))));
  }
  if (j.contains("f_coords")) {
    for (const Json& x : field(j, "f_coords")) job.f.push_back(parse_rational(x));
  }
  return job;
}

Json transfer_report(const TransferJob& job) {
  const InducedGradedMap m(job.map);
  Json summands = Json::array();
  for (std::size_t jx = 0; jx < m.target().size(); ++jx) {
    Json s{{"generator", element(m.target().record(jx).canonical_generator)},
           {"modulus", m.target().modulus(jx)},
           {"status", m.is_onto(jx) ? "onto" : "misses"}};
    if (const auto& sec = m.sections()[jx])
      s["section"] = {{"source_summand", sec->source_summand}, {"coordinate", sec->coordinate}};
    summands.push_back(s);
  }
  Json images = Json::array();
  for (const SummandImage& im : m.images()) images.push_back({{"summand", im.summand}, {"coefficient", im.coefficient}});
  Json out{{"d", m.degree()},
           {"source", job.map.source.spec()},
           {"target", job.map.target.spec()},
           {"kernel_size", big(m.kernel_size())},
           {"source_images", images},
           {"target_summands", summands},
           {"audit", "passed"}};
  if (!job.f.empty()) {
    const HomCoordinates t = transfer_apply(m, job.f);
    Json coords = Json::array();
    for (const RationalResidue& v : t) coords.push_back(rational(v));
    out["transfer"] = coords;
    if (debug_checks() && transfer_literal(m, job.f) != transfer_table(m, job.f))
      throw Error(Errc::compute, "closed-form transfer disagrees with the literal preimage sum");
  }
  return out;
}

HomTarget parse_target(const std::string& text) {
  if (text.empty() || text == "QZ" || text == "Q/Z") return HomTarget::rationals_mod_integers();
  if (text == "Z") return HomTarget::integers();
  return HomTarget::finite(Group::parse(text).invariant_factors());
}

}  // namespace homok::json_io
