#include "homok/homok.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "homok/config.hpp"
#include "homok/error.hpp"
#include "homok/higher_orders.hpp"
#include "homok/json_io.hpp"
#include "homok/table.hpp"
#include "homok/verify.hpp"

struct homok_group {
  homok::Group group;
};

namespace {

using homok::json_io::Json;

thread_local std::string g_last_error;

homok_status status_of(homok::Errc code) {
  switch (code) {
    case homok::Errc::parse: return HOMOK_ERR_PARSE;
    case homok::Errc::invalid_argument: return HOMOK_ERR_INVALID_ARGUMENT;
    case homok::Errc::cap_exceeded: return HOMOK_ERR_CAP_EXCEEDED;
    case homok::Errc::not_stabilized: return HOMOK_ERR_NOT_STABILIZED;
    case homok::Errc::overflow: return HOMOK_ERR_OVERFLOW;
    case homok::Errc::compute: return HOMOK_ERR_COMPUTE;
    case homok::Errc::io: return HOMOK_ERR_IO;
  }
  return HOMOK_ERR_INTERNAL;
}

template <class F>
homok_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return HOMOK_OK;
  } catch (const homok::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("invalid JSON: ") + e.what();
    return HOMOK_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HOMOK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOMOK_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

homok_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return HOMOK_ERR_NULL_ARGUMENT;
}

std::int64_t cap_or_default(std::int64_t cap) { return cap > 0 ? cap : homok::kDefaultOrderCap; }

}  // namespace

#define HOMOK_REQUIRE(p) \
  do {                   \
    if (!(p)) return null_argument(#p); \
  } while (0)

extern "C" {

const char* homok_version(void) { return "1.0.0"; }

const char* homok_status_name(homok_status status) {
  switch (status) {
    case HOMOK_OK: return "ok";
    case HOMOK_ERR_PARSE: return "parse";
    case HOMOK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HOMOK_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case HOMOK_ERR_NOT_STABILIZED: return "not_stabilized";
    case HOMOK_ERR_OVERFLOW: return "overflow";
    case HOMOK_ERR_COMPUTE: return "compute";
    case HOMOK_ERR_IO: return "io";
    case HOMOK_ERR_NULL_ARGUMENT: return "null_argument";
    case HOMOK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* homok_last_error(void) { return g_last_error.c_str(); }

void homok_free(char* s) { std::free(s); }

void homok_set_debug_checks(int enabled) { homok::set_debug_checks(enabled != 0); }

homok_status homok_group_create(const char* spec, int64_t order_cap, homok_group** out) {
  HOMOK_REQUIRE(spec);
  HOMOK_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new homok_group{homok::Group::parse(spec, cap_or_default(order_cap))}; });
}

void homok_group_destroy(homok_group* group) { delete group; }

homok_status homok_group_order(const homok_group* group, int64_t* out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(out);
  *out = group->group.order();
  return HOMOK_OK;
}

homok_status homok_group_canonical_spec(const homok_group* group, char** out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(out);
  return guarded([&] { *out = copy_out(group->group.canonical_spec()); });
}

homok_status homok_group_describe(const homok_group* group, char** json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(json_out);
  return guarded([&] { *json_out = copy_out(homok::json_io::group_report(group->group).dump()); });
}

homok_status homok_higher_order(int64_t d, int64_t k, int64_t* out) {
  HOMOK_REQUIRE(out);
  return guarded([&] { *out = homok::higher_order(d, k); });
}

homok_status homok_higher_order_oracle(int64_t d, int64_t k, char** decimal_out) {
  HOMOK_REQUIRE(decimal_out);
  return guarded([&] { *decimal_out = copy_out(homok::higher_order_oracle(d, k).get_str()); });
}

homok_status homok_higher_order_report(int64_t d, int64_t k, int with_oracle, char** json_out) {
  HOMOK_REQUIRE(json_out);
  return guarded([&] { *json_out = copy_out(homok::json_io::higher_order_report(d, k, with_oracle != 0).dump()); });
}

homok_status homok_graded_bracket(const homok_group* group, int64_t d, char** json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(json_out);
  return guarded([&] {
    *json_out = copy_out(homok::json_io::graded_report(homok::graded_presentation(group->group, d)).dump());
  });
}

homok_status homok_hmg(const homok_group* group, int64_t d, const char* target, char** json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(json_out);
  return guarded([&] {
    const homok::HomTarget t = homok::json_io::parse_target(target ? target : "");
    *json_out = copy_out(homok::json_io::hmg_report(group->group, d, t).dump());
  });
}

homok_status homok_cocyclic(const homok_group* group, char** json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(json_out);
  return guarded([&] { *json_out = copy_out(homok::json_io::cocyclic_report(group->group).dump()); });
}

homok_status homok_sk1(const homok_group* group, char** json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(json_out);
  return guarded([&] { *json_out = copy_out(homok::json_io::sk1_report(homok::sk1_invariants(group->group)).dump()); });
}

homok_status homok_table_inspect(const char* table_json, char** json_out) {
  HOMOK_REQUIRE(table_json);
  HOMOK_REQUIRE(json_out);
  return guarded([&] {
    const homok::FunctionTable t = homok::json_io::parse_function_table(Json::parse(table_json));
    const homok::HomogeneityReport r = homok::is_homogeneous(t);
    Json out{{"group", t.domain().spec()}, {"degree", t.degree()}, {"homogeneous", r.homogeneous}};
    if (r.violation) out["violation"] = {{"x", r.violation->x}, {"n", r.violation->n}};
    if (r.homogeneous) {
      const homok::GradedPresentation P = homok::graded_presentation(t.domain(), t.degree());
      Json coords = Json::array();
      if (t.is_integral()) {
        for (std::int64_t v : homok::to_integer_coordinates(t, P)) coords.push_back(v);
      } else {
        for (const auto& v : homok::to_coordinates(t, P)) coords.push_back(homok::json_io::rational(v));
      }
      out["coordinates"] = coords;
    }
    *json_out = copy_out(out.dump());
  });
}

homok_status homok_table_from_coordinates(const homok_group* group, int64_t d, const char* coords_json,
                                          char** table_json_out) {
  HOMOK_REQUIRE(group);
  HOMOK_REQUIRE(coords_json);
  HOMOK_REQUIRE(table_json_out);
  return guarded([&] {
    const Json j = Json::parse(coords_json);
    if (!j.is_array()) throw homok::Error(homok::Errc::parse, "coordinates must be a JSON array");
    const homok::GradedPresentation P = homok::graded_presentation(group->group, d);
    homok::FunctionTable t = homok::FunctionTable::zero(group->group, d);
    if (d == 0) {
      std::vector<std::int64_t> c = j.get<std::vector<std::int64_t>>();
      t = homok::from_integer_coordinates(P, c);
    } else {
      std::vector<homok::RationalResidue> c;
      for (const Json& x : j) c.push_back(homok::json_io::parse_rational(x));
      t = homok::from_coordinates(P, c);
    }
    *table_json_out = copy_out(homok::json_io::function_table(t).dump());
  });
}

homok_status homok_transfer(const char* job_json, int64_t order_cap, char** json_out) {
  HOMOK_REQUIRE(job_json);
  HOMOK_REQUIRE(json_out);
  return guarded([&] {
    const auto job = homok::json_io::parse_transfer_job(Json::parse(job_json), cap_or_default(order_cap));
    *json_out = copy_out(homok::json_io::transfer_report(job).dump());
  });
}

homok_status homok_verify(const char* suite, const char* options_json, int* passed_out, char** json_out) {
  HOMOK_REQUIRE(suite);
  HOMOK_REQUIRE(passed_out);
  HOMOK_REQUIRE(json_out);
  return guarded([&] {
    homok::VerifyOptions o;
    Json opts = options_json ? Json::parse(options_json) : Json::object();
    if (!opts.is_object()) throw homok::Error(homok::Errc::parse, "verify options must be a JSON object");
    o.kmax = opts.value("kmax", o.kmax);
    o.dmax = opts.value("dmax", o.dmax);
    o.seed = opts.value("seed", o.seed);
    o.max_order = opts.value("max_order", o.max_order);
    o.trials = opts.value("trials", o.trials);
    const homok::VerifyReport r = homok::run_verify_suite(suite, o);
    Json out{{"suite", r.suite},
             {"passed", r.passed},
             {"checks", r.checks},
             {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
             {"parameters", {{"kmax", o.kmax}, {"dmax", o.dmax}, {"seed", o.seed}, {"max_order", o.max_order}, {"trials", o.trials}}}};
    *passed_out = r.passed ? 1 : 0;
    *json_out = copy_out(out.dump());
  });
}

homok_status homok_table_generate(const char* family, const char* primes, int64_t order_cap, char** csv_out,
                                  char** skipped_json_out) {
  HOMOK_REQUIRE(family);
  HOMOK_REQUIRE(primes);
  HOMOK_REQUIRE(csv_out);
  return guarded([&] {
    const homok::TableResult r = homok::generate_table(homok::FamilyTemplate::parse(family),
                                                       homok::parse_prime_list(primes), cap_or_default(order_cap));
    *csv_out = copy_out(r.csv);
    if (skipped_json_out) *skipped_json_out = copy_out(Json(r.skipped).dump());
  });
}

}  // extern "C"
