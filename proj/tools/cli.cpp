#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "homok/homok.h"

namespace homok::cli {

namespace {

using Json = nlohmann::json;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(homok_status s) {
  switch (s) {
    case HOMOK_OK: return 0;
    case HOMOK_ERR_PARSE:
    case HOMOK_ERR_INVALID_ARGUMENT:
    case HOMOK_ERR_NULL_ARGUMENT: return 2;
    default: return 1;
  }
}

void check(homok_status s) {
  if (s != HOMOK_OK) throw Failure{exit_code_for(s), std::string(homok_status_name(s)) + ": " + homok_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  homok_free(s);
  return out;
}

using GroupHandle = std::unique_ptr<homok_group, decltype(&homok_group_destroy)>;

GroupHandle open_group(const std::string& spec, std::int64_t cap) {
  homok_group* g = nullptr;
  check(homok_group_create(spec.c_str(), cap, &g));
  return GroupHandle(g, &homok_group_destroy);
}

std::string canonical(const homok_group* g) {
  char* s = nullptr;
  check(homok_group_canonical_spec(g, &s));
  return take(s);
}

std::string list(const Json& j) {
  if (j.is_null()) return "n/a";
  return j.dump();
}

struct Settings {
  bool json = false;
  bool debug_checks = false;
  std::int64_t cap = 0;
  std::optional<std::string> cache_dir;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Settings settings;

  void open_cache() {
    if (auto dir = cache_directory(settings.cache_dir)) cache_ = ResultCache(*dir, homok_version(), err_);
  }

  // Returns the cached payload for key, or computes and stores it.
  template <class F>
  Json cached(const std::string& key, F&& compute) {
    if (auto hit = cache_.get(key)) return *hit;
    Json payload = compute();
    cache_.put(key, payload);
    return payload;
  }

  void emit(const Json& j, const std::function<void()>& text) {
    if (settings.json) {
      out_ << j.dump(2) << '\n';
    } else {
      text();
    }
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  ResultCache cache_;
};

void cmd_group(Runner& r, const std::string& spec) {
  GroupHandle g = open_group(spec, r.settings.cap);
  char* s = nullptr;
  check(homok_group_describe(g.get(), &s));
  const Json j = Json::parse(take(s));
  r.emit(j, [&] {
    auto& o = r.out();
    o << "group " << j["group"].get<std::string>() << "\n";
    o << "invariant factors " << list(j["invariant_factors"]) << "\n";
    o << "order " << j["order"] << "\nexponent " << j["exponent"] << "\nq " << j["q"] << "\n";
    o << "cyclic subgroups:\n";
    for (const Json& c : j["cyclic_subgroups"]) o << "  order " << c["order"] << "  generator " << c["generator"].dump() << "\n";
  });
}

void cmd_od(Runner& r, std::int64_t d, std::int64_t k, bool oracle) {
  const Json params{{"d", d}, {"k", k}, {"oracle", oracle}};
  const Json j = r.cached(cache_key("od", "-", params), [&] {
    char* s = nullptr;
    check(homok_higher_order_report(d, k, oracle ? 1 : 0, &s));
    return Json::parse(take(s));
  });
  r.emit(j, [&] {
    r.out() << "o_" << d << "(" << k << ") = " << j["closed_form"] << "\n";
    if (j.contains("oracle")) {
      r.out() << "oracle " << j["oracle"] << " (" << j["oracle_terms"] << " terms)\n";
      r.out() << "agreement " << (j["agreement"].get<bool>() ? "true" : "false") << "\n";
    }
  });
  if (j.contains("agreement") && !j["agreement"].get<bool>()) throw Failure{1, "closed form and oracle disagree"};
}

void cmd_gd(Runner& r, const std::string& spec, std::int64_t d) {
  GroupHandle g = open_group(spec, r.settings.cap);
  char* s = nullptr;
  check(homok_graded_bracket(g.get(), d, &s));
  const Json j = Json::parse(take(s));
  r.emit(j, [&] {
    auto& o = r.out();
    o << "G[" << d << "] for G = " << j["group"].get<std::string>() << ": " << list(j["invariants"]) << "\n";
    if (d == 0) o << "free rank " << j["free_rank"] << "\n";
    for (const Json& c : j["summands"]) {
      o << "  <" << c["generator"].dump() << "> order " << c["subgroup_order"] << "  modulus " << c["modulus"] << "\n";
    }
  });
}

void cmd_hmg(Runner& r, const std::string& spec, std::int64_t d, const std::string& target) {
  GroupHandle g = open_group(spec, r.settings.cap);
  std::string target_key = target.empty() ? "QZ" : target;
  if (target_key != "QZ" && target_key != "Q/Z" && target_key != "Z") target_key = canonical(open_group(target, 0).get());
  const Json params{{"d", d}, {"target", target_key}};
  const Json j = r.cached(cache_key("hmg", canonical(g.get()), params), [&] {
    char* s = nullptr;
    check(homok_hmg(g.get(), d, target.empty() ? nullptr : target.c_str(), &s));
    return Json::parse(take(s));
  });
  r.emit(j, [&] {
    r.out() << "Hmg^" << d << "(" << j["group"].get<std::string>() << ", " << j["target"].get<std::string>()
            << ") = " << list(j["invariants"]) << "\n";
    if (j.contains("order")) r.out() << "order " << j["order"] << "\n";
  });
}

void cmd_coc(Runner& r, const std::string& spec) {
  GroupHandle g = open_group(spec, r.settings.cap);
  const Json j = r.cached(cache_key("coc", canonical(g.get()), Json::object()), [&] {
    char* s = nullptr;
    check(homok_cocyclic(g.get(), &s));
    return Json::parse(take(s));
  });
  r.emit(j, [&] {
    auto& o = r.out();
    o << "group " << j["group"].get<std::string>() << "\n";
    o << "cocyclic subgroups " << j["cocyclic_subgroups"].size() << "\n";
    o << "Hmg " << list(j["hmg"]) << "\nCoc " << list(j["coc"]) << "\n|Coc| " << j["coc_order"] << "\n";
  });
}

void cmd_sk1(Runner& r, const std::string& spec) {
  GroupHandle g = open_group(spec, r.settings.cap);
  const Json j = r.cached(cache_key("sk1", canonical(g.get()), Json::object()), [&] {
    char* s = nullptr;
    check(homok_sk1(g.get(), &s));
    return Json::parse(take(s));
  });
  r.emit(j, [&] {
    auto& o = r.out();
    o << "group " << j["group"].get<std::string>() << "\n";
    o << "Hmg " << list(j["hmg"]) << "\nCoc " << list(j["coc"]) << "\nHmg/Coc " << list(j["quotient"]) << "\n";
    if (j["theorem_4_1_applies"].get<bool>()) {
      o << "SK1(Z[G]) " << list(j["sk1"]) << "\n";
    } else {
      o << "SK1(Z[G]) not identified (|G| even)\n";
    }
  });
}

void cmd_transfer(Runner& r, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{2, "cannot read job file " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  char* s = nullptr;
  check(homok_transfer(buf.str().c_str(), r.settings.cap, &s));
  const Json j = Json::parse(take(s));
  r.emit(j, [&] {
    auto& o = r.out();
    o << "induced map " << j["source"].get<std::string>() << " -> " << j["target"].get<std::string>() << " (d=" << j["d"]
      << ")\nkernel size " << j["kernel_size"] << "\n";
    for (std::size_t i = 0; i < j["target_summands"].size(); ++i) {
      const Json& t = j["target_summands"][i];
      o << "  summand " << i << " <" << t["generator"].dump() << "> mod " << t["modulus"] << ": "
        << t["status"].get<std::string>() << "\n";
    }
    if (j.contains("transfer")) o << "transfer " << j["transfer"].dump() << "\n";
  });
}

int cmd_verify(Runner& r, const std::string& suite, const Json& options) {
  char* s = nullptr;
  int passed = 0;
  check(homok_verify(suite.c_str(), options.dump().c_str(), &passed, &s));
  const Json j = Json::parse(take(s));
  r.emit(j, [&] {
    if (passed) {
      r.out() << suite << ": PASS (" << j["checks"] << " checks)\n";
    } else {
      r.out() << suite << ": FAIL after " << j["checks"] << " checks\ncounterexample: "
              << j["counterexample"].get<std::string>() << "\n";
    }
  });
  if (!passed) r.err() << "counterexample: " << j["counterexample"].get<std::string>() << "\n";
  return passed ? 0 : 1;
}

void cmd_table(Runner& r, const std::string& family, const std::string& primes, const std::string& path) {
  char* csv = nullptr;
  char* skipped = nullptr;
  check(homok_table_generate(family.c_str(), primes.c_str(), r.settings.cap, &csv, &skipped));
  const std::string text = take(csv);
  const Json reasons = Json::parse(take(skipped));
  for (const Json& reason : reasons) r.err() << "skipped " << reason.get<std::string>() << "\n";
  const auto rows = static_cast<std::int64_t>(std::count(text.begin(), text.end(), '\n')) - 1;
  if (path == "-") {
    r.out() << text;
    return;
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!(out << text)) throw Failure{1, "cannot write " + path};
  }
  const Json j{{"out", path}, {"rows", rows}, {"skipped", reasons}};
  r.emit(j, [&] { r.out() << "wrote " << rows << " rows to " << path << "\n"; });
}

void cmd_inspect(Runner& r, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{2, "cannot read table file " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  char* s = nullptr;
  check(homok_table_inspect(buf.str().c_str(), &s));
  const Json j = Json::parse(take(s));
  r.emit(j, [&] {
    if (j["homogeneous"].get<bool>()) {
      r.out() << "homogeneous of degree " << j["degree"] << "\ncoordinates " << j["coordinates"].dump() << "\n";
    } else {
      r.out() << "not homogeneous: fails at x=" << j["violation"]["x"] << ", n=" << j["violation"]["n"] << "\n";
    }
  });
  if (!j["homogeneous"].get<bool>()) throw Failure{1, "table is not homogeneous"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  Settings& st = runner.settings;

  CLI::App app{"Homogeneous functions, graded brackets and SK1 of finite abelian groups", "homok"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(homok_version()));
  app.add_flag("--json", st.json, "Emit JSON documents");
  app.add_flag("--debug-checks", st.debug_checks, "Enable internal self-checks");
  app.add_option("--cap", st.cap, "Largest group order to enumerate (default 100000)");
  std::string cache_dir;
  app.add_option("--cache", cache_dir, "Result cache directory (else HOMOK_CACHE_DIR)");

  std::string spec, target, job, suite, family, primes, out_path, table_path;
  std::int64_t d = 1, k = 1, kmax = 60, dmax = 24, max_order = 0, trials = 0;
  std::uint64_t seed = 0;
  bool oracle = false;

  auto* group = app.add_subcommand("group", "Invariants and cyclic subgroups of a group");
  group->add_option("spec", spec, "Group spec, e.g. 3^2,9")->required();

  auto* od = app.add_subcommand("od", "Higher order o_d(k)");
  od->add_option("--d", d)->required();
  od->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  od->add_flag("--oracle", oracle, "Also run the gcd oracle");

  auto* gd = app.add_subcommand("gd", "Graded bracket G[d]");
  gd->add_option("--group", spec)->required();
  gd->add_option("--d", d)->required();

  auto* hmg = app.add_subcommand("hmg", "Invariants of Hmg^d(G, H)");
  hmg->add_option("--group", spec)->required();
  hmg->add_option("--d", d)->required();
  hmg->add_option("--target", target, "QZ (default), Z, or a group spec");

  auto* coc = app.add_subcommand("coc", "Cocyclic subgroups and Coc(G)");
  coc->add_option("--group", spec)->required();

  auto* sk1 = app.add_subcommand("sk1", "Hmg(G)/Coc(G), i.e. SK1(Z[G]) for odd |G|");
  sk1->add_option("--group", spec)->required();

  auto* transfer = app.add_subcommand("transfer", "Induced map and transfer for a job file");
  transfer->add_option("--job", job)->required();

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite)->required();
  auto* kmax_opt = verify->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  auto* dmax_opt = verify->add_option("--dmax", dmax)->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", seed);
  auto* order_opt = verify->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  auto* trials_opt = verify->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "CSV of Hmg, Coc and Hmg/Coc over a family of groups");
  table->add_option("--family", family, "e.g. p^3, homocyclic:2, p,p**2")->required();
  table->add_option("--primes", primes, "e.g. 3,5,7 or 3..31")->required();
  table->add_option("--out", out_path, "Output path, - for stdout")->required();

  auto* inspect = app.add_subcommand("inspect", "Homogeneity check and coordinates of a function table");
  inspect->add_option("--table", table_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << homok_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!cache_dir.empty()) st.cache_dir = cache_dir;
  homok_set_debug_checks(st.debug_checks ? 1 : 0);
  try {
    runner.open_cache();
    if (*group) cmd_group(runner, spec);
    if (*od) cmd_od(runner, d, k, oracle);
    if (*gd) cmd_gd(runner, spec, d);
    if (*hmg) cmd_hmg(runner, spec, d, target);
    if (*coc) cmd_coc(runner, spec);
    if (*sk1) cmd_sk1(runner, spec);
    if (*transfer) cmd_transfer(runner, job);
    if (*verify) {
      Json options = Json::object();
      if (kmax_opt->count()) options["kmax"] = kmax;
      if (dmax_opt->count()) options["dmax"] = dmax;
      if (seed_opt->count()) options["seed"] = seed;
      if (order_opt->count()) options["max_order"] = max_order;
      if (trials_opt->count()) options["trials"] = trials;
      return cmd_verify(runner, suite, options);
    }
    if (*table) cmd_table(runner, family, primes, out_path);
    if (*inspect) cmd_inspect(runner, table_path);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const Json::exception& e) {
    err << "error: malformed result document: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace homok::cli
