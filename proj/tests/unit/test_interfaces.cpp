#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cache.hpp"
#include "cli.hpp"
#include "homok/homok.h"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = homok::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("homok-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

std::string take(char* s) {
  std::string out = s;
  homok_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API group handles") {
  homok_group* g = nullptr;
  REQUIRE(homok_group_create("9,3,5", 0, &g) == HOMOK_OK);
  int64_t order = 0;
  CHECK(homok_group_order(g, &order) == HOMOK_OK);
  CHECK(order == 135);
  char* spec = nullptr;
  REQUIRE(homok_group_canonical_spec(g, &spec) == HOMOK_OK);
  CHECK(take(spec) == "3,45");
  char* json = nullptr;
  REQUIRE(homok_sk1(g, &json) == HOMOK_OK);
  const Json sk1 = Json::parse(take(json));
  CHECK(sk1["quotient"] == Json::array());
  homok_group_destroy(g);
  homok_group_destroy(nullptr);
}

TEST_CASE("C API error codes") {
  homok_group* g = nullptr;
  CHECK(homok_group_create("3,,3", 0, &g) == HOMOK_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(homok_last_error()).size() > 0);
  CHECK(homok_group_create(nullptr, 0, &g) == HOMOK_ERR_NULL_ARGUMENT);
  CHECK(homok_group_create("1000,1000", 1000, &g) == HOMOK_ERR_CAP_EXCEEDED);
  int64_t out = 0;
  CHECK(homok_higher_order(3, 0, &out) == HOMOK_ERR_INVALID_ARGUMENT);
  REQUIRE(homok_higher_order(6, 2, &out) == HOMOK_OK);
  CHECK(out == 8);
  char* s = nullptr;
  CHECK(homok_transfer("{not json", 0, &s) == HOMOK_ERR_PARSE);
  CHECK(homok_verify("nonsense", "{}", nullptr, &s) != HOMOK_OK);
  CHECK(std::string(homok_status_name(HOMOK_ERR_OVERFLOW)) == "overflow");
}

TEST_CASE("C API verify and oracle") {
  int passed = 0;
  char* s = nullptr;
  REQUIRE(homok_verify("thm213", R"({"max_order": 60})", &passed, &s) == HOMOK_OK);
  CHECK(passed == 1);
  CHECK(Json::parse(take(s))["passed"] == true);
  REQUIRE(homok_higher_order_oracle(-4, 6, &s) == HOMOK_OK);
  CHECK(take(s) == "48");
}

TEST_CASE("CLI exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"sk1", "--group", "3,,3"}).code == 2);
  CHECK(cli({"--cap", "100", "sk1", "--group", "11,11"}).code == 1);
  CHECK(cli({"od", "--d", "3"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  const Run ok = cli({"od", "--d", "4", "--k", "2", "--oracle"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("agreement true") != std::string::npos);
}

TEST_CASE("CLI JSON is presentation independent") {
  const Run a = cli({"--json", "sk1", "--group", "3,9,5"});
  const Run b = cli({"sk1", "--group", "5,9,3", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["group"] == "3,45");
  CHECK(j["theorem_4_1_applies"] == true);
  const Json even = Json::parse(cli({"--json", "sk1", "--group", "2,2"}).out);
  CHECK(even["sk1"].is_null());
}

TEST_CASE("CLI table writes CSV") {
  const fs::path dir = scratch_dir("table");
  fs::create_directories(dir);
  const fs::path out = dir / "t.csv";
  const Run r = cli({"table", "--family", "p^2", "--primes", "3,5", "--out", out.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "prime,group,hmg,coc_order,sk1,theorem_4_1_applies");
  CHECK(row == "3,\"3,3\",\"[3,3,3,3]\",81,[],true");
  fs::remove_all(dir);
}

TEST_CASE("result cache round trip and versioning") {
  const fs::path dir = scratch_dir("cache");
  std::ostringstream warnings;
  homok::cli::ResultCache cache(dir, "1.0.0", warnings);
  REQUIRE(cache.enabled());
  const std::string key = homok::cli::cache_key("sk1", "3,3", Json::object());
  CHECK(!cache.get(key));
  cache.put(key, Json{{"x", 1}});
  REQUIRE(cache.get(key));
  CHECK((*cache.get(key))["x"] == 1);
  homok::cli::ResultCache newer(dir, "2.0.0", warnings);
  CHECK(!newer.get(key));
  {
    std::ofstream corrupt(cache.path_for(key), std::ios::trunc);
    corrupt << "{truncated";
  }
  CHECK(!cache.get(key));
  fs::remove_all(dir);
}

TEST_CASE("result cache tolerates concurrent writers") {
  const fs::path dir = scratch_dir("concurrent");
  std::ostringstream warnings;
  homok::cli::ResultCache cache(dir, "1.0.0", warnings);
  const std::string key = homok::cli::cache_key("hmg", "3,9", Json{{"d", 2}});
  std::vector<std::thread> writers;
  for (int t = 0; t < 8; ++t)
    writers.emplace_back([&] {
      for (int i = 0; i < 50; ++i) cache.put(key, Json{{"value", "same"}});
    });
  for (std::thread& w : writers) w.join();
  REQUIRE(cache.get(key));
  CHECK((*cache.get(key))["value"] == "same");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  fs::remove_all(dir);
}

TEST_CASE("CLI uses the cache across presentations") {
  const fs::path dir = scratch_dir("cli-cache");
  const Run first = cli({"--cache", dir.string(), "--json", "hmg", "--group", "9,3", "--d", "2"});
  REQUIRE(first.code == 0);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  const Run second = cli({"--cache", dir.string(), "--json", "hmg", "--group", "3,9", "--d", "2"});
  CHECK(second.out == first.out);
  fs::remove_all(dir);
}
