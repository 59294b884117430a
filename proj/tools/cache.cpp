#include "cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace homok::cli {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

std::atomic<std::uint64_t> g_temp_counter{0};

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir, std::string tool_version, std::ostream& warnings)
    : dir_(std::move(dir)), version_(std::move(tool_version)), warnings_(&warnings) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_, ec)) {
    warnings << "warning: cache directory " << dir_ << " is not usable; caching disabled\n";
    return;
  }
  enabled_ = true;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("key", "") != key || entry.value("tool_version", "") != version_ || !entry.contains("payload"))
    return std::nullopt;
  return entry["payload"];
}

void ResultCache::put(const std::string& key, const nlohmann::json& payload) {
  if (!enabled_) return;
  const nlohmann::json entry{{"key", key}, {"tool_version", version_}, {"payload", payload}};
  const std::filesystem::path target = path_for(key);
  std::filesystem::path temp = target;
  temp += ".tmp-" + std::to_string(::getpid()) + "-" +
          hex(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "-" + std::to_string(g_temp_counter++);
  bool ok = false;
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (out) {
      out << entry.dump() << '\n';
      out.close();
      ok = static_cast<bool>(out);
    }
  }
  std::error_code ec;
  if (ok) std::filesystem::rename(temp, target, ec);
  if (!ok || ec) {
    std::filesystem::remove(temp, ec);
    if (warnings_) *warnings_ << "warning: cannot write to cache directory " << dir_ << "; caching disabled\n";
    enabled_ = false;
  }
}

std::string cache_key(const std::string& kind, const std::string& canonical_spec, const nlohmann::json& params) {
  return kind + "|" + canonical_spec + "|" + params.dump();
}

std::optional<std::filesystem::path> cache_directory(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("HOMOK_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace homok::cli
