#pragma once

// On-disk result cache: one JSON file per key, written atomically.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace homok::cli {

class ResultCache {
 public:
  /// A disabled cache.
  ResultCache() = default;
  /// Creates the directory if needed; on failure warns and stays disabled.
  ResultCache(std::filesystem::path dir, std::string tool_version, std::ostream& warnings);

  bool enabled() const noexcept { return enabled_; }
  /// Miss on absent entry, foreign key (hash collision), other tool version
  /// or unreadable file.
  std::optional<nlohmann::json> get(const std::string& key) const;
  /// Temp file plus rename; a failed write warns once and disables the cache.
  void put(const std::string& key, const nlohmann::json& payload);

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warnings_ = nullptr;
  bool enabled_ = false;
};

/// "kind|canonical-spec|params".
std::string cache_key(const std::string& kind, const std::string& canonical_spec, const nlohmann::json& params);

/// --cache DIR if given, else HOMOK_CACHE_DIR, else nothing.
std::optional<std::filesystem::path> cache_directory(const std::optional<std::string>& flag);

}  // namespace homok::cli
