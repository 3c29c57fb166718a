// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "weilcid/integer.hpp"

namespace weilcid {

/// One (polynomial, modulus) result.
struct CacheRecord {
  std::uint64_t p = 0;
  unsigned g = 0;
  std::vector<Integer> free_coeffs;
  Integer n;
  Integer ord;
  bool cid = false;
  std::string tool_version;

  using Key = std::tuple<std::uint64_t, unsigned, std::vector<Integer>, Integer>;
  Key key() const { return {p, g, free_coeffs, n}; }
  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;

  std::string to_json_line() const;
  /// nullopt for malformed input.
  static std::optional<CacheRecord> from_json_line(const std::string& line);
};

/// Append-only JSON-lines store; on load, later lines win for equal keys
/// and malformed lines are skipped.
class ResultCache {
 public:
  /// Loads existing records; warnings describe skipped lines.
  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const;

  /// Record for the key, provided it was written by `version`.
  std::optional<CacheRecord> lookup(const CacheRecord::Key& key, const std::string& version) const;
  /// Appends and flushes; safe to call from several threads.
  void append(const std::vector<CacheRecord>& records);

  /// Every record, with later duplicates replacing earlier ones.
  std::vector<CacheRecord> records() const;

 private:
  std::filesystem::path path_;
  std::vector<std::string> warnings_;
  mutable std::mutex mu_;
  std::map<CacheRecord::Key, CacheRecord> table_;
  std::ofstream out_;
};

/// Resolves "auto" to $WEILCID_CACHE_DIR/results.jsonl, falling back to
/// $XDG_CACHE_HOME/weilcid and then $HOME/.cache/weilcid. Other values are
/// returned unchanged.
std::filesystem::path resolve_cache_path(const std::string& spec);

}  // namespace weilcid
