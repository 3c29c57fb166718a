// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/cache.hpp"

#include <cstdlib>
#include <json.hpp>
#include <stdexcept>

namespace weilcid {

namespace {

using nlohmann::json;

Integer parse_integer(const json& j) {
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer string");
  return v;
}

}  // namespace

std::string CacheRecord::to_json_line() const {
  json coeffs = json::array();
  for (const auto& c : free_coeffs) coeffs.push_back(c.get_str());
  const json j{{"p", p},         {"g", g},     {"free_coeffs", coeffs},       {"n", n.get_str()},
               {"ord", ord.get_str()}, {"cid", cid}, {"tool_version", tool_version}};
  return j.dump();
}

std::optional<CacheRecord> CacheRecord::from_json_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    CacheRecord r;
    r.p = j.at("p").get<std::uint64_t>();
    r.g = j.at("g").get<unsigned>();
    for (const auto& c : j.at("free_coeffs")) r.free_coeffs.push_back(parse_integer(c));
    r.n = parse_integer(j.at("n"));
    r.ord = parse_integer(j.at("ord"));
    r.cid = j.at("cid").get<bool>();
    r.tool_version = j.at("tool_version").get<std::string>();
    if (r.free_coeffs.size() != r.g || r.n < 2 || r.ord < 1) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto r = CacheRecord::from_json_line(line);
      if (!r) {
        warnings_.push_back(path_.string() + ":" + std::to_string(lineno) + ": skipped malformed cache line");
        continue;
      }
      table_[r->key()] = std::move(*r);
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file " + path_.string() + " for appending");
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

std::optional<CacheRecord> ResultCache::lookup(const CacheRecord::Key& key, const std::string& version) const {
  std::lock_guard lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end() || it->second.tool_version != version) return std::nullopt;
  return it->second;
}

void ResultCache::append(const std::vector<CacheRecord>& records) {
  std::lock_guard lock(mu_);
  for (const auto& r : records) {
    out_ << r.to_json_line() << '\n';
    table_[r.key()] = r;
  }
  out_.flush();
}

std::vector<CacheRecord> ResultCache::records() const {
  std::lock_guard lock(mu_);
  std::vector<CacheRecord> out;
  for (const auto& [k, r] : table_) out.push_back(r);
  return out;
}

std::filesystem::path resolve_cache_path(const std::string& spec) {
  if (spec != "auto") return spec;
  if (const char* dir = std::getenv("WEILCID_CACHE_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "results.jsonl";
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "weilcid" / "results.jsonl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "weilcid" / "results.jsonl";
  return std::filesystem::path(".weilcid-cache") / "results.jsonl";
}

}  // namespace weilcid
