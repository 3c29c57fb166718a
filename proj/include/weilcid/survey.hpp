// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "weilcid/weil.hpp"

namespace weilcid {

extern const char* const kToolVersion;

struct SurveyRow {
  std::vector<Integer> free_coeffs;
  unsigned p_rank = 0;
  std::vector<unsigned long> nonmono_n;
  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

enum class Format { json, csv, markdown };

Format parse_format(const std::string& s);

struct SurveyConfig {
  std::uint64_t p = 2;
  unsigned m = 1;
  unsigned g = 2;
  unsigned long n_max = 100;
  CoeffFilter filter;
  Format format = Format::json;
  std::optional<std::filesystem::path> cache_path;
  unsigned workers = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument describing the first problem.
  void validate() const;
};

struct SurveyStats {
  std::size_t polynomials = 0;
  std::size_t computed = 0;
  std::size_t cached = 0;
  std::vector<std::string> cache_warnings;
};

/// One row per irreducible Weil polynomial passing the filter, in
/// lexicographic order, listing every n in [2, n_max) prime to p for which
/// p is a common index divisor. Output does not depend on cfg.workers.
std::vector<SurveyRow> survey(const SurveyConfig& cfg, SurveyStats* stats = nullptr);

/// JSON array, CSV or markdown table of the rows; g fixes the column names.
std::string emit(const std::vector<SurveyRow>& rows, Format format, unsigned g);

/// emit() wrapped in a document carrying the configuration and the
/// hypothesis note.
std::string emit_document(const std::vector<SurveyRow>& rows, const SurveyConfig& cfg);

}  // namespace weilcid
