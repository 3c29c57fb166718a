// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "weilcid/survey.hpp"

namespace weilcid {

/// A bundled expected table: its survey configuration and printed rows.
struct TableFixture {
  std::string id;
  std::string label;
  std::uint64_t p = 0;
  unsigned g = 0;
  unsigned long n_max = 0;
  CoeffFilter filter;
  /// False when the printed table is a selection of rows.
  bool complete = true;
  std::vector<SurveyRow> rows;

  SurveyConfig config() const;
};

TableFixture load_fixture(const std::filesystem::path& file);

/// Every *.json fixture in dir, sorted by id.
std::vector<TableFixture> load_fixtures(const std::filesystem::path& dir);

struct RowMismatch {
  SurveyRow expected;
  SurveyRow actual;
};

struct TableDiff {
  std::string id;
  std::size_t matched = 0;
  std::vector<SurveyRow> missing;  // printed but not produced
  std::vector<SurveyRow> extra;    // produced but not printed
  std::vector<RowMismatch> mismatched;

  /// Every printed row was produced with identical p-rank and n-list.
  bool printed_rows_reproduced() const { return missing.empty() && mismatched.empty(); }
  /// Additionally no unprinted rows.
  bool exact() const { return printed_rows_reproduced() && extra.empty(); }
  std::string summary(bool complete) const;
};

TableDiff compare_table(const TableFixture& fixture, const std::vector<SurveyRow>& produced);

std::string format_row(const SurveyRow& r);

}  // namespace weilcid
