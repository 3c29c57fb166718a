// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/tables.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

namespace weilcid {

SurveyConfig TableFixture::config() const {
  SurveyConfig cfg;
  cfg.p = p;
  cfg.g = g;
  cfg.n_max = n_max;
  cfg.filter = filter;
  return cfg;
}

TableFixture load_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read table fixture " + file.string());
  const auto j = nlohmann::json::parse(in);
  TableFixture t;
  t.id = j.at("id").get<std::string>();
  t.label = j.at("label").get<std::string>();
  t.p = j.at("p").get<std::uint64_t>();
  t.g = j.at("dim").get<unsigned>();
  t.n_max = j.at("n_max").get<unsigned long>();
  t.complete = j.at("complete").get<bool>();
  for (const auto& [k, v] : j.at("fix").items()) t.filter.fixed[std::stoul(k.substr(1))] = v.get<long>();
  for (const auto& r : j.at("rows")) {
    SurveyRow row;
    for (const auto& c : r.at("coeffs")) row.free_coeffs.emplace_back(c.get<long>());
    row.p_rank = r.at("p_rank").get<unsigned>();
    row.nonmono_n = r.at("nonmonogenic_n").get<std::vector<unsigned long>>();
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<TableFixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<TableFixture> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(load_fixture(e.path()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string format_row(const SurveyRow& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.free_coeffs.size(); ++i) os << (i ? "," : "") << r.free_coeffs[i].get_str();
  os << ") p-rank " << r.p_rank << " n=[";
  for (std::size_t i = 0; i < r.nonmono_n.size(); ++i) os << (i ? "," : "") << r.nonmono_n[i];
  os << "]";
  return os.str();
}

TableDiff compare_table(const TableFixture& fixture, const std::vector<SurveyRow>& produced) {
  TableDiff d;
  d.id = fixture.id;
  std::map<std::vector<Integer>, const SurveyRow*> by_coeffs;
  for (const auto& r : produced) by_coeffs[r.free_coeffs] = &r;
  std::map<std::vector<Integer>, bool> printed;
  for (const auto& e : fixture.rows) {
    printed[e.free_coeffs] = true;
    auto it = by_coeffs.find(e.free_coeffs);
    if (it == by_coeffs.end())
      d.missing.push_back(e);
    else if (*it->second == e)
      ++d.matched;
    else
      d.mismatched.push_back({e, *it->second});
  }
  for (const auto& r : produced)
    if (!printed.count(r.free_coeffs)) d.extra.push_back(r);
  return d;
}

std::string TableDiff::summary(bool complete) const {
  std::ostringstream os;
  os << id << ": " << matched << " rows match";
  if (!missing.empty()) os << ", " << missing.size() << " printed rows not produced";
  if (!mismatched.empty()) os << ", " << mismatched.size() << " rows differ";
  if (!extra.empty()) os << ", " << extra.size() << (complete ? " unprinted rows produced" : " further rows (table is a selection)");
  for (const auto& r : missing) os << "\n  missing  " << format_row(r);
  for (const auto& m : mismatched)
    os << "\n  expected " << format_row(m.expected) << "\n  actual   " << format_row(m.actual);
  if (complete)
    for (const auto& r : extra) os << "\n  extra    " << format_row(r);
  return os.str();
}

}  // namespace weilcid
