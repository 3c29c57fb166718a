// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

// weilcid: Weil polynomials, Frobenius matrices and common index divisors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "weilcid/analyze.hpp"
#include "weilcid/cache.hpp"
#include "weilcid/error.hpp"
#include "weilcid/monogeneity.hpp"
#include "weilcid/survey.hpp"
#include "weilcid/tables.hpp"

#ifndef WEILCID_DATA_DIR
#define WEILCID_DATA_DIR "data"
#endif

using namespace weilcid;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Integer> parse_integer_list(const std::string& s, const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    Integer v;
    if (v.set_str(item, 10) != 0) throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Integer parse_integer(const std::string& s, const char* what) {
  const auto v = parse_integer_list(s, what);
  if (v.size() != 1) throw UsageError(std::string("expected a single integer for ") + what);
  return v[0];
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct SurveyArgs {
  std::uint64_t p = 0;
  unsigned m = 1;
  unsigned dim = 0;
  unsigned long n_max = 0;
  std::string fix, format = "json", cache, output;
  unsigned workers = 1;
  std::uint64_t seed = 0;
};

SurveyConfig to_config(const SurveyArgs& a) {
  SurveyConfig cfg;
  cfg.p = a.p;
  cfg.m = a.m;
  cfg.g = a.dim;
  cfg.n_max = a.n_max;
  cfg.filter = CoeffFilter::parse(a.fix);
  cfg.format = parse_format(a.format);
  if (!a.cache.empty()) cfg.cache_path = resolve_cache_path(a.cache);
  cfg.workers = a.workers;
  cfg.seed = a.seed;
  cfg.validate();
  return cfg;
}

int run_survey(const SurveyArgs& a) {
  const SurveyConfig cfg = to_config(a);
  SurveyStats stats;
  const auto rows = survey(cfg, &stats);
  for (const auto& w : stats.cache_warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << stats.polynomials << " polynomials, " << stats.computed << " moduli computed, " << stats.cached
            << " from cache\n";
  write_output(emit_document(rows, cfg), a.output);
  return 0;
}

struct PolyArgs {
  std::uint64_t p = 0;
  unsigned m = 1;
  unsigned dim = 0;
  std::string coeffs, moduli;
};

int run_analyze(const PolyArgs& a) {
  const auto free = parse_integer_list(a.coeffs, "coefficient");
  const auto moduli = parse_integer_list(a.moduli, "modulus");
  std::cout << to_json(analyze(a.p, a.m, a.dim, free, moduli)) << "\n";
  return 0;
}

int run_matrix(const PolyArgs& a) {
  const auto c = from_free_coeffs(a.p, a.m, a.dim, parse_integer_list(a.coeffs, "coefficient"));
  const auto w = WeilPoly::from_candidate(c);
  if (!w) throw UsageError(c.poly.to_string('x') + " is not a Weil polynomial");
  const IntMatrix s = frobenius_matrix(*w);
  const auto mat_json = [](const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json out{{"polynomial", c.poly.to_string('x')},
                     {"basis", basis(a.dim)},
                     {"frobenius", mat_json(s)},
                     {"verschiebung", mat_json(verschiebung_matrix(*w))}};
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& n : parse_integer_list(a.moduli, "modulus")) {
    try {
      orders[n.get_str()] = frobenius_order_mod(*w, s, n).get_str();
    } catch (const NotCoprimeError& e) {
      orders[n.get_str()] = std::string("error: ") + e.what();
    }
  }
  if (!orders.empty()) out["orders"] = orders;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_tables(const std::string& data_dir, const std::string& only, unsigned workers, const std::string& cache) {
  bool ok = true;
  std::size_t ran = 0;
  for (const auto& t : load_fixtures(std::filesystem::path(data_dir) / "tables")) {
    if (!only.empty() && t.id != only) continue;
    ++ran;
    SurveyConfig cfg = t.config();
    cfg.workers = workers;
    if (!cache.empty()) cfg.cache_path = resolve_cache_path(cache);
    const auto diff = compare_table(t, survey(cfg));
    const bool pass = t.complete ? diff.exact() : diff.printed_rows_reproduced();
    ok = ok && pass;
    std::cout << (pass ? "MATCH    " : "MISMATCH ") << t.label << " " << diff.summary(t.complete) << "\n";
  }
  if (ran == 0) throw UsageError("no table fixtures selected in " + data_dir);
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil polynomials, Frobenius matrices and common index divisors of division fields"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  SurveyArgs sa;
  auto* survey_cmd = app.add_subcommand("survey", "List the n for which p is a common index divisor");
  survey_cmd->add_option("--p", sa.p, "Prime p")->required();
  survey_cmd->add_option("--m", sa.m, "Exponent m with q = p^m")->default_val(1);
  survey_cmd->add_option("--dim", sa.dim, "Dimension g")->required();
  survey_cmd->add_option("--n-max", sa.n_max, "Survey moduli 2 <= n < n-max")->required();
  survey_cmd->add_option("--fix", sa.fix, "Pinned coefficients, e.g. a5=0,a4=0");
  survey_cmd->add_option("--format", sa.format, "json, csv or markdown")->default_val("json");
  survey_cmd->add_option("--cache", sa.cache, "JSON-lines cache file, or 'auto'");
  survey_cmd->add_option("--workers", sa.workers, "Worker threads")->default_val(1);
  survey_cmd->add_option("--seed", sa.seed, "Seed for factorization randomness")->default_val(0);
  survey_cmd->add_option("-o,--output", sa.output, "Output file (default stdout)");

  PolyArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report on a single polynomial");
  analyze_cmd->add_option("--p", aa.p, "Prime p")->required();
  analyze_cmd->add_option("--m", aa.m, "Exponent m with q = p^m")->default_val(1);
  analyze_cmd->add_option("--dim", aa.dim, "Dimension g")->required();
  analyze_cmd->add_option("--coeffs", aa.coeffs, "Free coefficients a_{2g-1},...,a_g, comma separated")->required();
  analyze_cmd->add_option("--n", aa.moduli, "Moduli, comma separated");

  PolyArgs ma;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print the Frobenius and Verschiebung matrices");
  matrix_cmd->add_option("--p", ma.p, "Prime p")->required();
  matrix_cmd->add_option("--m", ma.m, "Exponent m with q = p^m")->default_val(1);
  matrix_cmd->add_option("--dim", ma.dim, "Dimension g")->required();
  matrix_cmd->add_option("--coeffs", ma.coeffs, "Free coefficients a_{2g-1},...,a_g, comma separated")->required();
  matrix_cmd->add_option("--n", ma.moduli, "Moduli for the order of the matrix, comma separated");

  unsigned gsp_dim = 0;
  std::string gsp_n;
  auto* gsp_cmd = app.add_subcommand("gsp-order", "Order of GSp_2g(Z/nZ)");
  gsp_cmd->add_option("--dim", gsp_dim, "Dimension g")->required();
  gsp_cmd->add_option("--n", gsp_n, "Modulus n")->required();

  unsigned long irred_degree = 0;
  std::uint64_t irred_p = 0;
  auto* irred_cmd = app.add_subcommand("irred-count", "Number of monic irreducible polynomials over F_p");
  irred_cmd->add_option("--degree", irred_degree, "Degree")->required();
  irred_cmd->add_option("--p", irred_p, "Prime p")->required();

  std::string data_dir = WEILCID_DATA_DIR, only, tables_cache;
  unsigned tables_workers = 1;
  auto* tables_cmd = app.add_subcommand("tables", "Recompute the bundled tables and diff against them");
  tables_cmd->add_option("--data-dir", data_dir, "Directory containing tables/*.json")->default_val(data_dir);
  tables_cmd->add_option("--only", only, "Run one table id, e.g. p2-dim2");
  tables_cmd->add_option("--workers", tables_workers, "Worker threads")->default_val(1);
  tables_cmd->add_option("--cache", tables_cache, "JSON-lines cache file, or 'auto'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*survey_cmd) return run_survey(sa);
    if (*analyze_cmd) return run_analyze(aa);
    if (*matrix_cmd) return run_matrix(ma);
    if (*gsp_cmd) {
      std::cout << gsp_order(gsp_dim, parse_integer(gsp_n, "modulus")).get_str() << "\n";
      return 0;
    }
    if (*irred_cmd) {
      if (!is_prime(from_u64(irred_p))) throw UsageError("p must be prime");
      std::cout << irred_count(irred_degree, irred_p).get_str() << "\n";
      return 0;
    }
    if (*tables_cmd) return run_tables(data_dir, only, tables_workers, tables_cache);
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
