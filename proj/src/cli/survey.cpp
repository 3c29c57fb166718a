// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/survey.hpp"

#include <atomic>
#include <exception>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weilcid/cache.hpp"
#include "weilcid/error.hpp"
#include "weilcid/factorize.hpp"
#include "weilcid/frobenius.hpp"
#include "weilcid/monogeneity.hpp"

#ifndef WEILCID_VERSION
#define WEILCID_VERSION "0.0.0"
#endif

namespace weilcid {

const char* const kToolVersion = WEILCID_VERSION;

namespace {

using nlohmann::json;

struct Modulus {
  unsigned long n;
  std::vector<Integer> prime_powers;
};

std::vector<Modulus> survey_moduli(const SurveyConfig& cfg) {
  std::vector<Modulus> out;
  for (unsigned long n = 2; n < cfg.n_max; ++n) {
    if (n % cfg.p == 0) continue;
    Modulus m{n, {}};
    for (const auto& [l, e] : factorize(Integer(n), cfg.seed).factors) m.prime_powers.push_back(pow(l, e));
    out.push_back(std::move(m));
  }
  return out;
}

SurveyRow survey_one(const WeilPoly& w, const std::vector<Modulus>& moduli, ResultCache* cache,
                     std::size_t& computed, std::size_t& cached) {
  SurveyRow row{w.free_coeffs(), p_rank(w), {}};
  const IntMatrix sigma = frobenius_matrix(w);
  std::map<Integer, Integer> local_order;  // order mod l^e
  std::vector<CacheRecord> fresh;
  for (const auto& m : moduli) {
    const Integer n(m.n);
    if (cache) {
      if (auto hit = cache->lookup({w.p(), w.g(), w.free_coeffs(), n}, kToolVersion)) {
        ++cached;
        if (hit->cid) row.nonmono_n.push_back(m.n);
        continue;
      }
    }
    Integer ord = 1;
    for (const auto& pe : m.prime_powers) {
      auto it = local_order.find(pe);
      if (it == local_order.end()) it = local_order.emplace(pe, frobenius_order_mod(w, sigma, pe)).first;
      ord = lcm(ord, it->second);
    }
    if (ord == 1) ensure(divides(pow(n, 2 * w.g()), w.poly().eval(1).get_num()), "order 1 without n^{2g} | f(1)");
    const bool cid = cid_from_order(w.g(), w.p(), n, ord);
    ++computed;
    if (cid) row.nonmono_n.push_back(m.n);
    if (cache) fresh.push_back(CacheRecord{w.p(), w.g(), w.free_coeffs(), n, ord, cid, kToolVersion});
  }
  if (cache && !fresh.empty()) cache->append(fresh);
  return row;
}

json coeff_json(const Integer& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return json(c.get_si());
  return json(c.get_str());
}

std::vector<std::string> coeff_names(unsigned g) {
  std::vector<std::string> names;
  for (unsigned i = 2 * g - 1; i >= g; --i) names.push_back("a_" + std::to_string(i));
  return names;
}

std::string join(const std::vector<unsigned long>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

json rows_json(const std::vector<SurveyRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json coeffs = json::array();
    for (const auto& c : r.free_coeffs) coeffs.push_back(coeff_json(c));
    arr.push_back(json{{"coeffs", coeffs}, {"p_rank", r.p_rank}, {"nonmonogenic_n", r.nonmono_n}});
  }
  return arr;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or markdown)");
}

void SurveyConfig::validate() const {
  if (!is_prime(from_u64(p))) throw std::invalid_argument("p must be prime");
  if (m != 1) throw std::invalid_argument("surveys require q = p (m = 1)");
  if (g < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n_max < 2) throw std::invalid_argument("n-max must be at least 2");
  if (n_max > (1ul << 32)) throw std::invalid_argument("n-max must be below 2^32");
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  filter.validate(g);
}

std::vector<SurveyRow> survey(const SurveyConfig& cfg, SurveyStats* stats) {
  cfg.validate();
  const auto polys = enumerate_weil(cfg.p, cfg.g, cfg.m, cfg.filter);
  const auto moduli = survey_moduli(cfg);
  std::optional<ResultCache> cache;
  if (cfg.cache_path) cache.emplace(*cfg.cache_path);

  std::vector<SurveyRow> rows(polys.size());
  std::atomic<std::size_t> next{0}, computed{0}, cached{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < polys.size();) {
      try {
        std::size_t c = 0, h = 0;
        rows[i] = survey_one(polys[i], moduli, cache ? &*cache : nullptr, c, h);
        computed += c;
        cached += h;
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = polys.size();
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(cfg.workers, std::max<std::size_t>(polys.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (stats) {
    stats->polynomials = polys.size();
    stats->computed = computed;
    stats->cached = cached;
    if (cache) stats->cache_warnings = cache->warnings();
  }
  return rows;
}

std::string emit(const std::vector<SurveyRow>& rows, Format format, unsigned g) {
  std::ostringstream os;
  const auto names = coeff_names(g);
  switch (format) {
    case Format::json:
      return rows_json(rows).dump(1);
    case Format::csv:
      for (const auto& nm : names) os << nm << ",";
      os << "p_rank,nonmono_n\n";
      for (const auto& r : rows) {
        for (const auto& c : r.free_coeffs) os << c.get_str() << ",";
        os << r.p_rank << "," << join(r.nonmono_n, ";") << "\n";
      }
      return os.str();
    case Format::markdown:
      for (const auto& nm : names) os << nm << " | ";
      os << "p-rank | non-monogenic n\n";
      for (std::size_t i = 0; i < names.size() + 2; ++i) os << (i ? " | " : "") << "---";
      os << "\n";
      for (const auto& r : rows) {
        for (const auto& c : r.free_coeffs) os << c.get_str() << " | ";
        os << r.p_rank << " | " << join(r.nonmono_n, ", ") << "\n";
      }
      return os.str();
  }
  throw std::logic_error("unhandled format");
}

std::string emit_document(const std::vector<SurveyRow>& rows, const SurveyConfig& cfg) {
  const std::string fix = cfg.filter.to_string();
  std::ostringstream os;
  switch (cfg.format) {
    case Format::json: {
      json doc{{"note", kHypothesisNote},
               {"config", {{"p", cfg.p}, {"m", cfg.m}, {"dim", cfg.g}, {"n_max", cfg.n_max}, {"fix", fix}}},
               {"tool_version", kToolVersion},
               {"rows", rows_json(rows)}};
      return doc.dump(1) + "\n";
    }
    case Format::csv:
      os << "# " << kHypothesisNote << "\n";
      os << "# p=" << cfg.p << " dim=" << cfg.g << " n_max=" << cfg.n_max << (fix.empty() ? "" : " fix=" + fix)
         << "\n";
      os << emit(rows, Format::csv, cfg.g);
      return os.str();
    case Format::markdown:
      os << "n < " << cfg.n_max << " where " << cfg.p << " is a common index divisor, dim " << cfg.g
         << (fix.empty() ? "" : ", " + fix) << ".\n\n";
      os << "> " << kHypothesisNote << "\n\n";
      os << emit(rows, Format::markdown, cfg.g);
      return os.str();
  }
  throw std::logic_error("unhandled format");
}

}  // namespace weilcid
