// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/analyze.hpp"

#include <json.hpp>

#include "weilcid/error.hpp"
#include "weilcid/factorize.hpp"

namespace weilcid {

Analysis analyze(std::uint64_t p, unsigned m, unsigned g, const std::vector<Integer>& free_coeffs,
                 const std::vector<Integer>& moduli) {
  Analysis a;
  a.candidate = from_free_coeffs(p, m, g, free_coeffs);
  a.is_weil = is_weil(a.candidate);
  if (!a.is_weil) {
    a.status = "not a Weil polynomial";
    return a;
  }
  const auto w = WeilPoly::from_candidate(a.candidate);
  ensure(w.has_value(), "Weil candidate rejected on construction");
  a.p_rank = p_rank(*w);
  if (m % 2 == 0) {
    a.status = "q is a perfect square; irreducibility and common index divisors are not handled";
    return a;
  }
  a.is_irreducible = is_irreducible(*w);
  if (!*a.is_irreducible) {
    a.status = "reducible over Q";
    return a;
  }
  if (g < 2) {
    a.status = "dimension 1 is not handled";
    return a;
  }
  a.order_discriminant = order_discriminant(*w);
  const IntMatrix sigma = frobenius_matrix(*w);
  for (const auto& n : moduli) {
    ModulusAnalysis ma;
    ma.n = n;
    try {
      if (n < 2) throw std::invalid_argument("modulus must be at least 2");
      for (const auto& [l, e] : factorize(n).factors)
        if (l != from_u64(p)) ma.applicability.emplace_back(to_u64(l), guaranteed_applicable(*w, to_u64(l)));
      ma.report = splitting_report(*w, sigma, n);
    } catch (const InvariantError&) {
      throw;
    } catch (const std::exception& e) {
      ma.error = e.what();
      ma.report.reset();
    }
    a.moduli.push_back(std::move(ma));
  }
  a.status = "ok";
  return a;
}

std::string to_json(const Analysis& a, int indent) {
  using nlohmann::json;
  json coeffs = json::array();
  for (const auto& c : a.candidate.free_coeffs) coeffs.push_back(c.get_str());
  json j{{"p", a.candidate.p},
         {"m", a.candidate.m},
         {"q", a.candidate.q.get_str()},
         {"dim", a.candidate.g},
         {"free_coeffs", coeffs},
         {"polynomial", a.candidate.poly.to_string('x')},
         {"is_weil", a.is_weil},
         {"status", a.status},
         {"note", kHypothesisNote}};
  if (a.is_irreducible) j["is_irreducible"] = *a.is_irreducible;
  if (a.p_rank) j["p_rank"] = *a.p_rank;
  if (a.order_discriminant) j["order_discriminant"] = a.order_discriminant->get_str();
  json mods = json::array();
  for (const auto& m : a.moduli) {
    json e{{"n", m.n.get_str()}};
    json app = json::object();
    for (const auto& [l, v] : m.applicability) app[std::to_string(l)] = to_string(v);
    e["applicability"] = app;
    if (m.report) {
      e["inertia_degree"] = m.report->inertia_degree.get_str();
      e["prime_count"] = m.report->prime_count.get_str();
      e["ramification_index"] = m.report->ramification_index;
      e["cid"] = m.report->cid;
    } else {
      e["error"] = m.error;
    }
    mods.push_back(e);
  }
  j["moduli"] = mods;
  return j.dump(indent);
}

}  // namespace weilcid
