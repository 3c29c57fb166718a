// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <set>

#include "support/oracles.hpp"
#include "weilcid/fp_poly.hpp"
#include "weilcid/weil.hpp"

using namespace weilcid;

#ifndef WEILCID_DATA_DIR
#error "WEILCID_DATA_DIR must be defined"
#endif

namespace {

using Coeffs = std::vector<Integer>;

Coeffs coeffs(std::initializer_list<long> xs) {
  Coeffs v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

WeilPoly weil(std::uint64_t p, unsigned g, std::initializer_list<long> free) {
  auto w = WeilPoly::from_candidate(from_free_coeffs(p, g, free));
  REQUIRE(w.has_value());
  return *w;
}

std::vector<Coeffs> free_rows(const std::vector<WeilPoly>& ws) {
  std::vector<Coeffs> out;
  for (const auto& w : ws) out.push_back(w.free_coeffs());
  return out;
}

struct TableRow {
  Coeffs free;
  unsigned p_rank;
};

struct Table {
  std::string id;
  std::uint64_t p;
  unsigned g;
  CoeffFilter fix;
  bool complete;
  std::vector<TableRow> rows;
};

Table load_table(const std::string& id) {
  std::ifstream in(std::string(WEILCID_DATA_DIR) + "/tables/" + id + ".json");
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  Table t{id, j.at("p").get<std::uint64_t>(), j.at("dim").get<unsigned>(), {}, j.at("complete").get<bool>(), {}};
  for (const auto& [k, v] : j.at("fix").items()) t.fix.fixed[std::stoul(k.substr(1))] = v.get<long>();
  for (const auto& r : j.at("rows")) {
    TableRow row;
    for (const auto& c : r.at("coeffs")) row.free.emplace_back(c.get<long>());
    row.p_rank = r.at("p_rank").get<unsigned>();
    t.rows.push_back(std::move(row));
  }
  return t;
}

const std::vector<std::string> kTables{"p2-dim2", "p3-dim2", "p5-dim2", "p2-dim3", "p3-dim3", "p5-dim3", "p2-dim4"};

// x^{2g} f(q/x) expanded as a polynomial, for comparison with q^g f(x).
IntPoly reversed_scaled(const IntPoly& f, const Integer& q) {
  const int n = f.degree();
  std::vector<Integer> c(n + 1);
  for (int i = 0; i <= n; ++i) c[n - i] = f[i] * pow(q, static_cast<unsigned long>(i));
  return IntPoly(c);
}

}  // namespace

TEST_CASE("from_free_coeffs fills the lower half by q-symmetry") {
  CHECK(from_free_coeffs(3, 2, {0, 0}).poly == IntPoly({9, 0, 0, 0, 1}));
  CHECK(from_free_coeffs(2, 2, {-1, 0}).poly == IntPoly({4, -2, 0, -1, 1}));
  CHECK(from_free_coeffs(2, 4, {0, 0, 0, 0}).poly == IntPoly({16, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(from_free_coeffs(2, 3, {-2, 2, -2}).poly == IntPoly({8, -8, 4, -2, 2, -2, 1}));
  const auto c = from_free_coeffs(5, 3, 3, coeffs({1, 7, -4}));
  CHECK(c.q == 125);
  CHECK(c.coeff(0) == pow(Integer(125), 3));
  CHECK(c.coeff(1) == 125 * 125 * 1);
  CHECK(c.coeff(2) == 125 * 7);
  CHECK(c.coeff(3) == -4);
  CHECK_THROWS_AS(from_free_coeffs(2, 2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(from_free_coeffs(2, 2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(from_free_coeffs(4, 2, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(from_free_coeffs(2, 0, 2, coeffs({0, 0})), std::invalid_argument);
}

TEST_CASE("real_companion examples and expansion oracle") {
  CHECK(real_companion(from_free_coeffs(3, 2, {0, 0})) == IntPoly({-6, 0, 1}));
  CHECK(real_companion(from_free_coeffs(3, 1, {0})) == IntPoly({0, 1}));
  CHECK(real_companion(from_free_coeffs(2, 2, {-1, 0})) == IntPoly({-4, -1, 1}));
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned g = 1; g <= 4; ++g)
      for (long s = -3; s <= 3; ++s) {
        Coeffs free;
        for (unsigned j = 0; j < g; ++j) free.emplace_back((s * static_cast<long>(j + 2)) % 7 - 2);
        const auto c = from_free_coeffs(p, 1, g, free);
        CHECK(oracle::expand_real_companion(real_companion(c), c.q) == c.poly);
      }
}

TEST_CASE("is_weil examples") {
  CHECK(is_weil(from_free_coeffs(3, 2, {0, 0})));
  CHECK_FALSE(is_weil(from_free_coeffs(2, 2, {0, 5})));
  CHECK(is_weil(from_free_coeffs(2, 2, {-3, 5})));
  CHECK(is_weil(from_free_coeffs(2, 3, {-2, 2, -2})));
  CHECK(is_weil(from_free_coeffs(2, 4, {0, 0, 0, 0})));
  // (x^2 - 2)^2 has roots of modulus sqrt 2.
  CHECK(is_weil(from_free_coeffs(2, 2, {0, -4})));
  // x^2 + 3x + 2 = (x+1)(x+2).
  CHECK_FALSE(is_weil(from_free_coeffs(2, 1, {3})));
  CHECK(is_weil(from_free_coeffs(2, 1, {2})));
}

TEST_CASE("is_weil_dim2 examples") {
  CHECK(is_weil_dim2(-2, 2, 2));
  CHECK_FALSE(is_weil_dim2(0, 5, 2));
  CHECK(is_weil_dim2(0, 0, 3));
}

TEST_CASE("is_weil_dim3 examples") {
  CHECK(is_weil_dim3(0, 0, -7, 3));
  CHECK(is_weil_dim3(-2, 2, -2, 2));
  CHECK_FALSE(is_weil_dim3(20, 0, 0, 2));
}

TEST_CASE("dimension-2 closed form agrees with is_weil over the full box") {
  for (long q : {2, 3, 5}) {
    const Integer Q = q;
    unsigned accepted = 0;
    for (long a3 = -4 * q; a3 <= 4 * q; ++a3)
      for (long a2 = -6 * q; a2 <= 6 * q + a3 * a3; ++a2) {
        const auto c = from_free_coeffs(static_cast<std::uint64_t>(q), 2, {a3, a2});
        const bool fast = is_weil_dim2(a3, a2, Q);
        INFO("q=", q, " a3=", a3, " a2=", a2);
        CHECK(fast == is_weil(c));
        accepted += fast;
      }
    CHECK(accepted > 0);
  }
}

TEST_CASE("dimension-3 closed form agrees with is_weil off the reducible boundary family") {
  for (long q : {2, 3, 5}) {
    const Integer Q = q;
    const long a5_max = static_cast<long>(isqrt(Integer(36 * q)).get_si());
    const long a3_rad = static_cast<long>(isqrt(Integer(64 * q * q * q)).get_si());
    unsigned mismatches = 0;
    for (long a5 = -a5_max; a5 <= a5_max; ++a5)
      for (long a4 = -3 * q; a4 <= 15 * q; ++a4)
        for (long a3 = 2 * q * a5 - a3_rad; a3 <= 2 * q * a5 + a3_rad; ++a3) {
          const auto c = from_free_coeffs(static_cast<std::uint64_t>(q), 3, {a5, a4, a3});
          const bool fast = is_weil_dim3(a5, a4, a3, Q);
          const bool exact = is_weil(c);
          if (fast == exact) continue;
          // Only (x^2 - q)^2 (x^2 + b x + q) may be accepted by is_weil and
          // rejected by the strict inequalities.
          INFO("q=", q, " a5=", a5, " a4=", a4, " a3=", a3);
          CHECK(exact);
          const IntPoly sq = IntPoly({-q, 0, 1}) * IntPoly({-q, 0, 1});
          CHECK(divide_exact(c.poly, sq).has_value());
          ++mismatches;
        }
    MESSAGE("q=", q, ": ", mismatches, " boundary candidates accepted only by is_weil");
  }
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(weil(3, 2, {0, 0})));
  CHECK_FALSE(is_irreducible(weil(2, 2, {-4, 8})));
  CHECK(is_irreducible(weil(2, 4, {0, 0, 0, 0})));
  CHECK_FALSE(is_irreducible(weil(2, 2, {0, -4})));
  const auto square_q = WeilPoly::from_candidate(from_free_coeffs(2, 2, 2, coeffs({0, 0})));
  REQUIRE(square_q.has_value());
  CHECK_THROWS_AS(is_irreducible(*square_q), std::invalid_argument);
}

TEST_CASE("is_irreducible matches the exhaustive factor search on small Weil polynomials") {
  for (std::uint64_t p : {2, 3}) {
    for (unsigned g = 1; g <= 3; ++g) {
      for_each_weil_free_coeffs(Integer(p), g, {}, [&](const Coeffs& free) {
        const auto w = WeilPoly::from_candidate(from_free_coeffs(p, 1, g, free));
        REQUIRE(w.has_value());
        INFO(w->label());
        CHECK(is_irreducible(*w) == !oracle::has_integer_factor(w->poly(), Integer(p)));
      });
    }
  }
}

TEST_CASE("is_irreducible agrees with mod-l certificates") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& w : enumerate_weil(p, 2)) {
      for (unsigned long l : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul})
        if (irreducible_mod(w.poly(), l)) CHECK(is_irreducible(w));
    }
  }
  // A reducible polynomial is never irreducible modulo any prime.
  const auto red = weil(3, 2, {0, -6});  // (x^2 - 3)^2
  for (unsigned long l : {2ul, 5ul, 7ul, 11ul, 13ul, 101ul}) CHECK_FALSE(irreducible_mod(red.poly(), l));
}

TEST_CASE("p_rank examples") {
  CHECK(p_rank(weil(2, 2, {-1, 0})) == 1);
  CHECK(p_rank(weil(2, 2, {0, -2})) == 0);
  CHECK(p_rank(weil(3, 3, {0, 0, -7})) == 3);
  CHECK(p_rank(weil(3, 2, {0, 0})) == 0);
}

TEST_CASE("p_rank is in [0,g] and equals g exactly in the ordinary case") {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned g : {2u, 3u})
      for (const auto& w : enumerate_weil(p, g)) {
        const unsigned r = p_rank(w);
        CHECK(r <= g);
        CHECK((r == g) == (gcd(w.coeff(g), Integer(p)) == 1));
      }
}

TEST_CASE("enumerated polynomials satisfy the symmetry identity and are ordered") {
  for (std::uint64_t p : {2, 3})
    for (unsigned g : {1u, 2u, 3u}) {
      const auto ws = enumerate_weil(p, g);
      const auto rows = free_rows(ws);
      CHECK(std::is_sorted(rows.begin(), rows.end()));
      CHECK(std::set<Coeffs>(rows.begin(), rows.end()).size() == rows.size());
      for (const auto& w : ws) {
        CHECK(reversed_scaled(w.poly(), w.q()) == w.poly() * pow(w.q(), g));
        CHECK(w.poly().is_monic());
        CHECK(w.poly().degree() == static_cast<int>(2 * g));
        CHECK(is_weil(w.candidate()));
      }
    }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_weil(2, 2).size() == 19);
  CHECK(enumerate_weil(2, 3).size() == 80);
  CHECK(enumerate_weil(3, 3).size() == 348);
  CHECK(enumerate_weil(5, 3).size() == 2032);
}

TEST_CASE("closed-form fast paths agree with the derivative-pruned search") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned g : {2u, 3u}) {
      std::vector<Coeffs> generic;
      for_each_weil_free_coeffs(Integer(p), g, {}, [&](const Coeffs& free) {
        auto w = WeilPoly::from_candidate(from_free_coeffs(p, 1, g, free));
        REQUIRE(w.has_value());
        if (is_irreducible(*w)) generic.push_back(free);
      });
      INFO("p=", p, " g=", g);
      CHECK(free_rows(enumerate_weil(p, g)) == generic);
    }
}

TEST_CASE("derivative-pruned search matches a brute-force box scan") {
  // Box from |a_{2g-k}| <= C(2g,k) q^{k/2}.
  for (long q : {2, 3}) {
    for (unsigned g : {1u, 2u, 3u}) {
      std::vector<long> bound(g);
      for (unsigned k = 1; k <= g; ++k) {
        Integer binom = 1;
        for (unsigned i = 1; i <= k; ++i) binom = binom * (2 * g - i + 1) / i;
        bound[k - 1] = isqrt_ceil(binom * binom * pow(Integer(q), k)).get_si();
      }
      std::vector<Coeffs> brute;
      Coeffs free(g);
      std::function<void(unsigned)> rec = [&](unsigned k) {
        if (k == g) {
          if (is_weil(from_free_coeffs(static_cast<std::uint64_t>(q), 1, g, free))) brute.push_back(free);
          return;
        }
        for (long a = -bound[k]; a <= bound[k]; ++a) {
          free[k] = a;
          rec(k + 1);
        }
      };
      rec(0);
      std::vector<Coeffs> pruned;
      for_each_weil_free_coeffs(Integer(q), g, {}, [&](const Coeffs& f) { pruned.push_back(f); });
      INFO("q=", q, " g=", g);
      CHECK(pruned == brute);
    }
  }
}

TEST_CASE("coefficient filters") {
  const auto f = CoeffFilter::parse(" a5=0, a4 = -1 ");
  CHECK(f.fixed.size() == 2);
  CHECK(f.fixed.at(5) == 0);
  CHECK(f.fixed.at(4) == -1);
  CHECK(f.to_string() == "a5=0,a4=-1");
  CHECK(CoeffFilter::parse("").empty());
  CHECK_THROWS_AS(CoeffFilter::parse("b5=0"), std::invalid_argument);
  CHECK_THROWS_AS(CoeffFilter::parse("a5"), std::invalid_argument);
  CHECK_THROWS_AS(CoeffFilter::parse("a5=x"), std::invalid_argument);
  CHECK_NOTHROW(f.validate(3));
  CHECK_THROWS_AS(f.validate(2), std::invalid_argument);
  CHECK_THROWS_AS(CoeffFilter::parse("a2=0").validate(3), std::invalid_argument);

  for (std::uint64_t p : {2, 3}) {
    const auto pinned = CoeffFilter::parse("a5=0,a4=0");
    std::vector<Coeffs> expected;
    for (const auto& w : enumerate_weil(p, 3))
      if (pinned.admits(w.candidate())) expected.push_back(w.free_coeffs());
    CHECK(free_rows(enumerate_weil(p, 3, 1, pinned)) == expected);
  }
  CHECK(enumerate_weil(2, 2, 1, CoeffFilter::parse("a3=100")).empty());
}

TEST_CASE("table polynomials: Weil, irreducible, p-rank and row set") {
  for (const auto& id : kTables) {
    const Table t = load_table(id);
    INFO(id);
    for (const auto& row : t.rows) {
      const auto w = WeilPoly::from_candidate(from_free_coeffs(t.p, 1, t.g, row.free));
      REQUIRE(w.has_value());
      INFO(w->label());
      CHECK(is_irreducible(*w));
      CHECK_FALSE(oracle::has_integer_factor(w->poly(), Integer(t.p)));
      CHECK(p_rank(*w) == row.p_rank);
    }
  }
}
