// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "weilcid/discriminant.hpp"
#include "weilcid/monogeneity.hpp"
#include "weilcid/survey.hpp"
#include "weilcid/tables.hpp"

using namespace weilcid;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      failures.push_back(os.str());
    }
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

WeilPoly weil(std::uint64_t p, unsigned g, std::initializer_list<long> free) {
  auto w = WeilPoly::from_candidate(from_free_coeffs(p, g, free));
  if (!w) throw std::runtime_error("not a Weil polynomial");
  return *w;
}

TableFixture fixture(const std::string& id) {
  return load_fixture(fs::path(WEILCID_DATA_DIR) / "tables" / (id + ".json"));
}

std::vector<SurveyRow> run(const TableFixture& t) {
  SurveyConfig cfg = t.config();
  cfg.workers = workers();
  return survey(cfg);
}

const SurveyRow* find(const std::vector<SurveyRow>& rows, std::initializer_list<long> coeffs) {
  const std::vector<Integer> key(coeffs.begin(), coeffs.end());
  for (const auto& r : rows)
    if (r.free_coeffs == key) return &r;
  return nullptr;
}

void expect_row(Check& c, const std::vector<SurveyRow>& rows, std::initializer_list<long> coeffs, unsigned p_rank,
                const std::vector<unsigned long>& n) {
  const SurveyRow want{std::vector<Integer>(coeffs.begin(), coeffs.end()), p_rank, n};
  const SurveyRow* got = find(rows, coeffs);
  if (!got)
    c.failures.push_back("row " + format_row(want) + " not produced");
  else if (!(*got == want))
    c.failures.push_back("row " + format_row(*got) + " differs from " + format_row(want));
}

// Printed rows must all be reproduced exactly. Unprinted rows fail complete
// tables unless listed in `omitted`.
void expect_table(Check& c, const std::string& id, const std::vector<SurveyRow>& produced,
                  const std::vector<std::vector<long>>& omitted = {}) {
  const auto t = fixture(id);
  const auto d = compare_table(t, produced);
  for (const auto& r : d.missing) c.failures.push_back(t.label + ": missing " + format_row(r));
  for (const auto& m : d.mismatched)
    c.failures.push_back(t.label + ": " + format_row(m.actual) + " vs printed " + format_row(m.expected));
  for (const auto& r : d.extra) {
    bool known = false;
    for (const auto& o : omitted) known = known || r.free_coeffs == std::vector<Integer>(o.begin(), o.end());
    if (!t.complete)
      continue;
    else if (known)
      c.notes.push_back(t.label + ": produced unprinted row " + format_row(r) +
                        " (valid by x -> -x symmetry with a printed row; omitted from the printed table)");
    else
      c.failures.push_back(t.label + ": unexpected row " + format_row(r));
  }
  c.notes.push_back(t.label + ": " + d.summary(t.complete));
}

int run_binary(const std::string& path) {
  const int status = std::system((path + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check criterion1() {
  Check c;
  const auto rows = run(fixture("p2-dim2"));
  c.equal(rows.size(), 19u, "row count");
  expect_row(c, rows, {-1, 0}, 1, {47});
  expect_row(c, rows, {1, 1}, 2, {3, 9});
  if (const auto* r = find(rows, {0, -2})) c.equal(r->nonmono_n.size(), 105u, "(0,-2) list length");
  expect_table(c, "p2-dim2", rows);
  return c;
}

Check criterion2() {
  Check c;
  const auto rows = run(fixture("p3-dim2"));
  c.equal(rows.size(), 34u, "row count");
  expect_row(c, rows, {-3, 5}, 2, {2, 4, 29, 488});
  expect_table(c, "p3-dim2", rows);
  return c;
}

Check criterion3() {
  Check c;
  const auto t4 = run(fixture("p2-dim3"));
  c.equal(t4.size(), 80u, "p=2 g=3 row count");
  expect_row(c, t4, {0, 1, -3}, 3, {3, 9});
  expect_table(c, "p2-dim3", t4);

  expect_table(c, "p3-dim3", run(fixture("p3-dim3")));
  expect_table(c, "p5-dim3", run(fixture("p5-dim3")));
  expect_table(c, "p5-dim2", run(fixture("p5-dim2")));

  const auto t6 = run(fixture("p2-dim4"));
  expect_row(c, t6, {0, 0, -3, 1}, 4, {3, 9, 27});
  const auto* r = find(t6, {0, 0, 0, -7});
  c.expect(r != nullptr, "p2-dim4 row (0,0,0,-7) produced");
  if (r)
    c.expect(r->nonmono_n == std::vector<unsigned long>{3,  5,  7,  9,  11, 13, 15, 17, 19, 21, 23, 25,
                                                        31, 33, 39, 47, 51, 53, 55, 57, 61, 63, 85, 93},
             "p2-dim4 row (0,0,0,-7) n-list");
  expect_table(c, "p2-dim4", t6, {{0, 0, 3, 1}});
  return c;
}

Check criterion4() {
  Check c;
  const auto w = weil(2, 3, {-2, 2, -2});
  c.equal(w.poly().to_string('x'), std::string("x^6 - 2x^5 + 2x^4 - 2x^3 + 4x^2 - 8x + 8"), "polynomial");
  c.equal(frobenius_order_mod(w, frobenius_matrix(w), 3), Integer(20), "order mod 3");
  c.equal(irred_count(20, 2), Integer(52377), "irred_count(20,2)");
  c.equal(gsp_order(3, 3), Integer("18341406720"), "gsp_order(3,3)");
  c.expect(is_common_index_divisor(w, 3), "cid at n=3");
  return c;
}

Check criterion5() {
  Check c;
  const auto w = weil(3, 2, {0, 0});
  const auto s = frobenius_matrix(w);
  for (long n : {2, 5, 10}) {
    c.equal(frobenius_order_mod(w, s, n), Integer(4), "order mod " + std::to_string(n));
    c.expect(is_common_index_divisor(w, n), "cid at n=" + std::to_string(n));
  }
  c.equal(gsp_order(2, 2) / 4, Integer(180), "gsp_order(2,2)/4");
  c.equal(gsp_order(2, 5) / 4, Integer(9360000), "gsp_order(2,5)/4");
  c.equal(gsp_order(2, 10) / 4, Integer("6739200000"), "gsp_order(2,10)/4");
  c.equal(irred_count(4, 3), Integer(18), "irred_count(4,3)");
  return c;
}

Check criterion6() {
  Check c;
  const auto w = weil(2, 4, {0, 0, 0, 0});
  c.equal(frobenius_order_mod(w, frobenius_matrix(w), 17), Integer(8), "order mod 17");
  c.equal(irred_count(8, 2), Integer(30), "irred_count(8,2)");
  const auto digits = gsp_order(4, 17).get_str().size();
  c.expect(digits == 45 || digits == 46, "gsp_order(4,17) digit count " + std::to_string(digits));
  c.expect(is_common_index_divisor(w, 17), "cid at n=17");
  c.equal(irred_count(8, 2) * 8, Integer(240), "8 * irred_count(8,2)");
  return c;
}

Check criterion7() {
  Check c;
  c.equal(enumerate_weil(2, 3).size(), 80u, "p=2");
  c.equal(enumerate_weil(3, 3).size(), 348u, "p=3");
  c.equal(enumerate_weil(5, 3).size(), 2032u, "p=5");
  return c;
}

Check criterion8() {
  Check c;
  for (const std::string name : {"test_exactalgebra", "test_weil", "test_frobenius", "test_monogeneity"}) {
    const auto path = (fs::path(WEILCID_TEST_DIR) / name).string();
    const int rc = run_binary(path);
    c.expect(rc == 0, name + " exited with " + std::to_string(rc));
  }
  return c;
}

// The Jacobian point counts and maximal-order indices behind the examples
// are not recomputed; the order discriminant stands in for the index check.
Check criterion9() {
  Check c;
  for (const auto& w : {weil(2, 3, {-2, 2, -2}), weil(3, 2, {0, 0}), weil(2, 4, {0, 0, 0, 0})}) {
    const Integer qpow = pow(w.q(), w.g() * (w.g() - 1));
    const Integer disc = discriminant(w.poly());
    c.expect(divides(qpow, disc), w.label() + ": q^{g(g-1)} divides disc(f)");
    if (divides(qpow, disc)) c.equal(order_discriminant(w), disc / qpow, w.label() + " order discriminant");
  }
  c.equal(order_discriminant(weil(3, 2, {0, 0})), Integer(20736), "x^4+9 order discriminant");
  c.notes.push_back("Jacobian point-group computations and maximal-order indices declared irreproducible");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"p2-dim2 table (n < 1000)", criterion1},
      {"p3-dim2 table (n < 500)", criterion2},
      {"p2-dim3, p3-dim3, p5-dim3, p5-dim2 and p2-dim4 tables", criterion3},
      {"Example: order 20 mod 3 in dimension 3", criterion4},
      {"Example: x^4 + 9 at n = 2, 5, 10", criterion5},
      {"Example: x^8 + 16 at n = 17", criterion6},
      {"Enumeration counts 80 / 348 / 2032", criterion7},
      {"Property suites", criterion8},
      {"Irreproducible items and discriminant cross-checks", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(1) << secs << " s)\n";
    for (const auto& f : c.failures) std::cout << "    failure: " << f << "\n";
    for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
