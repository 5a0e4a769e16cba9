#include <doctest.h>

#include <sstream>

#include "diffseq/formulas.hpp"
#include "diffseq/solver.hpp"
#include "diffseq/table1.hpp"

using namespace diffseq;

TEST_CASE("g, fib, scaled_value") {
  CHECK(g(2) == 3);
  CHECK(g(3) == 5);
  CHECK(g(4) == 9);
  for (int k = 2; k <= 200; ++k) CHECK(g(k + 2) == g(k) + 6);
  CHECK_THROWS_AS(g(1), std::invalid_argument);

  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(6) == 8);
  CHECK(fib(10) == 55);
  CHECK(fib(92) == 7540113804746346429LL);
  CHECK_THROWS(fib(0));
  CHECK_THROWS(fib(93));

  CHECK(scaled_value(7, 2) == 13);
  CHECK(scaled_value(3, 1) == 3);
  CHECK(scaled_value(7, 3) == 19);
}

TEST_CASE("S_m helpers") {
  for (int m = 5; m <= 9; ++m) {
    for (int k = 2; k <= 40; ++k) {
      const int a = sm_block_count(m, k);
      CHECK(a * m <= k);
      CHECK(k < (a + 1) * m);
      CHECK(sm_lower(m, k) == 2 * k + 2 * a - 1);
    }
  }
  CHECK(s6_conjecture(7) == 15);
  CHECK(s6_conjecture(6) == 13);
  CHECK(s6_conjecture(8) == 17);
  CHECK(s6_conjecture(5) == 9);
}

TEST_CASE("bound examples") {
  const auto a = bound(make_set("s_m(3)"), 5, 2);
  CHECK(a.exact);
  CHECK(a.lower == 15);
  CHECK(a.upper == 15);

  const auto b = bound(make_set("powers(2)"), 6, 2);
  CHECK_FALSE(b.exact);
  CHECK(b.lower == 25);
  CHECK(b.upper == 63);

  const auto c = bound(make_set("s_m(6)"), 7, 2);
  CHECK(c.conjecture == 15);
  CHECK_FALSE(c.exact);
  // The conjecture never feeds the proven bounds.
  CHECK(c.lower == sm_lower(6, 7));
  CHECK_FALSE(c.upper.has_value());

  const auto none = bound(make_set("explicit(1,5)"), 4, 2);
  CHECK_FALSE(none.lower);
  CHECK_FALSE(none.upper);
  CHECK(none.formula_ids.empty());
  CHECK_FALSE(proven_lower_bound(make_set("explicit(1,5)"), 4, 2));

  CHECK(bound(make_set("odds_plus_two"), 4, 3).upper == 6 * 16 - 13 * 4 + 6);
  CHECK(bound(make_set("odds_plus_two"), 5, 2).lower == g(5));
  CHECK(bound(not_div_3_or_4(), 5, 2).upper == 23);
  CHECK(bound(make_set("fibonacci"), 4, 2).upper == fib(7) - 2);
  CHECK(bound(make_set("thm23(3)"), 3, 2).upper == 25);
  // Nothing registered for four colors.
  CHECK(bound(make_set("s_m(3)"), 5, 4).formula_ids.empty());
}

TEST_CASE("a = 2 specializes to 2^k - 1") {
  for (int k = 3; k <= 20; ++k) {
    const auto b = bound(make_set("thm23(2)"), k, 2);
    CHECK(b.upper == (std::int64_t{1} << k) - 1);
    CHECK(bound(make_set("powers(2)"), k, 2).upper == (std::int64_t{1} << k) - 1);
  }
}

TEST_CASE("exact entries register as both lower and upper") {
  for (const auto& e : bound_registry()) {
    if (e.kind != BoundKind::Exact) continue;
    const char* spec = e.id == "sm3_exact"          ? "s_m(3)"
                       : e.id == "sm4_exact"        ? "s_m(4)"
                       : e.id == "sm_small_k_exact" ? "s_m(9)"
                       : e.id == "not3or4_exact"    ? "residues(12; 1,2,5,7,10,11)"
                                                    : "odds_plus_two";
    const auto b = bound(make_set(spec), 5, e.r);
    INFO(e.id);
    CHECK(b.exact);
    CHECK(b.lower == b.upper);
  }
}

TEST_CASE("reference table values sit inside the registered bounds") {
  for (const auto& cell : table1_cells()) {
    if (!cell.expected) continue;
    const auto b = bound(make_set(cell.spec), cell.k, 2);
    INFO(cell.row, " k=", cell.k);
    if (b.lower) CHECK(*b.lower <= *cell.expected);
    if (b.upper) CHECK(*cell.expected <= *b.upper);
  }
}

TEST_CASE("exact laws agree with the solver for small k") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(compute_f(make_set("s_m(3)"), k, 2, 200).value == 4 * k - 5);
    CHECK(compute_f(make_set("s_m(4)"), k, 2, 200).value == g(k));
    CHECK(compute_f(make_set("odds_plus_two"), k, 2, 200).value == g(k));
  }
  for (int k = 3; k <= 5; ++k) CHECK(compute_f(not_div_3_or_4(), k, 2, 200).value == 7 * k - 12);
  for (int k = 2; k < 7; ++k) CHECK(compute_f(make_set("s_m(7)"), k, 2, 200).value == 2 * k - 1);
}

TEST_CASE("registry csv") {
  const std::string csv = registry_csv();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,params,k-range,kind,formula,citation");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == static_cast<int>(bound_registry().size()));
  CHECK(csv.find("s_m,m=3; r=2,k>=2,exact,4k-5,") != std::string::npos);
  CHECK(csv.find(",conjecture,") != std::string::npos);
  CHECK(bound_kind_name(BoundKind::Upper) == "upper");
}

TEST_CASE("the {2} u odds law stops at k = 8") {
  const GapSet S = make_set("odds_plus_two");
  // Checked with a plain quadratic chain DP, independent of the library.
  auto longest = [&](const std::string& c) {
    std::vector<int> L(c.size(), 1);
    int best = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (c[j] == c[i] && S.contains(static_cast<std::int64_t>(i - j))) L[i] = std::max(L[i], L[j] + 1);
      best = std::max(best, L[i]);
    }
    return best;
  };
  const std::string cert = "010111010001011101000101";
  CHECK(cert.size() == 24);
  CHECK(longest(cert) == 8);
  CHECK(g(9) == 23);

  const auto res = compute_f(S, 9, 2, 100);
  CHECK(res.value == 25);
  CHECK(longest(res.certificate.to_string()) < 9);

  const auto b = bound(S, 9, 2);
  CHECK_FALSE(b.exact);
  CHECK(b.lower == g(9));
  CHECK_FALSE(b.upper.has_value());
  CHECK(bound(S, 8, 2).exact);
}
