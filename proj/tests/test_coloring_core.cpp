#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "diffseq/core.hpp"

using namespace diffseq;

namespace {

Coloring random_coloring(std::mt19937& rng, int n, int r) {
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = static_cast<Color>(pick(rng));
  return Coloring(std::move(colors), r);
}

Coloring from_mask(std::uint32_t mask, int n) {
  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return Coloring(std::move(colors), 2);
}

std::vector<GapSet> oracle_sets() {
  return {make_set("powers(2)"), make_set("fibonacci"), make_set("primes"), make_set("s_m(3)"),
          make_set("odds_plus_two")};
}

}  // namespace

TEST_CASE("coloring text format") {
  const Coloring c = Coloring::parse("0120", 3);
  CHECK(c.size() == 4);
  CHECK(c.at(3) == 2);
  CHECK(c.to_string() == "0120");
  CHECK_THROWS_AS(Coloring::parse("012", 2), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("01!", 36), std::invalid_argument);

  const Coloring wide = Coloring::parse("9az", 36);
  CHECK(wide.at(2) == 10);
  CHECK(wide.at(3) == 35);
  CHECK(wide.to_string() == "9az");
  CHECK(Coloring::parse("", 2).empty());
}

TEST_CASE("longest_mono_diffseq examples") {
  SUBCASE("single color, unit gaps") {
    const auto res = longest_mono_diffseq(Coloring::parse("00000", 2), make_set("explicit(1)"));
    CHECK(res.length == 5);
    CHECK(res.witness.positions == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(res.witness.color == 0);
  }
  SUBCASE("alternating coloring blocks odd gaps") {
    std::string text;
    for (int i = 0; i < 10; ++i) text += "01";
    CHECK(longest_mono_diffseq(Coloring::parse(text, 2), make_set("residues(2; 1)")).length == 1);
  }
  SUBCASE("0011 blocks the gap 2") {
    CHECK(longest_mono_diffseq(Coloring::parse("001100110011", 2), make_set("explicit(2)")).length == 1);
  }
  SUBCASE("(10010110)^2 with powers of two") {
    const Coloring c = Coloring::parse("1001011010010110", 2);
    const GapSet T = make_set("powers(2)");
    const auto res = longest_mono_diffseq(c, T);
    CHECK(res.length == 4);
    CHECK(brute_force_longest(c, T) == 4);
    CHECK(is_valid_witness(c, T, res.witness));
  }
}

TEST_CASE("witness tie-breaking is deterministic") {
  // Both 1 and 2 precede 3 with gaps in {1,2}; chains 1-2-3 and 1-3. The
  // longest ends at 3 through 2, then 1.
  const auto res = longest_mono_diffseq(Coloring::parse("000", 2), make_set("explicit(1,2)"));
  CHECK(res.witness.positions == std::vector<int>{1, 2, 3});
  // All singletons: the witness is position 1.
  const auto single = longest_mono_diffseq(Coloring::parse("0101", 2), make_set("explicit(1)"));
  CHECK(single.length == 1);
  CHECK(single.witness.positions == std::vector<int>{1});
}

TEST_CASE("has_k_term examples") {
  CHECK(has_k_term(Coloring::parse("00000", 2), make_set("explicit(1)"), 5));
  std::string alt;
  for (int i = 0; i < 10; ++i) alt += "01";
  CHECK_FALSE(has_k_term(Coloring::parse(alt, 2), make_set("residues(2; 1)"), 2));
  CHECK_FALSE(has_k_term(Coloring::parse("1001011010010110", 2), make_set("powers(2)"), 5));
  CHECK(has_k_term(Coloring::parse("1001011010010110", 2), make_set("powers(2)"), 4));
}

TEST_CASE("extend examples") {
  const std::vector<int> gaps12{1, 2};
  SUBCASE("empty prefix") {
    ChainState s1(3, 2, 1, gaps12);
    auto e = s1.extend(0);
    CHECK(e.chain == 1);
    CHECK(e.prune);
    ChainState s3(3, 2, 3, gaps12);
    e = s3.extend(1);
    CHECK(e.chain == 1);
    CHECK_FALSE(e.prune);
  }
  SUBCASE("0 0 then 0 with S={1,2}, k=3") {
    ChainState s(3, 2, 3, gaps12);
    s.extend(0);
    s.extend(0);
    const auto e = s.extend(0);
    CHECK(e.chain == 3);
    CHECK(e.prune);
  }
  SUBCASE("0 1 then 0 with S={1}, k=2") {
    const std::vector<int> gaps1{1};
    ChainState s(3, 2, 2, gaps1);
    s.extend(0);
    s.extend(1);
    const auto e = s.extend(0);
    CHECK(e.chain == 1);
    CHECK_FALSE(e.prune);
    CHECK(longest_mono_diffseq(Coloring::parse("010", 2), make_set("explicit(1)")).length == 1);
  }
  SUBCASE("retract restores state") {
    ChainState s(4, 2, 4, gaps12);
    s.extend(0);
    s.extend(0);
    CHECK(s.would_be(3, 0) == 3);
    s.retract();
    CHECK(s.assigned() == 1);
    CHECK(s.would_be(3, 0) == 2);
    CHECK(s.would_be(2, 0) == 2);
    s.retract();
    CHECK(s.would_be(2, 0) == 1);
    CHECK_THROWS_AS(s.retract(), std::logic_error);
  }
  SUBCASE("doomed when every color of a later position is blocked") {
    // S={1,2}, k=2: after "01", position 3 sees 0 at distance 2 and 1 at
    // distance 1.
    ChainState s(3, 2, 2, gaps12);
    CHECK_FALSE(s.extend(0).doomed);
    CHECK(s.extend(1).doomed);
  }
}

TEST_CASE("brute force guard") {
  CHECK_THROWS_AS(brute_force_longest(Coloring(std::vector<Color>(21, 0), 2), make_set("explicit(1)")),
                  std::invalid_argument);
  CHECK(brute_force_longest(Coloring(std::vector<Color>(20, 0), 2), make_set("explicit(1)")) == 20);
}

TEST_CASE("oracle equivalence, exhaustive n <= 10") {
  for (const auto& S : oracle_sets()) {
    for (int n = 1; n <= 10; ++n) {
      const auto gaps = materialize(S, n);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const Coloring c = from_mask(mask, n);
        const auto fast = longest_mono_diffseq(c, gaps);
        REQUIRE(fast.length == brute_force_longest(c, S));
        REQUIRE(is_valid_witness(c, S, fast.witness));
        REQUIRE(static_cast<int>(fast.witness.positions.size()) == fast.length);
      }
    }
  }
}

TEST_CASE("oracle equivalence, random n <= 14 and r = 3") {
  std::mt19937 rng(12345);
  for (const auto& S : oracle_sets()) {
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 14);
      const int r = trial % 2 == 0 ? 2 : 3;
      const Coloring c = random_coloring(rng, n, r);
      REQUIRE(longest_mono_diffseq(c, S).length == brute_force_longest(c, S));
    }
  }
}

TEST_CASE("monotone in S") {
  std::mt19937 rng(7);
  const std::vector<std::pair<GapSet, GapSet>> pairs{
      {make_set("explicit(2)"), make_set("odds_plus_two")},
      {make_set("odds_plus_two"), make_set("s_m(4)")},
      {make_set("powers(2)"), make_set("union(powers(2), primes)")},
      {make_set("s_m(3)"), make_set("s_m(6)")},
  };
  for (const auto& [small, big] : pairs) {
    for (int trial = 0; trial < 200; ++trial) {
      const Coloring c = random_coloring(rng, 1 + static_cast<int>(rng() % 60), 2);
      REQUIRE(longest_mono_diffseq(c, small).length <= longest_mono_diffseq(c, big).length);
    }
  }
}

TEST_CASE("color permutation invariance and restriction monotonicity") {
  std::mt19937 rng(99);
  const GapSet S = make_set("primes");
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 80);
    const Coloring c = random_coloring(rng, n, 3);
    const int base = longest_mono_diffseq(c, S).length;

    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Color> relabeled;
    for (Color x : c.colors()) relabeled.push_back(static_cast<Color>(perm[x]));
    REQUIRE(longest_mono_diffseq(Coloring(relabeled, 3), S).length == base);

    const int m = 1 + static_cast<int>(rng() % n);
    REQUIRE(longest_mono_diffseq(c.prefix(m), S).length <= base);
  }
}

TEST_CASE("incremental consistency under extend/retract") {
  std::mt19937 rng(2024);
  for (const auto& S : oracle_sets()) {
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 40);
      const int r = 2 + static_cast<int>(rng() % 2);
      const auto gaps = materialize(S, n);
      ChainState state(n, r, n + 1, gaps);
      // Random walk: mostly extend, sometimes retract, until full.
      while (state.assigned() < n) {
        if (state.assigned() > 0 && rng() % 4 == 0) {
          state.retract();
        } else {
          state.extend(static_cast<Color>(rng() % static_cast<unsigned>(r)));
        }
      }
      const Coloring c = state.coloring();
      // L[i] must match a fresh DP on every prefix ending at i.
      for (int i = 1; i <= n; ++i) {
        int best = 0;
        for (int s : gaps) {
          if (s >= i) break;
          if (c.at(i - s) == c.at(i)) best = std::max(best, state.chain_at(i - s));
        }
        REQUIRE(state.chain_at(i) == best + 1);
      }
      int max_chain = 0;
      for (int i = 1; i <= n; ++i) max_chain = std::max(max_chain, state.chain_at(i));
      REQUIRE(max_chain == longest_mono_diffseq(c, S).length);
    }
  }
}
