#include <doctest.h>

#include <algorithm>
#include <set>

#include "diffseq/gapset.hpp"
#include "diffseq/primes.hpp"

using namespace diffseq;

namespace {

std::vector<int> upto(const GapSet& S, int D) { return S.enumerate(D); }

}  // namespace

TEST_CASE("make_set examples") {
  CHECK(upto(make_set("powers(2)"), 40) == std::vector<int>{1, 2, 4, 8, 16, 32});
  const GapSet sc = make_set("scaled(3, explicit(1,2))");
  CHECK(upto(sc, 100) == std::vector<int>{3, 6});
  CHECK(sc.spec() == "scaled(3, explicit(1,2))");
  CHECK(upto(make_set("s_m(4)"), 10) == std::vector<int>{1, 2, 3, 5, 6, 7, 9, 10});
}

TEST_CASE("enumerate examples") {
  CHECK(upto(make_set("fibonacci"), 10) == std::vector<int>{1, 2, 3, 5, 8});
  // (a-1)a^j = 3,12,48 and (a-1)^2 a^j = 9,36 for a = 4.
  CHECK(upto(make_set("thm23(4)"), 50) == std::vector<int>{3, 9, 12, 36, 48});
  CHECK(upto(make_set("diffs(1,2,4,8)"), 7) == std::vector<int>{1, 2, 3, 4, 6, 7});
}

TEST_CASE("membership examples") {
  CHECK(make_set("primes+1").contains(4));
  CHECK(make_set("primes+1").contains(3));
  CHECK_FALSE(make_set("primes+1").contains(5));
  CHECK_FALSE(make_set("s_m(3)").contains(6));
  CHECK(make_set("odds_plus_two").contains(2));
  CHECK_FALSE(make_set("odds_plus_two").contains(4));
  CHECK_FALSE(make_set("primes").contains(1));
}

TEST_CASE("canonical specs") {
  CHECK(make_set("  powers( 2 ) ").spec() == "powers(2)");
  CHECK(make_set("primes+0").spec() == "primes");
  CHECK(make_set("explicit(5,1,5,3)").spec() == "explicit(1,3,5)");
  CHECK(make_set("residues(4; 1,2,3)").spec() == "s_m(4)");
  CHECK(make_set("residues(12; 1,5,9)").spec() == "residues(4; 1)");
  CHECK(make_set("residues(12;11,10,7,5,2,1)").spec() == "residues(12; 1,2,5,7,10,11)");
  CHECK(make_set("scaled(1, fibonacci)").spec() == "fibonacci");
  CHECK(make_set("union(primes, explicit(1))") == make_set("union(explicit(1), primes)"));
  CHECK(make_set("scaled(2, union(odds_plus_two, s_m(3)))").spec() == "scaled(2, union(odds_plus_two, s_m(3)))");
  // Round trip through the canonical text.
  for (const char* spec : {"powers(3)", "thm23(5)", "fibonacci", "primes+7", "s_m(9)", "residues(12; 1,2,5,7,10,11)",
                           "diffs(1,3,7)", "scaled(2, primes)", "union(explicit(2), powers(3))", "odds_plus_two"}) {
    CHECK(make_set(make_set(spec).spec()).spec() == make_set(spec).spec());
  }
}

TEST_CASE("parse and domain errors") {
  CHECK_THROWS_AS(make_set("powers(1)"), DomainError);
  CHECK_THROWS_AS(make_set("s_m(1)"), DomainError);
  CHECK_THROWS_AS(make_set("scaled(0, primes)"), DomainError);
  CHECK_THROWS_AS(make_set("residues(4; 4)"), DomainError);
  CHECK_THROWS_AS(make_set("explicit(0)"), DomainError);
  CHECK_THROWS_AS(make_set("thm23(1)"), DomainError);

  try {
    make_set("powers(2) x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
  try {
    make_set("union(primes; fibonacci)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(make_set("squares"), ParseError);
  CHECK_THROWS_AS(make_set("powers(a)"), ParseError);
  CHECK_THROWS_AS(make_set("explicit()"), ParseError);
  CHECK_THROWS_AS(make_set(""), ParseError);
}

TEST_CASE("membership agrees with enumerate for every kind up to 10^4") {
  const int D = 10'000;
  for (const char* spec : {"powers(2)", "powers(3)", "thm23(2)", "thm23(4)", "fibonacci", "primes", "primes+3", "s_m(5)",
                           "residues(12; 1,2,5,7,10,11)", "diffs(1,2,4,8,16)", "scaled(3, s_m(3))",
                           "union(explicit(2), residues(2; 1))", "explicit(1,10,9999)", "odds_plus_two"}) {
    const GapSet S = make_set(spec);
    const auto list = S.enumerate(D);
    REQUIRE(std::is_sorted(list.begin(), list.end()));
    REQUIRE(std::adjacent_find(list.begin(), list.end()) == list.end());
    const std::set<int> members(list.begin(), list.end());
    for (int d = 1; d <= D; ++d) REQUIRE(S.contains(d) == (members.count(d) == 1));
  }
}

TEST_CASE("powers(a) lies in the class 1 mod a-1") {
  for (int a = 3; a <= 7; ++a) {
    const auto powers = make_set("powers(" + std::to_string(a) + ")").enumerate(5000);
    const GapSet cls = GapSet::residues(a - 1, {1 % (a - 1)});
    for (int d : powers) CHECK(cls.contains(d));
  }
}

TEST_CASE("scaled and union semantics") {
  const GapSet inner = make_set("odds_plus_two");
  const GapSet scaled = GapSet::scaled(3, inner);
  for (int d = 1; d <= 500; ++d) CHECK(scaled.contains(d) == (d % 3 == 0 && inner.contains(d / 3)));

  const GapSet a = make_set("explicit(2)");
  const GapSet b = make_set("residues(2; 1)");
  const GapSet u = GapSet::set_union(a, b);
  for (int d = 1; d <= 500; ++d) CHECK(u.contains(d) == (a.contains(d) || b.contains(d)));
  CHECK(u.spec() == "union(explicit(2), s_m(2))");
}

TEST_CASE("diffs of a finite set are exactly the positive pairwise differences") {
  const std::vector<std::int64_t> T{3, 4, 9, 20, 21};
  const GapSet S = GapSet::diffs(T);
  std::set<int> expected;
  for (auto s : T)
    for (auto t : T)
      if (s < t) expected.insert(static_cast<int>(t - s));
  const auto got = S.enumerate(100);
  CHECK(std::set<int>(got.begin(), got.end()) == expected);
}

TEST_CASE("sieve") {
  CHECK(sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve(2) == std::vector<std::uint64_t>{2});
  CHECK(sieve(1).empty());
  CHECK(sieve(1'000'000).size() == 78498);
  // Trial division agrees on a window.
  const auto flags = prime_flags(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) REQUIRE(flags[n] == is_prime_trial(n));
}

TEST_CASE("segmented sieve matches the serial reference") {
  const std::uint64_t limit = kSegmentThreshold + 1'234'567;
  const auto seg = sieve(limit);
  const auto ref = sieve_serial(limit);
  CHECK(seg.size() == ref.size());
  CHECK(seg == ref);
  // pi(10^7) = 664579; 10^7 + 1 = 11 * 909091.
  CHECK(sieve(kSegmentThreshold + 1).size() == 664'579);
}
