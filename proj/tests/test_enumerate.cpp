#include "doctest.h"

#include <set>

#include "hilali/enumerate.hpp"
#include "oracles.hpp"

using namespace hilali;

TEST_CASE("enumeration rejects out-of-range bounds") {
  CHECK_THROWS_AS(enumerate_rank_types(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_rank_types(-3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_rank_types(kMaxSupportedFd + 1),
                  std::invalid_argument);
}

TEST_CASE("small dimensions are exactly right") {
  auto buckets = enumerate_rank_types(4);
  REQUIRE(buckets.count(0) == 1);
  REQUIRE(buckets[0].size() == 1);
  CHECK(buckets[0][0].empty());  // the point

  CHECK(buckets[1].empty());

  REQUIRE(buckets[2].size() == 1);
  CHECK(buckets[2][0] == parse_rank_type("2:3"));

  REQUIRE(buckets[3].size() == 1);
  CHECK(buckets[3][0] == parse_rank_type(":3"));

  REQUIRE(buckets[4].size() == 3);
  CHECK(buckets[4][0] == parse_rank_type("2:5"));
  CHECK(buckets[4][1] == parse_rank_type("2,2:3,3"));
  CHECK(buckets[4][2] == parse_rank_type("4:7"));
}

TEST_CASE("fd 4 agrees with an independent brute force") {
  // brute force over every multiset pair with generous bounds
  std::set<std::string> expected;
  std::vector<int> evens, odds;
  auto consider = [&]() {
    if (odds.size() < evens.size() || odds.empty()) return;
    int fd = 0;
    for (int d : odds) fd += d;
    for (int d : evens) fd -= d - 1;
    if (fd != 4) return;
    RankType t{evens, odds};
    if (oracles::brute_force_sac(t)) expected.insert(t.canonical());
  };
  auto rec_odds = [&](auto&& self, int min_e, int budget) -> void {
    consider();
    for (int d = min_e; d <= budget; d += 2) {
      odds.push_back(d);
      self(self, d, budget - d);
      odds.pop_back();
    }
  };
  auto rec_evens = [&](auto&& self, int min_e, int budget) -> void {
    rec_odds(rec_odds, 3, 16);
    for (int d = min_e; d <= budget; d += 2) {
      evens.push_back(d);
      self(self, d, budget - d);
      evens.pop_back();
    }
  };
  rec_evens(rec_evens, 2, 12);

  auto buckets = enumerate_rank_types(4);
  std::set<std::string> got;
  for (const auto& t : buckets[4]) got.insert(t.canonical());
  CHECK(got == expected);
}

TEST_CASE("enumerated types satisfy the structural invariants") {
  auto buckets = enumerate_rank_types(16);
  std::set<std::string> seen;
  for (const auto& [fd, types] : buckets) {
    for (size_t i = 0; i < types.size(); ++i) {
      const RankType& t = types[i];
      CHECK(t.formal_dimension() == fd);
      CHECK(sac_holds(t));
      CHECK(t.q() >= t.r());
      CHECK(std::is_sorted(t.even_degrees.begin(), t.even_degrees.end()));
      CHECK(std::is_sorted(t.odd_degrees.begin(), t.odd_degrees.end()));
      if (!t.even_degrees.empty()) CHECK(fd >= t.even_degrees.back());
      for (int d : t.odd_degrees) CHECK(d <= 2 * fd - 1);
      if (i > 0) CHECK(types[i - 1] < t);  // strictly ascending, no dups
      CHECK(seen.insert(t.canonical() + "@" + std::to_string(fd)).second);
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_rank_types(12);
  auto b = enumerate_rank_types(12);
  REQUIRE(a.size() == b.size());
  for (const auto& [fd, types] : a) {
    REQUIRE(b.count(fd) == 1);
    CHECK(types == b[fd]);
  }
}

TEST_CASE("check_sac agrees with the brute-force oracle") {
  // all valid rank types with odd degree sum <= 15 and even degree sum <= 30
  int cases = 0, mismatches = 0;
  std::vector<std::vector<int>> odd_multisets, even_multisets;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int min_e, int budget, int step,
                 std::vector<std::vector<int>>& out) -> void {
    out.push_back(cur);
    for (int d = min_e; d <= budget; d += step) {
      cur.push_back(d);
      self(self, d, budget - d, step, out);
      cur.pop_back();
    }
  };
  gen(gen, 3, 15, 2, odd_multisets);
  gen(gen, 2, 30, 2, even_multisets);

  for (const auto& odds : odd_multisets) {
    if (odds.empty()) continue;
    for (const auto& evens : even_multisets) {
      if (evens.size() > odds.size()) continue;
      RankType t{evens, odds};
      ++cases;
      if (sac_holds(t) != oracles::brute_force_sac(t)) ++mismatches;
    }
  }
  CHECK(cases >= 2000);  // several thousand cases
  CHECK(mismatches == 0);
}
