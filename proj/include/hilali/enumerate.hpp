#pragma once

// Enumeration of all homotopy rank types up to a formal dimension bound.
//
// The search is bounded by two classical necessary conditions for a type of
// formal dimension n: sum of even degrees <= n, and every odd degree
// <= 2n - 1. Candidates inside those bounds are validated by the formal
// dimension formula and the strong arithmetic condition, so the bounds only
// shape the search space.

#include <map>
#include <stdexcept>
#include <vector>

#include "hilali/rank_type.hpp"

namespace hilali {

inline constexpr int kMaxSupportedFd = 30;

/// fd -> ascending (lex on (evens, odds)) list of all SAC-valid rank types
/// of that formal dimension. Every fd in 0..max_fd is present as a key;
/// dimension 0 holds exactly the empty rank type of the point.
inline std::map<int, std::vector<RankType>> enumerate_rank_types(int max_fd) {
  if (max_fd < 1 || max_fd > kMaxSupportedFd)
    throw std::invalid_argument("enumerate_rank_types: max_fd must be in 1.." +
                                std::to_string(kMaxSupportedFd));

  std::map<int, std::vector<RankType>> out;
  for (int n = 0; n <= max_fd; ++n) out[n];
  // the contractible space contributes the empty rank type in dimension 0
  out[0].push_back(RankType{{}, {}});

  const int max_odd_entry = 2 * max_fd - 1;
  std::vector<int> evens, odds;

  auto consider = [&](int even_sum, int deficit) {
    if (odds.size() < evens.size()) return;
    int odd_sum = 0;
    for (int d : odds) odd_sum += d;
    int fd = odd_sum - deficit;
    if (fd < 1 || fd > max_fd) return;
    if (even_sum > fd) return;
    if (!odds.empty() && odds.back() > 2 * fd - 1) return;
    RankType t{evens, odds};
    if (!sac_holds(t)) return;
    out[fd].push_back(std::move(t));
  };

  auto rec_odds = [&](auto&& self, int min_entry, int budget, int even_sum,
                      int deficit) -> void {
    consider(even_sum, deficit);
    for (int d = min_entry; d <= budget && d <= max_odd_entry; d += 2) {
      odds.push_back(d);
      self(self, d, budget - d, even_sum, deficit);
      odds.pop_back();
    }
  };

  auto rec_evens = [&](auto&& self, int min_entry, int budget) -> void {
    int even_sum = 0;
    for (int d : evens) even_sum += d;
    int deficit = even_sum - static_cast<int>(evens.size());
    // odd degrees total at most max_fd + deficit for fd <= max_fd
    rec_odds(rec_odds, 3, max_fd + deficit, even_sum, deficit);
    for (int d = min_entry; d <= budget; d += 2) {
      evens.push_back(d);
      self(self, d, budget - d);
      evens.pop_back();
    }
  };

  rec_evens(rec_evens, 2, max_fd);

  for (auto& [fd, list] : out) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace hilali
