#pragma once

// Rank-type predicates that either verify the Hilali inequality outright or
// produce a lower bound on dim H*. Each filter reads nothing but the rank
// type; the pipeline combines them by taking the best outcome per type.
//
// The bounds come from counting closed non-exact elements in low degrees of
// any minimal model realizing the type, doubled through Poincare duality and
// (for even formal dimension with p > 0) through the vanishing of the Euler
// characteristic.

#include <array>
#include <cstdlib>
#include <optional>
#include <string_view>
#include <vector>

#include "hilali/rank_type.hpp"

namespace hilali {

/// Multiplicities of the rank type in the low degrees the filters inspect.
struct LowDegreeStats {
  int fd = 0;
  int p = 0;
  int d = 0;  // smallest degree with nonzero homotopy
  int k = 0;  // dimension at d
  // d even:
  int l = 0;  // dimension at 2d-1
  int m = 0;  // dimension at 3d-2
  // d odd:
  int l_odd = 0;    // dimension at d
  int d_prime = 0;  // smallest even degree, 0 when there is none
  int s = 0;        // dimension at d_prime
  int m_odd = 0;    // dimension at 2d-1

  static LowDegreeStats of(const RankType& t) {
    LowDegreeStats st;
    st.fd = t.formal_dimension_raw();
    st.p = t.p();
    if (t.empty()) return st;  // the point; no filter consumes these stats
    st.d = t.min_degree();
    st.k = t.dim_at(st.d);
    if (st.d % 2 == 0) {
      st.l = t.dim_at(2 * st.d - 1);
      st.m = t.dim_at(3 * st.d - 2);
    } else {
      st.l_odd = st.k;
      st.d_prime = t.even_degrees.empty() ? 0 : t.even_degrees.front();
      st.s = st.d_prime == 0 ? 0 : t.dim_at(st.d_prime);
      st.m_odd = t.dim_at(2 * st.d - 1);
    }
    return st;
  }
};

enum class FilterVerdict { verified_directly, lower_bound, no_conclusion };

struct FilterOutcome {
  std::string_view filter_id;
  bool applied = false;
  FilterVerdict verdict = FilterVerdict::no_conclusion;
  std::optional<int> bound;  // claimed dim H* >= bound; >= 2 whenever present

  static FilterOutcome not_applicable(std::string_view id) {
    return {id, false, FilterVerdict::no_conclusion, std::nullopt};
  }
  static FilterOutcome verified(std::string_view id) {
    return {id, true, FilterVerdict::verified_directly, std::nullopt};
  }
  static FilterOutcome with_bound(std::string_view id, int bound,
                                  int threshold) {
    return {id, true,
            bound >= threshold ? FilterVerdict::lower_bound
                               : FilterVerdict::no_conclusion,
            bound};
  }
};

namespace detail {
inline int choose2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline int choose3(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
}  // namespace detail

/// p = 0 forces a pure minimal model, for which the inequality is known.
inline FilterOutcome filter_pure(const RankType& t) {
  constexpr std::string_view id = "pure";
  if (t.p() != 0) return FilterOutcome::not_applicable(id);
  return FilterOutcome::verified(id);
}

/// All homotopy concentrated in degrees >= ceil(fd/2): the type is a sphere
/// or one of the one-/two-generator middle-degree configurations, all of
/// which satisfy the inequality. Three or more middle generators cannot pass
/// the strong arithmetic condition.
inline FilterOutcome filter_half_dimension(const RankType& t) {
  constexpr std::string_view id = "half-dimension";
  int fd = t.formal_dimension_raw();
  if (fd < 1 || t.min_degree() < (fd + 1) / 2)
    return FilterOutcome::not_applicable(id);
  return FilterOutcome::verified(id);
}

/// Generators in the smallest degree d < fd/2 are closed and non-exact.
/// fd odd: dim H* >= 2k+2; fd even: >= 4k (d odd) or >= 4k+4 (d even).
inline FilterOutcome filter_lowest_degree(const RankType& t) {
  constexpr std::string_view id = "lowest-degree";
  auto st = LowDegreeStats::of(t);
  if (st.fd < 1 || st.p <= 0 || 2 * st.d >= st.fd)
    return FilterOutcome::not_applicable(id);
  int bound;
  if (st.fd % 2 != 0)
    bound = 2 * st.k + 2;
  else if (st.d % 2 != 0)
    bound = 4 * st.k;
  else
    bound = 4 * st.k + 4;
  return FilterOutcome::with_bound(id, bound, t.threshold());
}

/// Smallest degree d even. An odd degree e strictly inside (d, 2d-1)
/// contributes its own closed non-exact generators next to the degree-d
/// ones, needing only e < fd/2. Otherwise, with 2d-1 below fd/2 - 1, the
/// k(k+1)/2 quadratic monomials in the degree-d generators are closed and
/// at most l = dim at 2d-1 of them can be killed.
inline FilterOutcome filter_even_pair(const RankType& t) {
  constexpr std::string_view id = "even-pair";
  auto st = LowDegreeStats::of(t);
  if (st.fd < 1 || st.p <= 0 || st.d % 2 != 0)
    return FilterOutcome::not_applicable(id);
  int threshold = t.threshold();
  // odd degree strictly between d and 2d-1
  for (int deg : t.odd_degrees) {
    if (deg <= st.d) continue;
    if (deg < 2 * st.d - 1) {
      if (2 * deg >= st.fd) return FilterOutcome::not_applicable(id);
      return FilterOutcome::with_bound(
          id, 2 * (1 + st.k + t.dim_at(deg)), threshold);
    }
    break;
  }
  if (4 * st.d >= st.fd) return FilterOutcome::not_applicable(id);
  int c2 = detail::choose2(st.k + 1);
  int bound;
  if (st.fd % 2 != 0)
    bound = 2 * (1 + st.k + std::abs(st.l - c2));
  else if (c2 >= st.l)
    bound = 4 * (1 + st.k + c2 - st.l);
  else
    bound = 4 * std::max(st.l - c2, 1 + st.k);
  return FilterOutcome::with_bound(id, bound, threshold);
}

/// Smallest degree d even with 3d-1 below fd/2: products of degree-d and
/// degree-(2d-1) generators supply further classes in degree 3d-1 beyond
/// what the cubic monomials and the m generators at 3d-2 can absorb.
inline FilterOutcome filter_triple(const RankType& t) {
  constexpr std::string_view id = "triple";
  auto st = LowDegreeStats::of(t);
  if (st.fd < 1 || st.d % 2 != 0 || 6 * st.d - 2 >= st.fd)
    return FilterOutcome::not_applicable(id);
  int c2 = detail::choose2(st.k + 1);
  int slack = st.k * st.l - st.k * st.k - detail::choose3(st.k) - st.m;
  int bound =
      2 * (1 + st.k + std::abs(st.l - c2) + std::max(0, slack));
  return FilterOutcome::with_bound(id, bound, t.threshold());
}

/// Smallest degree d odd (dimension l) with the smallest even degree d'
/// below 3d-1: both spaces give closed non-exact elements, worth
/// 2(1 + l + s) once d and d' sit below fd/2. When additionally 2d < fd/2,
/// degree 2d-1 contributes |C(l,2) - m| more classes.
inline FilterOutcome filter_odd_lowest(const RankType& t) {
  constexpr std::string_view id = "odd-lowest";
  auto st = LowDegreeStats::of(t);
  if (st.fd < 1 || st.d % 2 == 0 || st.d_prime == 0 ||
      st.d_prime >= 3 * st.d - 1 || 2 * st.d >= st.fd ||
      2 * st.d_prime >= st.fd)
    return FilterOutcome::not_applicable(id);
  int bound = 2 * (1 + st.l_odd + st.s);
  if (4 * st.d < st.fd)
    bound = 2 * (1 + st.l_odd + st.s +
                 std::abs(detail::choose2(st.l_odd) - st.m_odd));
  return FilterOutcome::with_bound(id, bound, t.threshold());
}

/// Monomials in the even generators of total degree below both the lowest
/// odd degree and fd/2 are closed and non-exact; c of them (counting 1)
/// give 2c (fd odd) or 4c (fd even) classes.
inline FilterOutcome filter_low_even_monomials(const RankType& t) {
  constexpr std::string_view id = "low-even-monomials";
  int fd = t.formal_dimension_raw();
  if (fd < 1 || t.p() <= 0) return FilterOutcome::not_applicable(id);
  int lowest_odd = t.odd_degrees.front();
  // count monomials in the even generators with degree m satisfying
  // m < lowest_odd and 2m < fd
  int cap = lowest_odd - 1;
  if (2 * cap >= fd) cap = (fd - 1) / 2;
  std::vector<long long> ways(static_cast<size_t>(cap) + 1, 0);
  ways[0] = 1;
  for (int deg : t.even_degrees)
    for (int v = deg; v <= cap; ++v) ways[v] += ways[v - deg];
  long long c = 0;
  for (long long w : ways) c += w;
  int bound = static_cast<int>((fd % 2 != 0 ? 2 : 4) * c);
  return FilterOutcome::with_bound(id, bound, t.threshold());
}

/// Shape (2,a : 3,b,c) with fd >= 9, fd-2 > a >= 4, fd-2 > b >= 5 always
/// satisfies the inequality.
inline FilterOutcome filter_pattern_2a(const RankType& t) {
  constexpr std::string_view id = "pattern-2a";
  if (t.even_degrees.size() != 2 || t.odd_degrees.size() != 3)
    return FilterOutcome::not_applicable(id);
  int fd = t.formal_dimension_raw();
  int a = t.even_degrees[1];
  int b = t.odd_degrees[1];
  if (t.even_degrees[0] == 2 && t.odd_degrees[0] == 3 && fd >= 9 && a >= 4 &&
      fd - 2 > a && b >= 5 && fd - 2 > b)
    return FilterOutcome::verified(id);
  return FilterOutcome::not_applicable(id);
}

/// Shape (2,4,a : 3,3,b,c) with a >= 4, b >= 7, fd >= 13 always satisfies
/// the inequality.
inline FilterOutcome filter_pattern_24a(const RankType& t) {
  constexpr std::string_view id = "pattern-24a";
  if (t.even_degrees.size() != 3 || t.odd_degrees.size() != 4)
    return FilterOutcome::not_applicable(id);
  int fd = t.formal_dimension_raw();
  if (t.even_degrees[0] == 2 && t.even_degrees[1] == 4 &&
      t.even_degrees[2] >= 4 && t.odd_degrees[0] == 3 &&
      t.odd_degrees[1] == 3 && t.odd_degrees[2] >= 7 && fd >= 13)
    return FilterOutcome::verified(id);
  return FilterOutcome::not_applicable(id);
}

using FilterFn = FilterOutcome (*)(const RankType&);

struct FilterDef {
  std::string_view id;
  FilterFn fn;
};

inline const std::vector<FilterDef>& all_filters() {
  static const std::vector<FilterDef> filters = {
      {"pure", &filter_pure},
      {"half-dimension", &filter_half_dimension},
      {"lowest-degree", &filter_lowest_degree},
      {"even-pair", &filter_even_pair},
      {"triple", &filter_triple},
      {"odd-lowest", &filter_odd_lowest},
      {"low-even-monomials", &filter_low_even_monomials},
      {"pattern-2a", &filter_pattern_2a},
      {"pattern-24a", &filter_pattern_24a},
  };
  return filters;
}

}  // namespace hilali
