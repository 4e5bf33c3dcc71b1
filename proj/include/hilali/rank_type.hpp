#pragma once

// Homotopy rank types: the multiset pair (even degrees : odd degrees) of a
// homogeneous basis of the rational homotopy of a simply connected elliptic
// space, together with the Friedlander-Halperin strong arithmetic condition
// that characterizes which pairs actually occur.
//
// Degrees are stored as actual degrees (2a_i and 2b_j - 1); the half-degree
// views a_i, b_j are derived.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilali {

struct RankTypeParseError : std::runtime_error {
  size_t position;
  RankTypeParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct RankType {
  std::vector<int> even_degrees;  // ascending, each even and >= 2
  std::vector<int> odd_degrees;   // ascending, each odd and >= 3

  /// Validates and sorts; throws RankTypeParseError on violated invariants.
  static RankType of(std::vector<int> evens, std::vector<int> odds) {
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
    for (int d : evens)
      if (d < 2 || d % 2 != 0)
        throw RankTypeParseError(
            "invalid even degree " + std::to_string(d), 0);
    for (int d : odds)
      if (d < 3 || d % 2 == 0)
        throw RankTypeParseError("invalid odd degree " + std::to_string(d), 0);
    if (odds.size() < evens.size())
      throw RankTypeParseError(
          "more even than odd degrees (homotopy Euler characteristic would "
          "be positive)",
          0);
    return RankType{std::move(evens), std::move(odds)};
  }

  int r() const { return static_cast<int>(even_degrees.size()); }
  int q() const { return static_cast<int>(odd_degrees.size()); }
  int p() const { return q() - r(); }
  /// dim V, the target of the Hilali inequality.
  int threshold() const { return r() + q(); }

  bool empty() const { return even_degrees.empty() && odd_degrees.empty(); }

  /// fd = sum(odd) - sum(even - 1); positive for every realizable nonempty
  /// type, 0 for the empty type (realized by the point).
  int formal_dimension() const {
    if (empty()) return 0;
    int fd = formal_dimension_raw();
    if (fd <= 0)
      throw std::domain_error("formal dimension " + std::to_string(fd) +
                              " is not positive; type is unrealizable");
    return fd;
  }

  int formal_dimension_raw() const {
    int fd = 0;
    for (int d : odd_degrees) fd += d;
    for (int d : even_degrees) fd -= d - 1;
    return fd;
  }

  std::vector<int> even_half() const {  // a_i
    std::vector<int> v;
    v.reserve(even_degrees.size());
    for (int d : even_degrees) v.push_back(d / 2);
    return v;
  }
  std::vector<int> odd_half() const {  // b_j
    std::vector<int> v;
    v.reserve(odd_degrees.size());
    for (int d : odd_degrees) v.push_back((d + 1) / 2);
    return v;
  }

  int dim_at(int degree) const {
    const auto& v = degree % 2 == 0 ? even_degrees : odd_degrees;
    return static_cast<int>(std::count(v.begin(), v.end(), degree));
  }

  int min_degree() const {
    if (even_degrees.empty() && odd_degrees.empty())
      throw std::domain_error("empty rank type");
    if (even_degrees.empty()) return odd_degrees.front();
    if (odd_degrees.empty()) return even_degrees.front();
    return std::min(even_degrees.front(), odd_degrees.front());
  }

  /// Canonical machine form, e.g. "2,4,4:3,5,7,7".
  std::string canonical() const {
    return join(even_degrees) + ":" + join(odd_degrees);
  }

  /// Human display form, e.g. "(2,4,4 : 3,5,7,7)".
  std::string display() const {
    return "(" + join(even_degrees) + " : " + join(odd_degrees) + ")";
  }

  friend bool operator==(const RankType& a, const RankType& b) {
    return a.even_degrees == b.even_degrees && a.odd_degrees == b.odd_degrees;
  }
  friend bool operator!=(const RankType& a, const RankType& b) {
    return !(a == b);
  }
  friend bool operator<(const RankType& a, const RankType& b) {
    if (a.even_degrees != b.even_degrees)
      return a.even_degrees < b.even_degrees;
    return a.odd_degrees < b.odd_degrees;
  }

 private:
  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  }
};

struct HomotopyInvariants {
  int r, q, p, threshold;
};

inline HomotopyInvariants homotopy_invariants(const RankType& t) {
  return {t.r(), t.q(), t.p(), t.threshold()};
}

/// Grammar: evens ":" odds, comma-separated decimal integers, evens possibly
/// empty, odds non-empty; whitespace is insignificant. Input order is free;
/// the result is sorted ascending.
inline RankType parse_rank_type(std::string_view text) {
  std::vector<int> evens, odds;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  bool after_colon = false;
  bool expecting_entry = false;  // after a comma
  std::vector<std::pair<int, size_t>> even_entries, odd_entries;
  skip_ws();

  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      long long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000)
          throw RankTypeParseError("degree out of range", start);
        ++i;
      }
      (after_colon ? odd_entries : even_entries)
          .push_back({static_cast<int>(v), start});
      expecting_entry = false;
    } else if (c == ',') {
      if (expecting_entry ||
          (after_colon ? odd_entries.empty() : even_entries.empty()))
        throw RankTypeParseError("expected a degree before ','", i);
      expecting_entry = true;
      ++i;
    } else if (c == ':') {
      if (after_colon) throw RankTypeParseError("unexpected second ':'", i);
      if (expecting_entry)
        throw RankTypeParseError("expected a degree before ':'", i);
      after_colon = true;
      expecting_entry = false;
      ++i;
    } else {
      throw RankTypeParseError(std::string("unexpected character '") + c + "'",
                               i);
    }
  }
  if (!after_colon)
    throw RankTypeParseError("expected ':' separating even and odd degrees",
                             text.size());
  if (odd_entries.empty() || expecting_entry)
    throw RankTypeParseError("odd degree list must be non-empty", text.size());

  for (auto [v, pos] : even_entries) {
    if (v < 2 || v % 2 != 0)
      throw RankTypeParseError(std::to_string(v) +
                                   " is not a valid even degree (even, >= 2)",
                               pos);
    evens.push_back(v);
  }
  for (auto [v, pos] : odd_entries) {
    if (v < 3 || v % 2 == 0)
      throw RankTypeParseError(std::to_string(v) +
                                   " is not a valid odd degree (odd, >= 3)",
                               pos);
    odds.push_back(v);
  }
  if (odds.size() < evens.size())
    throw RankTypeParseError("more even than odd degrees", 0);
  std::sort(evens.begin(), evens.end());
  std::sort(odds.begin(), odds.end());
  return RankType{std::move(evens), std::move(odds)};
}

/// True iff b is a non-negative integer combination of the support values
/// with coefficient sum >= 2. Bounded DP over values 0..b; per value we track
/// which coefficient-sum classes {0, 1, >=2} are reachable.
inline bool expressible(int b, const std::vector<int>& support) {
  if (support.empty())
    throw std::invalid_argument("expressible: empty support");
  for (int a : support)
    if (a < 1) throw std::invalid_argument("expressible: support entry < 1");
  if (b < 0) return false;
  std::vector<uint8_t> reach(static_cast<size_t>(b) + 1, 0);
  reach[0] = 1;  // bit k <=> coefficient-sum class k reachable (k capped at 2)
  for (int v = 1; v <= b; ++v)
    for (int a : support) {
      if (a > v) continue;
      uint8_t r = reach[v - a];
      if (r & 1) reach[v] |= 2;
      if (r & 2) reach[v] |= 4;
      if (r & 4) reach[v] |= 4;
    }
  return (reach[b] & 4) != 0;
}

/// One gamma vector witnessing expressibility, indexed like support.
inline std::optional<std::vector<int>> expressible_witness(
    int b, const std::vector<int>& support) {
  std::vector<int> gamma(support.size(), 0);
  auto dfs = [&](auto&& self, size_t i, int rem, int csum) -> bool {
    if (i == support.size()) return rem == 0 && csum >= 2;
    for (int g = rem / support[i]; g >= 0; --g) {
      gamma[i] = g;
      if (self(self, i + 1, rem - g * support[i], csum + g)) return true;
    }
    gamma[i] = 0;
    return false;
  };
  if (b < 0 || !dfs(dfs, 0, b, 0)) return std::nullopt;
  return gamma;
}

struct SacWitness {
  struct Entry {
    std::vector<int> support;  // distinct even half-degrees, ascending
    size_t odd_index;          // index into odd_half()
    int b;                     // the half-degree being expressed
    std::vector<int> gamma;    // b = sum gamma[i]*support[i], sum gamma >= 2
  };
  std::vector<Entry> entries;
};

namespace detail {

struct DistinctSupport {
  std::vector<int> values;  // distinct even half-degrees, ascending
  std::vector<int> mults;   // multiplicities
};

inline DistinctSupport distinct_even_half(const RankType& t) {
  DistinctSupport d;
  for (int a : t.even_half()) {
    if (!d.values.empty() && d.values.back() == a)
      ++d.mults.back();
    else {
      d.values.push_back(a);
      d.mults.push_back(1);
    }
  }
  return d;
}

}  // namespace detail

/// Strong arithmetic condition, verdict only. For every sub-multiset A* of
/// the even half-degrees of size s, at least s odd half-degrees (with
/// multiplicity) must be expressible over A*. Expressibility depends only on
/// the support, so it suffices to check each distinct-value subset S against
/// the total multiplicity of S.
inline bool sac_holds(const RankType& t) {
  auto d = detail::distinct_even_half(t);
  size_t n = d.values.size();
  if (n == 0) return true;  // vacuous
  if (n > 20)
    throw std::invalid_argument("check_sac: too many distinct even degrees");
  auto bs = t.odd_half();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    int need = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        support.push_back(d.values[i]);
        need += d.mults[i];
      }
    int count = 0;
    for (int b : bs)
      if (expressible(b, support)) ++count;
    if (count < need) return false;
  }
  return true;
}

/// Strong arithmetic condition with a recorded witness: one gamma vector per
/// (support subset, expressible odd half-degree).
inline std::pair<bool, SacWitness> check_sac(const RankType& t) {
  SacWitness w;
  auto d = detail::distinct_even_half(t);
  size_t n = d.values.size();
  if (n == 0) return {true, w};
  if (n > 20)
    throw std::invalid_argument("check_sac: too many distinct even degrees");
  auto bs = t.odd_half();
  bool ok = true;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    int need = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        support.push_back(d.values[i]);
        need += d.mults[i];
      }
    int count = 0;
    for (size_t j = 0; j < bs.size(); ++j) {
      if (!expressible(bs[j], support)) continue;
      ++count;
      auto gamma = expressible_witness(bs[j], support);
      if (gamma) w.entries.push_back({support, j, bs[j], std::move(*gamma)});
    }
    if (count < need) ok = false;
  }
  return {ok, w};
}

}  // namespace hilali
