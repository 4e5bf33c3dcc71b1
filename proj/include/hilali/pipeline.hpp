#pragma once

// The verification pipeline: enumerate all rank types up to a formal
// dimension, run every filter on every type, and record per type whether the
// Hilali inequality is settled (a direct filter fired, or some bound reached
// the threshold dim V = r + q) or the type stays residual.

#include <algorithm>
#include <map>
#include <string_view>
#include <vector>

#include "hilali/enumerate.hpp"
#include "hilali/filters.hpp"
#include "hilali/rank_type.hpp"

namespace hilali {

struct TypeOutcome {
  RankType type;
  int p = 0;
  int threshold = 0;
  std::vector<FilterOutcome> outcomes;  // one per filter, canonical order
  bool verified = false;
  bool direct = false;              // some filter verified directly
  int best_bound = 0;               // max over produced bounds, 0 if none
  std::string_view verifying_filter;  // empty while residual
};

struct FdSection {
  int fd = 0;
  std::vector<TypeOutcome> types;  // lex order on (evens, odds)

  int total() const { return static_cast<int>(types.size()); }
  int residual_count() const {
    int n = 0;
    for (const auto& t : types)
      if (!t.verified) ++n;
    return n;
  }
  int verified_count() const { return total() - residual_count(); }
};

struct PipelineReport {
  int max_fd = 0;
  std::vector<FdSection> sections;  // fd = 1..max_fd
};

inline TypeOutcome evaluate_type(const RankType& t) {
  TypeOutcome out;
  out.type = t;
  out.p = t.p();
  out.threshold = t.threshold();
  for (const auto& f : all_filters()) {
    FilterOutcome o = f.fn(t);
    if (o.applied && o.verdict == FilterVerdict::verified_directly &&
        !out.direct) {
      out.direct = true;
      out.verified = true;
      out.verifying_filter = o.filter_id;
    }
    if (o.bound && *o.bound > out.best_bound) {
      out.best_bound = *o.bound;
      if (!out.direct && *o.bound >= out.threshold) {
        out.verified = true;
        out.verifying_filter = o.filter_id;
      }
    }
    out.outcomes.push_back(std::move(o));
  }
  // keep the argmax-bound filter as the witness when no direct filter fired
  if (out.verified && !out.direct) {
    for (const auto& o : out.outcomes)
      if (o.bound && *o.bound == out.best_bound) {
        out.verifying_filter = o.filter_id;
        break;
      }
  }
  return out;
}

inline PipelineReport run_pipeline(int max_fd) {
  PipelineReport report;
  report.max_fd = max_fd;
  auto enumerated = enumerate_rank_types(max_fd);
  for (auto& [fd, types] : enumerated) {
    FdSection section;
    section.fd = fd;
    section.types.reserve(types.size());
    for (const auto& t : types) section.types.push_back(evaluate_type(t));
    report.sections.push_back(std::move(section));
  }
  return report;
}

/// Residuals grouped by p ascending; within p ordered by even count, then
/// lexicographically. This is the layout used by the text report.
inline std::map<int, std::vector<const TypeOutcome*>> residuals_by_p(
    const FdSection& section) {
  std::map<int, std::vector<const TypeOutcome*>> grouped;
  for (const auto& t : section.types)
    if (!t.verified) grouped[t.p].push_back(&t);
  for (auto& [p, list] : grouped)
    std::sort(list.begin(), list.end(),
              [](const TypeOutcome* a, const TypeOutcome* b) {
                if (a->type.even_degrees.size() != b->type.even_degrees.size())
                  return a->type.even_degrees.size() <
                         b->type.even_degrees.size();
                return a->type < b->type;
              });
  return grouped;
}

}  // namespace hilali
