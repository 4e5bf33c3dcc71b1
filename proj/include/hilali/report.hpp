#pragma once

// Deterministic renderings of enumeration listings and pipeline reports:
// text (residuals grouped by fd then p), JSON (stable key order) and CSV.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hilali/pipeline.hpp"

namespace hilali {

enum class ReportFormat { text, json, csv };

inline ReportFormat parse_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(s) +
                              "' (expected text, json or csv)");
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------- enumerate

inline std::string render_enumeration(
    const std::map<int, std::vector<RankType>>& buckets, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      std::string out;
      for (const auto& [fd, types] : buckets)
        for (const auto& t : types)
          out += std::to_string(fd) + "  " + t.display() + "\n";
      return out;
    }
    case ReportFormat::csv: {
      std::string out = "fd,count,rank_type\n";
      for (const auto& [fd, types] : buckets)
        for (const auto& t : types)
          out += std::to_string(fd) + "," + std::to_string(types.size()) +
                 "," + csv_quote(t.canonical()) + "\n";
      return out;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json root;
      root["dimensions"] = nlohmann::ordered_json::array();
      for (const auto& [fd, types] : buckets) {
        nlohmann::ordered_json section;
        section["fd"] = fd;
        section["count"] = types.size();
        auto list = nlohmann::ordered_json::array();
        for (const auto& t : types) list.push_back(t.canonical());
        section["types"] = std::move(list);
        root["dimensions"].push_back(std::move(section));
      }
      return root.dump(2) + "\n";
    }
  }
  return {};
}

// ----------------------------------------------------------------- pipeline

inline std::string render_report(const PipelineReport& report,
                                 ReportFormat format) {
  switch (format) {
    case ReportFormat::text: {
      std::string out;
      for (const auto& section : report.sections) {
        out += "fd=" + std::to_string(section.fd) +
               "  total=" + std::to_string(section.total());
        auto grouped = residuals_by_p(section);
        if (grouped.empty()) {
          if (section.total() > 0) out += "  all ruled out";
          out += "\n";
          continue;
        }
        out += "\n";
        for (const auto& [p, list] : grouped) {
          out += "  p=" + std::to_string(p) + " : ";
          for (size_t i = 0; i < list.size(); ++i) {
            if (i) out += ", ";
            out += list[i]->type.display();
          }
          out += "\n";
        }
      }
      return out;
    }
    case ReportFormat::csv: {
      std::string out =
          "fd,rank_type,p,threshold,best_bound,verdict,verifying_filter\n";
      for (const auto& section : report.sections)
        for (const auto& t : section.types) {
          out += std::to_string(section.fd) + "," +
                 csv_quote(t.type.canonical()) + "," + std::to_string(t.p) +
                 "," + std::to_string(t.threshold) + ",";
          if (t.best_bound > 0) out += std::to_string(t.best_bound);
          out += ",";
          out += t.verified ? "verified" : "residual";
          out += ",";
          out += std::string(t.verifying_filter);
          out += "\n";
        }
      return out;
    }
    case ReportFormat::json: {
      nlohmann::ordered_json root;
      root["max_fd"] = report.max_fd;
      root["sections"] = nlohmann::ordered_json::array();
      for (const auto& section : report.sections) {
        nlohmann::ordered_json sec;
        sec["fd"] = section.fd;
        sec["total"] = section.total();
        sec["verified"] = section.verified_count();
        auto residual = nlohmann::ordered_json::array();
        auto grouped = residuals_by_p(section);
        for (const auto& [p, list] : grouped)
          for (const TypeOutcome* t : list) {
            nlohmann::ordered_json r;
            r["rank_type"] = t->type.canonical();
            r["p"] = t->p;
            r["threshold"] = t->threshold;
            r["best_bound"] = t->best_bound;
            residual.push_back(std::move(r));
          }
        sec["residual"] = std::move(residual);
        root["sections"].push_back(std::move(sec));
      }
      return root.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace hilali
