#pragma once

// JSON model files:
// {
//   "generators":   [{"name": "x", "degree": 2}, ...],
//   "differential": {"y": "x^2", ...},          // omitted names mean d = 0
//   "rank_type":    "2,2,4,4:3,3,3,7,7",        // optional
//   "truncate_at":  6                           // optional
// }
// Round-trips losslessly; polynomial strings are re-rendered canonically.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilali/sullivan.hpp"

namespace hilali {

struct ModelParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SullivanModel read_model_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ModelParseError("model file: expected an object");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ModelParseError("model file: missing \"generators\" array");

  std::vector<Generator> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g.contains("degree") ||
        !g["name"].is_string() || !g["degree"].is_number_integer())
      throw ModelParseError(
          "model file: generators must be {\"name\", \"degree\"} objects");
    gens.push_back({g["name"].get<std::string>(), g["degree"].get<int>()});
  }

  SullivanModel m;
  try {
    m.gens = GeneratorList(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ModelParseError(std::string("model file: ") + e.what());
  }
  m.differential.assign(m.gens.size(), Polynomial{});

  if (j.contains("differential")) {
    if (!j["differential"].is_object())
      throw ModelParseError("model file: \"differential\" must be an object");
    for (const auto& [name, value] : j["differential"].items()) {
      auto idx = m.gens.index_of(name);
      if (!idx)
        throw ModelParseError("model file: differential for unknown generator '" +
                              name + "'");
      if (!value.is_string())
        throw ModelParseError("model file: differential values must be strings");
      try {
        m.differential[*idx] =
            parse_polynomial(m.gens, value.get<std::string>());
      } catch (const PolyParseError& e) {
        throw ModelParseError("model file: d(" + name + "): " + e.what());
      }
    }
  }

  if (j.contains("rank_type")) {
    if (!j["rank_type"].is_string())
      throw ModelParseError("model file: \"rank_type\" must be a string");
    try {
      m.declared_rank_type = parse_rank_type(j["rank_type"].get<std::string>());
    } catch (const RankTypeParseError& e) {
      throw ModelParseError(std::string("model file: rank_type: ") + e.what());
    }
  }

  if (j.contains("truncate_at")) {
    if (!j["truncate_at"].is_number_integer())
      throw ModelParseError("model file: \"truncate_at\" must be an integer");
    m.truncation_degree = j["truncate_at"].get<int>();
  }
  return m;
}

inline SullivanModel read_model(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelParseError(std::string("model file: invalid JSON: ") + e.what());
  }
  return read_model_json(j);
}

inline nlohmann::ordered_json write_model_json(const SullivanModel& m) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (const Generator& g : m.gens) {
    nlohmann::ordered_json e;
    e["name"] = g.name;
    e["degree"] = g.degree;
    j["generators"].push_back(std::move(e));
  }
  nlohmann::ordered_json diff = nlohmann::ordered_json::object();
  for (size_t i = 0; i < m.gens.size(); ++i)
    if (!m.d_of(i).is_zero())
      diff[m.gens[i].name] = m.d_of(i).render(m.gens);
  j["differential"] = std::move(diff);
  if (m.declared_rank_type)
    j["rank_type"] = m.declared_rank_type->canonical();
  if (m.truncation_degree) j["truncate_at"] = *m.truncation_degree;
  return j;
}

inline std::string write_model(const SullivanModel& m) {
  return write_model_json(m).dump(2) + "\n";
}

}  // namespace hilali
