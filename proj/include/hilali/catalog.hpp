#pragma once

// Built-in witness models. Complete entries are small elliptic models whose
// full cohomology is checked against Poincare duality, the Euler
// characteristic signs and the Hilali inequality. Truncated entries carry
// the generators of their rank type up to the truncation degree, expected
// cohomology dimensions in the trusted range, and explicit closed elements
// certified as nonzero (and jointly independent) cohomology classes.
//
// Differentials with free parameters are pinned at representative rational
// values; the surrounding case analysis holds for all parameter choices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilali/sullivan.hpp"

namespace hilali {

struct CatalogEntry {
  std::string name;
  SullivanModel model;
  std::map<int, int> expected_dims;        // degree -> dim H^degree
  std::vector<std::string> nonzero_classes;  // certified jointly independent
  std::optional<long long> expected_total_dim_h;  // complete entries only
};

inline std::vector<CatalogEntry> witness_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, SullivanModel model,
                 std::map<int, int> dims,
                 std::vector<std::string> classes = {},
                 std::optional<long long> total = std::nullopt) {
    out.push_back({std::move(name), std::move(model), std::move(dims),
                   std::move(classes), total});
  };

  // --- complete models -----------------------------------------------------

  add("s3", make_model({{"y", 3}}, {}, parse_rank_type(":3")),
      {{0, 1}, {3, 1}}, {}, 2);

  add("s2", make_model({{"x", 2}, {"y", 3}}, {{"y", "x^2"}},
                       parse_rank_type("2:3")),
      {{0, 1}, {2, 1}}, {}, 2);

  add("s3xs3", make_model({{"y", 3}, {"y'", 3}}, {}, parse_rank_type(":3,3")),
      {{0, 1}, {3, 2}, {6, 1}}, {}, 4);

  add("s2xs3",
      make_model({{"x", 2}, {"u", 3}, {"v", 3}}, {{"u", "x^2"}},
                 parse_rank_type("2:3,3")),
      {{0, 1}, {2, 1}, {3, 1}, {4, 0}, {5, 1}}, {}, 4);

  // twisted 7-dimensional model on (2:3,5): du = x^3 links the spheres
  add("s2s5-twisted",
      make_model({{"x", 2}, {"y", 3}, {"u", 5}}, {{"y", "x^2"}, {"u", "x^3"}},
                 parse_rank_type("2:3,5")),
      {{0, 1}, {2, 1}, {3, 0}, {4, 0}, {5, 1}, {6, 0}, {7, 1}}, {}, 4);

  // two middle even generators; rationally S^2 x S^2
  add("s2xs2",
      make_model({{"x", 2}, {"x'", 2}, {"y", 3}, {"y'", 3}},
                 {{"y", "x^2 - x'^2"}, {"y'", "x*x'"}},
                 parse_rank_type("2,2:3,3")),
      {{0, 1}, {2, 2}, {3, 0}, {4, 1}}, {}, 4);

  // one middle generator family Lambda(x_k, y_{3k-1}), dy = x^3
  add("cp2", make_model({{"x", 2}, {"y", 5}}, {{"y", "x^3"}},
                        parse_rank_type("2:5")),
      {{0, 1}, {2, 1}, {4, 1}}, {}, 3);

  add("hp2", make_model({{"x", 4}, {"y", 11}}, {{"y", "x^3"}},
                        parse_rank_type("4:11")),
      {{0, 1}, {4, 1}, {8, 1}}, {}, 3);

  add("cp5", make_model({{"x", 2}, {"y", 11}}, {{"y", "x^6"}},
                        parse_rank_type("2:11")),
      {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}}, {}, 6);

  // --- truncated models ----------------------------------------------------

  // truncation companion of cp5 (drops the degree-11 generator)
  add("cp5-trunc",
      make_model({{"x", 2}}, {}, parse_rank_type("2:11"), 10),
      {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}});

  // fd 15 residual (2,2,4,4:3,3,3,7,7): with d injective on the degree-3
  // part, three classes survive in degree 6.
  add("fd15-massey",
      make_model({{"x", 2},
                  {"x'", 2},
                  {"y", 3},
                  {"y'", 3},
                  {"y''", 3},
                  {"z", 4},
                  {"z'", 4}},
                 {{"y", "x^2"},
                  {"y'", "x'^2"},
                  {"y''", "x*x'"},
                  {"z", "x*y' - x'*y''"},
                  {"z'", "x'*y - x*y''"}},
                 parse_rank_type("2,2,4,4:3,3,3,7,7"), 6),
      {{0, 1}, {2, 2}, {3, 0}, {4, 0}, {5, 0}, {6, 3}},
      {"y'*y'' + x'*z", "y*y'' + x*z'", "y*y' - x*z + x'*z'"});

  // fd 17 residual (2,4,6:3,5,7,11), parameters (a, b) of
  // d(x5) = a*x2*x4 + b*x2^3 pinned at (0,0) and (1,1).
  add("fd17-chain-00",
      make_model({{"x2", 2},
                  {"x3", 3},
                  {"x4", 4},
                  {"x5", 5},
                  {"x6", 6},
                  {"x7", 7}},
                 {{"x3", "x2^2"}, {"x6", "x2*x5"}},
                 parse_rank_type("2,4,6:3,5,7,11"), 10),
      {{0, 1}, {2, 1}, {3, 0}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 2}},
      {"x4^2", "x2*x6 - x3*x5"});

  add("fd17-chain-11",
      make_model({{"x2", 2},
                  {"x3", 3},
                  {"x4", 4},
                  {"x5", 5},
                  {"x6", 6},
                  {"x7", 7}},
                 {{"x3", "x2^2"},
                  {"x5", "x2*x4 + x2^3"},
                  {"x6", "x2*x5 - x3*x4 - x2^2*x3"},
                  {"x7", "x2*x6 - x3*x5"}},
                 parse_rank_type("2,4,6:3,5,7,11"), 10),
      {{0, 1}, {2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 0}, {7, 0}, {8, 1}},
      {"x4^2"});

  // fd 19 residual (2,4:3,3,5,5,7): dy = x^2, dy' = 0, dz = x*y' kills H^4
  // and H^5 of the quadratic part; yy' - xz survives in degree 6.
  add("fd19-24-massey",
      make_model({{"x", 2},
                  {"y", 3},
                  {"y'", 3},
                  {"z", 4},
                  {"u", 5},
                  {"u'", 5},
                  {"v", 7}},
                 {{"y", "x^2"}, {"z", "x*y'"}},
                 parse_rank_type("2,4:3,3,5,5,7"), 8),
      {{0, 1}, {2, 1}, {3, 1}, {4, 0}, {5, 2}, {6, 1}},
      {"y*y' - x*z"});

  // fd 19 residual (2,2,4,6:3,3,5,7,11), closed-element cases.
  add("fd19-2246-closed",
      make_model({{"x", 2},
                  {"x'", 2},
                  {"y", 3},
                  {"y'", 3},
                  {"z", 4},
                  {"u", 5},
                  {"w", 6}},
                 {{"y", "x^2"}, {"y'", "x'^2"}},
                 parse_rank_type("2,2,4,6:3,3,5,7,11"), 6),
      {{0, 1}, {2, 2}, {3, 0}, {4, 2}, {5, 1}, {6, 3}}, {"z", "x*z", "x'*z"});

  add("fd19-2246-massey-b1",
      make_model({{"x", 2},
                  {"x'", 2},
                  {"y", 3},
                  {"y'", 3},
                  {"z", 4},
                  {"u", 5},
                  {"w", 6}},
                 {{"y", "x^2 + x*x'"},
                  {"y'", "x'^2 + x*x'"},
                  {"z", "x*y' - x'*y"}},
                 parse_rank_type("2,2,4,6:3,3,5,7,11"), 6),
      {{0, 1}, {2, 2}, {3, 0}, {4, 1}, {5, 1}, {6, 3}},
      {"y*y' - x*z - x'*z"});

  add("fd19-2246-massey-b0",
      make_model({{"x", 2},
                  {"x'", 2},
                  {"y", 3},
                  {"y'", 3},
                  {"z", 4},
                  {"u", 5},
                  {"w", 6}},
                 {{"y", "x*x'"}, {"y'", "x^2"}, {"z", "x*y - x'*y'"}},
                 parse_rank_type("2,2,4,6:3,3,5,7,11"), 6),
      {{0, 1}, {2, 2}, {3, 0}, {4, 1}, {5, 1}, {6, 3}}, {"y*y' + x*z"});

  // (2,4,a:3,3,b,c) shape with a >= 6: dy = x^2, dy' = 0, dz = x*y' leaves
  // the class [x*z - y*y'] alive in degree 6.
  add("r283-massey",
      make_model({{"x", 2}, {"y", 3}, {"y'", 3}, {"z", 4}, {"u", 6}},
                 {{"y", "x^2"}, {"z", "x*y'"}},
                 parse_rank_type("2,4,6:3,3,7,11"), 6),
      {{0, 1}, {2, 1}, {3, 1}, {4, 0}, {5, 0}, {6, 2}},
      {"x*z - y*y'"});

  return out;
}

inline const CatalogEntry* find_catalog_entry(
    const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace hilali
