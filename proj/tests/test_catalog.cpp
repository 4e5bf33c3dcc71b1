#include "doctest.h"

#include <map>

#include "hilali/catalog.hpp"
#include "hilali/filters.hpp"

using namespace hilali;

TEST_CASE("every catalog entry validates and matches its expected dims") {
  for (const auto& entry : witness_catalog()) {
    INFO("entry ", entry.name);
    CHECK(validate_model(entry.model).ok());
    int bound = 0;
    for (const auto& [deg, dim] : entry.expected_dims)
      bound = std::max(bound, deg);
    auto prof = cohomology_profile(entry.model, bound);
    CHECK(prof.dims[0] == 1);
    for (const auto& [deg, dim] : entry.expected_dims) {
      INFO("degree ", deg);
      CHECK(prof.dims[static_cast<size_t>(deg)] == dim);
    }
  }
}

TEST_CASE("certified classes are closed, nonzero and independent") {
  for (const auto& entry : witness_catalog()) {
    INFO("entry ", entry.name);
    std::map<int, std::vector<Polynomial>> by_degree;
    for (const auto& text : entry.nonzero_classes) {
      Polynomial p = parse_polynomial(entry.model.gens, text);
      auto deg = p.homogeneous_degree();
      REQUIRE(deg.has_value());
      CHECK(apply_differential(entry.model, p).is_zero());
      by_degree[*deg].push_back(std::move(p));
    }
    for (const auto& [deg, polys] : by_degree) {
      INFO("degree ", deg);
      CHECK(independent_cohomology_classes(entry.model, polys));
    }
  }
}

TEST_CASE("complete catalog models pass the elliptic battery") {
  int complete_count = 0;
  for (const auto& entry : witness_catalog()) {
    if (entry.model.truncated()) continue;
    ++complete_count;
    INFO("entry ", entry.name);
    auto prof = full_profile(entry.model);
    REQUIRE(prof.complete);
    CHECK(poincare_check(prof));
    auto e = euler_characteristics(entry.model);
    CHECK(e.chi >= 0);
    CHECK((e.chi == 0) == (e.chi_pi < 0));
    auto h = check_hilali(entry.model);
    CHECK(h.holds);
    if (entry.expected_total_dim_h)
      CHECK(prof.total() == *entry.expected_total_dim_h);
    // the formal dimension formula matches the top cohomology degree
    REQUIRE(entry.model.declared_rank_type.has_value());
    CHECK(prof.top_nonzero() ==
          entry.model.declared_rank_type->formal_dimension());
  }
  CHECK(complete_count >= 6);
}

TEST_CASE("truncated entries agree with their full companions") {
  auto catalog = witness_catalog();
  const auto* full = find_catalog_entry(catalog, "cp5");
  const auto* trunc = find_catalog_entry(catalog, "cp5-trunc");
  REQUIRE(full != nullptr);
  REQUIRE(trunc != nullptr);
  int t = *trunc->model.truncation_degree;
  auto full_prof = cohomology_profile(full->model, t);
  auto trunc_prof = cohomology_profile(trunc->model, t);
  CHECK(full_prof.dims == trunc_prof.dims);
}

TEST_CASE("filter bounds are sound on complete catalog models") {
  for (const auto& entry : witness_catalog()) {
    if (entry.model.truncated()) continue;
    REQUIRE(entry.model.declared_rank_type.has_value());
    const RankType& t = *entry.model.declared_rank_type;
    long long dim_h = full_profile(entry.model).total();
    for (const auto& f : all_filters()) {
      FilterOutcome o = f.fn(t);
      if (o.bound) {
        INFO("entry ", entry.name, " filter ", f.id);
        CHECK(dim_h >= *o.bound);
      }
    }
  }
}

TEST_CASE("declared rank types of catalog entries satisfy the SAC") {
  for (const auto& entry : witness_catalog()) {
    REQUIRE(entry.model.declared_rank_type.has_value());
    INFO("entry ", entry.name);
    CHECK(sac_holds(*entry.model.declared_rank_type));
  }
}
