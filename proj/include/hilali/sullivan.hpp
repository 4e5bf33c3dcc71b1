#pragma once

// Minimal Sullivan models: validation, the Leibniz extension of the
// differential, degreewise cohomology by exact linear algebra, Euler
// characteristics, Poincare duality and the Hilali inequality itself.
//
// Differential convention: d(uv) = (du)v + (-1)^{deg u} u(dv).
//
// Truncated models: a model may carry only the generators of its rank type
// up to truncation_degree. H^i is correct whenever every generator of degree
// <= i is present, because absent higher generators neither add degree-i
// monomials nor map onto them.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilali/generators.hpp"
#include "hilali/matrix.hpp"
#include "hilali/monomial.hpp"
#include "hilali/polynomial.hpp"
#include "hilali/rank_type.hpp"
#include "hilali/rational.hpp"

namespace hilali {

struct SullivanModel {
  GeneratorList gens;
  std::vector<Polynomial> differential;  // per generator; zero means d(g) = 0
  std::optional<RankType> declared_rank_type;
  std::optional<int> truncation_degree;

  bool truncated() const { return truncation_degree.has_value(); }

  const Polynomial& d_of(size_t gen_index) const {
    return differential[gen_index];
  }
};

inline SullivanModel make_model(
    std::vector<Generator> generators,
    const std::vector<std::pair<std::string, std::string>>& diffs,
    std::optional<RankType> rank_type = std::nullopt,
    std::optional<int> truncation = std::nullopt) {
  SullivanModel m;
  m.gens = GeneratorList(std::move(generators));
  m.differential.assign(m.gens.size(), Polynomial{});
  for (const auto& [name, text] : diffs) {
    auto idx = m.gens.index_of(name);
    if (!idx)
      throw std::invalid_argument("differential for unknown generator '" +
                                  name + "'");
    m.differential[*idx] = parse_polynomial(m.gens, text);
  }
  m.declared_rank_type = std::move(rank_type);
  m.truncation_degree = truncation;
  return m;
}

/// Extends d from the generators to the whole algebra as a degree +1
/// derivation and applies it, exactly.
inline Polynomial apply_differential(const SullivanModel& m,
                                     const Polynomial& p) {
  const GeneratorList& gens = m.gens;
  Polynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.context_size() != gens.size())
      throw std::invalid_argument("apply_differential: context mismatch");
    const auto& exps = mono.exponents();
    int prefix_degree = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
      int e = exps[i];
      if (e == 0) continue;
      const Polynomial& dg = m.d_of(i);
      if (!dg.is_zero()) {
        // d hits factor i: e * prefix * g_i^{e-1} * dg * suffix, signed by
        // the total degree of the factors before position i.
        std::vector<int> prefix(gens.size(), 0), suffix(gens.size(), 0);
        for (size_t j = 0; j < i; ++j) prefix[j] = exps[j];
        prefix[i] = e - 1;
        for (size_t j = i + 1; j < gens.size(); ++j) suffix[j] = exps[j];
        Polynomial piece = Polynomial::term(
            Monomial::make(gens, std::move(prefix)), Rational(e));
        piece = poly_mul(gens, piece, dg);
        piece = poly_mul(
            gens, piece,
            Polynomial::term(Monomial::make(gens, std::move(suffix)),
                             Rational(1)));
        if (prefix_degree % 2 != 0) piece = -piece;
        out = out + piece.scaled(coeff);
      }
      prefix_degree += e * gens[i].degree;
    }
  }
  return out;
}

struct ValidationIssue {
  std::string generator;  // empty for model-level issues
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const {
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "\n";
      s += i.generator.empty() ? i.reason : i.generator + ": " + i.reason;
    }
    return s;
  }
};

/// Checks generator degrees >= 2, degree compatibility deg(dg) = deg(g)+1,
/// minimality (no linear terms in any dg), d^2 = 0 on every generator, and
/// consistency with the declared rank type up to the truncation degree.
inline ValidationReport validate_model(const SullivanModel& m) {
  ValidationReport report;
  for (size_t i = 0; i < m.gens.size(); ++i) {
    const Generator& g = m.gens[i];
    if (g.degree < 2)
      report.issues.push_back(
          {g.name, "degree " + std::to_string(g.degree) +
                       " violates simple connectivity (degree >= 2 required)"});
  }
  if (m.differential.size() != m.gens.size()) {
    report.issues.push_back({"", "differential table size mismatch"});
    return report;
  }
  for (size_t i = 0; i < m.gens.size(); ++i) {
    const Generator& g = m.gens[i];
    const Polynomial& dg = m.d_of(i);
    if (dg.is_zero()) continue;
    auto deg = dg.homogeneous_degree();
    if (!deg)
      report.issues.push_back({g.name, "d(" + g.name + ") is not homogeneous"});
    else if (*deg != g.degree + 1)
      report.issues.push_back(
          {g.name, "d(" + g.name + ") has degree " + std::to_string(*deg) +
                       ", expected " + std::to_string(g.degree + 1)});
    if (dg.min_word_length() < 2)
      report.issues.push_back(
          {g.name, "d(" + g.name + ") has a linear term (minimality fails)"});
    Polynomial dd = apply_differential(m, dg);
    if (!dd.is_zero())
      report.issues.push_back(
          {g.name, "d(d(" + g.name + ")) = " + dd.render(m.gens) + " != 0"});
  }
  if (m.declared_rank_type) {
    std::vector<int> declared;
    for (int d : m.declared_rank_type->even_degrees) declared.push_back(d);
    for (int d : m.declared_rank_type->odd_degrees) declared.push_back(d);
    if (m.truncation_degree) {
      std::erase_if(declared,
                    [&](int d) { return d > *m.truncation_degree; });
    }
    std::vector<int> present;
    for (const Generator& g : m.gens) present.push_back(g.degree);
    std::sort(declared.begin(), declared.end());
    std::sort(present.begin(), present.end());
    if (declared != present)
      report.issues.push_back(
          {"", "generator degrees do not match the declared rank type" +
                   std::string(m.truncation_degree ? " up to the truncation degree"
                                                   : "")});
  }
  return report;
}

struct CohomologyProfile {
  std::vector<int> dims;  // dims[i] = dim H^i for 0 <= i <= bound
  bool complete = false;  // bound reached past the top nonzero degree

  int top_nonzero() const {
    for (size_t i = dims.size(); i-- > 0;)
      if (dims[i] != 0) return static_cast<int>(i);
    return -1;
  }
  long long total() const {
    long long t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

/// Formal dimension of the (complete) model read off its own generators:
/// sum of odd degrees minus sum of (even degree - 1).
inline int model_formal_dimension(const SullivanModel& m) {
  int fd = 0;
  for (const Generator& g : m.gens)
    fd += g.is_odd() ? g.degree : -(g.degree - 1);
  return fd;
}

/// Degrees are scanned to 2*fd + 1 when certifying completeness; an elliptic
/// model must vanish strictly above its formal dimension.
inline int completeness_scan_bound(const SullivanModel& m) {
  return 2 * model_formal_dimension(m) + 1;
}

namespace detail {

/// Matrix of d : A^k -> A^{k+1} in the canonical monomial bases.
inline RationalMatrix differential_matrix(const SullivanModel& m, int k,
                                          const std::vector<Monomial>& from,
                                          const std::vector<Monomial>& to) {
  (void)k;
  std::map<Monomial, size_t, MonomialLess> row_of;
  for (size_t r = 0; r < to.size(); ++r) row_of.emplace(to[r], r);
  RationalMatrix mat(to.size(), from.size());
  for (size_t c = 0; c < from.size(); ++c) {
    Polynomial img = apply_differential(
        m, Polynomial::term(from[c], Rational(1)));
    for (const auto& [mono, coeff] : img.terms()) {
      auto it = row_of.find(mono);
      if (it == row_of.end())
        throw std::logic_error("differential image outside expected basis");
      mat.at(it->second, c) = coeff;
    }
  }
  return mat;
}

}  // namespace detail

/// Exact dims of H^i for 0 <= i <= up_to via
/// dim H^i = dim ker(d: A^i -> A^{i+1}) - rank(d: A^{i-1} -> A^i).
inline CohomologyProfile cohomology_profile(const SullivanModel& m, int up_to) {
  if (up_to < 0)
    throw std::invalid_argument("cohomology_profile: negative bound");
  {
    ValidationReport v = validate_model(m);
    if (!v.ok())
      throw std::invalid_argument("cohomology_profile: invalid model: " +
                                  v.to_string());
  }
  if (m.truncation_degree && up_to > *m.truncation_degree)
    throw std::invalid_argument(
        "cohomology_profile: bound " + std::to_string(up_to) +
        " exceeds truncation degree " + std::to_string(*m.truncation_degree));

  CohomologyProfile profile;
  profile.dims.assign(static_cast<size_t>(up_to) + 1, 0);
  std::vector<Monomial> basis_k = basis_of_degree(m.gens, 0);
  size_t prev_rank = 0;
  for (int k = 0; k <= up_to; ++k) {
    std::vector<Monomial> basis_next = basis_of_degree(m.gens, k + 1);
    RationalMatrix mat = detail::differential_matrix(m, k, basis_k, basis_next);
    size_t rk = matrix_rank(mat);
    profile.dims[k] = static_cast<int>(basis_k.size()) -
                      static_cast<int>(rk) - static_cast<int>(prev_rank);
    prev_rank = rk;
    basis_k = std::move(basis_next);
  }

  if (!m.truncated()) {
    int fd = model_formal_dimension(m);
    if (fd >= 1 && up_to >= completeness_scan_bound(m)) {
      bool vanishes = true;
      for (size_t i = static_cast<size_t>(fd) + 1; i < profile.dims.size(); ++i)
        if (profile.dims[i] != 0) vanishes = false;
      profile.complete = vanishes;
    }
  }
  return profile;
}

/// Profile scanned to the completeness bound; requires an untruncated model
/// whose generator degrees give a positive formal dimension.
inline CohomologyProfile full_profile(const SullivanModel& m) {
  if (m.truncated())
    throw std::invalid_argument("full_profile: model is truncated");
  int fd = model_formal_dimension(m);
  if (fd < 1)
    throw std::invalid_argument(
        "full_profile: generator degrees give non-positive formal dimension");
  return cohomology_profile(m, completeness_scan_bound(m));
}

struct EulerCharacteristics {
  long long chi = 0;     // topological Euler characteristic
  long long chi_pi = 0;  // homotopy Euler characteristic, = -p
};

inline EulerCharacteristics euler_characteristics(const SullivanModel& m) {
  CohomologyProfile prof = full_profile(m);
  if (!prof.complete)
    throw std::domain_error(
        "euler_characteristics: cohomology does not vanish above the "
        "formal dimension; model is not elliptic");
  EulerCharacteristics e;
  for (size_t i = 0; i < prof.dims.size(); ++i)
    e.chi += (i % 2 == 0) ? prof.dims[i] : -prof.dims[i];
  for (const Generator& g : m.gens) e.chi_pi += g.is_even() ? 1 : -1;
  return e;
}

/// dims[i] == dims[n-i] for all i, n the top nonzero degree.
inline bool poincare_check(const CohomologyProfile& profile) {
  if (!profile.complete)
    throw std::invalid_argument("poincare_check: incomplete profile");
  int n = profile.top_nonzero();
  if (n < 0) return false;  // zero algebra cannot occur for valid models
  for (int i = 0; i <= n; ++i) {
    int dual = profile.dims[static_cast<size_t>(n - i)];
    if (profile.dims[static_cast<size_t>(i)] != dual) return false;
  }
  return true;
}

struct HilaliResult {
  long long dim_h = 0;
  int dim_v = 0;
  bool holds = false;
};

inline HilaliResult check_hilali(const SullivanModel& m) {
  CohomologyProfile prof = full_profile(m);
  if (!prof.complete)
    throw std::domain_error("check_hilali: model has unbounded cohomology");
  HilaliResult r;
  r.dim_h = prof.total();
  r.dim_v = static_cast<int>(m.gens.size());
  r.holds = r.dim_h >= r.dim_v;
  return r;
}

namespace detail {

inline std::vector<Rational> coords_in_basis(
    const Polynomial& p, const std::vector<Monomial>& basis) {
  std::map<Monomial, size_t, MonomialLess> row_of;
  for (size_t r = 0; r < basis.size(); ++r) row_of.emplace(basis[r], r);
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [mono, coeff] : p.terms()) {
    auto it = row_of.find(mono);
    if (it == row_of.end())
      throw std::logic_error("polynomial outside expected basis");
    v[it->second] = coeff;
  }
  return v;
}

}  // namespace detail

/// Certifies that closed homogeneous elements represent linearly independent
/// nonzero cohomology classes: their span must meet the image of d trivially.
inline bool independent_cohomology_classes(
    const SullivanModel& m, const std::vector<Polynomial>& elements) {
  if (elements.empty()) return true;
  auto deg0 = elements.front().homogeneous_degree();
  if (!deg0)
    throw std::invalid_argument("class certification: element not homogeneous");
  int degree = *deg0;
  for (const Polynomial& p : elements) {
    auto dg = p.homogeneous_degree();
    if (!dg || *dg != degree)
      throw std::invalid_argument(
          "class certification: elements must share one degree");
    if (!apply_differential(m, p).is_zero()) return false;
  }
  if (m.truncation_degree && degree > *m.truncation_degree)
    throw std::invalid_argument(
        "class certification: degree exceeds truncation validity");

  std::vector<Monomial> below = basis_of_degree(m.gens, degree - 1);
  std::vector<Monomial> here = basis_of_degree(m.gens, degree);
  RationalMatrix image =
      detail::differential_matrix(m, degree - 1, below, here);
  size_t base_rank = matrix_rank(image);

  RationalMatrix aug(here.size(), image.cols() + elements.size());
  for (size_t r = 0; r < here.size(); ++r)
    for (size_t c = 0; c < image.cols(); ++c) aug.at(r, c) = image.at(r, c);
  for (size_t e = 0; e < elements.size(); ++e) {
    auto v = detail::coords_in_basis(elements[e], here);
    for (size_t r = 0; r < here.size(); ++r)
      aug.at(r, image.cols() + e) = v[r];
  }
  return matrix_rank(aug) == base_rank + elements.size();
}

/// One closed element representing a nonzero class.
inline bool represents_nonzero_class(const SullivanModel& m,
                                     const Polynomial& p) {
  if (p.is_zero()) return false;
  return independent_cohomology_classes(m, {p});
}

}  // namespace hilali
