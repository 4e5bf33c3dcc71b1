#pragma once

// Monomials of a free graded-commutative algebra: exponent vectors over a
// fixed GeneratorList, with exterior (odd) generators capped at exponent 1.
// Products carry the Koszul sign.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilali/generators.hpp"

namespace hilali {

class Monomial {
 public:
  Monomial() = default;

  static Monomial unit(const GeneratorList& gens) {
    Monomial m;
    m.exps_.assign(gens.size(), 0);
    m.degree_ = 0;
    return m;
  }

  static Monomial make(const GeneratorList& gens, std::vector<int> exps) {
    if (exps.size() != gens.size())
      throw std::invalid_argument("monomial exponent vector size mismatch");
    Monomial m;
    m.exps_ = std::move(exps);
    m.degree_ = 0;
    for (size_t i = 0; i < m.exps_.size(); ++i) {
      if (m.exps_[i] < 0)
        throw std::invalid_argument("negative exponent");
      if (gens[i].is_odd() && m.exps_[i] > 1)
        throw std::invalid_argument("odd generator '" + gens[i].name +
                                    "' with exponent >= 2");
      m.degree_ += m.exps_[i] * gens[i].degree;
    }
    return m;
  }

  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_unit() const {
    for (int e : exps_)
      if (e != 0) return false;
    return true;
  }
  size_t context_size() const { return exps_.size(); }

  int word_length() const {
    int w = 0;
    for (int e : exps_) w += e;
    return w;
  }

  /// Canonical order: lower degree first; within a degree, the monomial with
  /// the higher power of the earliest differing generator comes first
  /// (so for x < y one gets x^2 y before x y^2).
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    if (a.exps_.size() != b.exps_.size())
      throw std::invalid_argument("monomial context mismatch");
    for (size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? -1 : 1;
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  std::string render(const GeneratorList& gens) const {
    std::string out;
    for (size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += gens[i].name;
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

/// Product with sign; sign == 0 means the product vanished (odd square).
struct SignedMonomial {
  int sign = 0;
  Monomial mono;
};

inline SignedMonomial monomial_product(const GeneratorList& gens,
                                       const Monomial& u, const Monomial& v) {
  if (u.context_size() != gens.size() || v.context_size() != gens.size())
    throw std::invalid_argument("monomial_product: context mismatch");
  const auto& ue = u.exponents();
  const auto& ve = v.exponents();
  std::vector<int> out(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    out[i] = ue[i] + ve[i];
    if (gens[i].is_odd() && out[i] > 1) return {0, Monomial()};
  }
  // Koszul sign: each odd factor of v passes the odd factors of u that sit
  // after it in canonical order; count those inversions.
  long long inversions = 0;
  long long u_odd_after = 0;  // odd factors of u with index > current
  for (size_t i = gens.size(); i-- > 0;) {
    if (!gens[i].is_odd()) continue;
    if (ve[i] == 1) inversions += u_odd_after;
    if (ue[i] == 1) ++u_odd_after;
  }
  int sign = (inversions % 2 == 0) ? 1 : -1;
  return {sign, Monomial::make(gens, std::move(out))};
}

/// All monomials of total degree k, in canonical order. k = 0 yields {1}.
inline std::vector<Monomial> basis_of_degree(const GeneratorList& gens, int k) {
  if (k < 0) throw std::invalid_argument("basis_of_degree: negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(gens.size(), 0);
  auto rec = [&](auto&& self, size_t i, int rem) -> void {
    if (rem == 0) {
      // pad the tail with zeros
      std::vector<int> full = exps;
      for (size_t j = i; j < gens.size(); ++j) full[j] = 0;
      out.push_back(Monomial::make(gens, std::move(full)));
      return;
    }
    if (i == gens.size()) return;
    int d = gens[i].degree;
    int emax = gens[i].is_odd() ? 1 : rem / d;
    if (emax > rem / d) emax = rem / d;
    for (int e = 0; e <= emax; ++e) {
      exps[i] = e;
      self(self, i + 1, rem - e * d);
    }
    exps[i] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

}  // namespace hilali
