#pragma once

// Graded generators of a free graded-commutative algebra. A GeneratorList
// fixes the ambient context: declaration order is the canonical factor order
// for monomials and the column/row order for all matrices built on top.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilali {

struct Generator {
  std::string name;
  int degree = 0;

  bool is_odd() const { return degree % 2 != 0; }
  bool is_even() const { return degree % 2 == 0; }
};

/// Names are a letter, then letters/digits, then optional trailing primes
/// (ASCII apostrophe), e.g. x, x2, y', y''.
inline bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  size_t i = 1;
  while (i < name.size() &&
         std::isalnum(static_cast<unsigned char>(name[i])))
    ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size();
}

class GeneratorList {
 public:
  GeneratorList() = default;

  explicit GeneratorList(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
      const Generator& g = gens_[i];
      if (g.degree < 1)
        throw std::invalid_argument("generator '" + g.name +
                                    "' has non-positive degree");
      if (!is_valid_generator_name(g.name))
        throw std::invalid_argument("invalid generator name '" + g.name + "'");
      if (!index_.emplace(g.name, i).second)
        throw std::invalid_argument("duplicate generator name '" + g.name +
                                    "'");
    }
  }

  size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](size_t i) const { return gens_[i]; }

  std::optional<size_t> index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  friend bool operator==(const GeneratorList& a, const GeneratorList& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].name != b[i].name || a[i].degree != b[i].degree) return false;
    return true;
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, size_t, std::less<>> index_;
};

}  // namespace hilali
