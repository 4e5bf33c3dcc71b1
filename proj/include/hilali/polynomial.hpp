#pragma once

// Polynomials in a free graded-commutative algebra over the rationals:
// a finite map from canonical monomials to nonzero coefficients, plus the
// text grammar used by model files and the CLI.
//
// Grammar (whitespace free between tokens):
//   polynomial := [sign] term (sign term)*
//   term       := rational ['*' factor ('*' factor)*]
//              |  factor ('*' factor)*
//   factor     := name ['^' positive-integer]
//   rational   := integer [ '/' integer ]
// Factor order is normalized with Koszul signs, so "y'*y" parses to -(y*y').

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hilali/generators.hpp"
#include "hilali/monomial.hpp"
#include "hilali/rational.hpp"

namespace hilali {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;

  static Polynomial term(const Monomial& m, Rational c) {
    Polynomial p;
    p.add_term(m, std::move(c));
    return p;
  }

  static Polynomial constant(const GeneratorList& gens, Rational c) {
    return term(Monomial::unit(gens), std::move(c));
  }

  static Polynomial generator(const GeneratorList& gens, size_t index) {
    std::vector<int> exps(gens.size(), 0);
    exps[index] = 1;
    return term(Monomial::make(gens, std::move(exps)), Rational(1));
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Degree when every term has the same one; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return std::nullopt;
    return d;
  }

  int max_word_length() const {
    int w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.word_length());
    return w;
  }

  int min_word_length() const {
    if (terms_.empty()) return 0;
    int w = terms_.begin()->first.word_length();
    for (const auto& [m, c] : terms_) w = std::min(w, m.word_length());
    return w;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_context(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_context(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial scaled(const Rational& s) const {
    Polynomial r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  std::string render(const GeneratorList& gens) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      Rational a = c.abs();
      if (out.empty()) {
        if (c.is_negative()) out += "-";
      } else {
        out += c.is_negative() ? " - " : " + ";
      }
      if (m.is_unit()) {
        out += a.to_string();
      } else if (a.is_one()) {
        out += m.render(gens);
      } else {
        out += a.to_string() + "*" + m.render(gens);
      }
    }
    return out;
  }

 private:
  TermMap terms_;

  static void check_context(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    if (a.terms_.begin()->first.context_size() !=
        b.terms_.begin()->first.context_size())
      throw std::invalid_argument("polynomial context mismatch");
  }
};

inline Polynomial poly_mul(const GeneratorList& gens, const Polynomial& a,
                           const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      SignedMonomial sm = monomial_product(gens, ma, mb);
      if (sm.sign == 0) continue;
      r.add_term(sm.mono, sm.sign < 0 ? -(ca * cb) : ca * cb);
    }
  return r;
}

struct PolyParseError : std::runtime_error {
  size_t position;
  PolyParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace detail {

struct PolyCursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() &&
           (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string parse_uint_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw PolyParseError("expected digits", start);
    return std::string(s.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      throw PolyParseError("expected generator name", pos);
    ++pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
      ++pos;
    while (pos < s.size() && s[pos] == '\'') ++pos;
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace detail

inline Polynomial parse_polynomial(const GeneratorList& gens,
                                   std::string_view text) {
  detail::PolyCursor cur{text};
  Polynomial out;

  // "0" is the canonical rendering of the zero polynomial
  cur.skip_ws();
  if (text.substr(cur.pos) == "0") return out;

  bool first = true;
  while (true) {
    cur.skip_ws();
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      if (cur.done()) break;
      throw PolyParseError("expected '+' or '-'", cur.pos);
    }
    first = false;

    // term
    Rational coeff(sign);
    bool saw_coeff = false;
    cur.skip_ws();
    if (cur.pos < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
      std::string num = cur.parse_uint_digits();
      std::string den;
      if (cur.peek() == '/') {
        ++cur.pos;
        den = cur.parse_uint_digits();
      }
      Rational r = den.empty()
                       ? Rational(BigInt::from_string(num), BigInt(1))
                       : Rational(BigInt::from_string(num),
                                  BigInt::from_string(den));
      coeff = sign < 0 ? -r : r;
      saw_coeff = true;
    }

    Monomial mono = Monomial::unit(gens);
    int mono_sign = 1;
    bool saw_factor = false;
    while (true) {
      cur.skip_ws();
      if (saw_coeff || saw_factor) {
        if (cur.peek() != '*') break;
        ++cur.pos;
      } else if (!std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        throw PolyParseError("expected coefficient or generator", cur.pos);
      }
      size_t name_pos = cur.pos;
      cur.skip_ws();
      name_pos = cur.pos;
      std::string name = cur.parse_name();
      auto idx = gens.index_of(name);
      if (!idx)
        throw PolyParseError("unknown generator '" + name + "'", name_pos);
      int exp = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        size_t exp_pos = cur.pos;
        exp = 0;
        for (char d : cur.parse_uint_digits()) {
          exp = exp * 10 + (d - '0');
          if (exp > 1000000)
            throw PolyParseError("exponent too large", exp_pos);
        }
        if (exp < 1)
          throw PolyParseError("exponent must be positive", exp_pos);
      }
      if (gens[*idx].is_odd() && exp >= 2)
        throw PolyParseError(
            "odd generator '" + name + "' with exponent >= 2", name_pos);
      std::vector<int> fexps(gens.size(), 0);
      fexps[*idx] = exp;
      Monomial factor = Monomial::make(gens, std::move(fexps));
      SignedMonomial prod = monomial_product(gens, mono, factor);
      if (prod.sign == 0)
        throw PolyParseError(
            "odd generator '" + name + "' appears twice in a term", name_pos);
      mono = prod.mono;
      mono_sign *= prod.sign;
      saw_factor = true;
    }

    out.add_term(mono, mono_sign < 0 ? -coeff : coeff);
    if (cur.done()) break;
    char nxt = cur.peek();
    if (nxt != '+' && nxt != '-')
      throw PolyParseError("unexpected character", cur.pos);
  }
  return out;
}

}  // namespace hilali
