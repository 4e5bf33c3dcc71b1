#pragma once

// Exact integer and rational arithmetic. Everything downstream (bases,
// differentials, elimination) runs on these; there is no floating point
// anywhere in the library.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilali {

/// Sign-magnitude big integer, little-endian base 2^32 limbs.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m =
        v < 0 ? static_cast<unsigned long long>(-(v + 1)) + 1ull
              : static_cast<unsigned long long>(v);
    while (m != 0) {
      limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
      m >>= 32;
    }
  }

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigInt: bad digit");
      out = out * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) out.sign_ = -out.sign_;
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  BigInt negated() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + b.negated();
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Quotient truncated toward zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    return divmod(a, b).first;
  }

  /// Remainder with the sign of the dividend.
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    return divmod(a, b).second;
  }

  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    std::vector<uint32_t> q, r;
    divmod_mag(a.limbs_, b.limbs_, q, r);
    BigInt Q, R;
    Q.limbs_ = std::move(q);
    trim(Q.limbs_);
    Q.sign_ = Q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    R.limbs_ = std::move(r);
    trim(R.limbs_);
    R.sign_ = R.limbs_.empty() ? 0 : a.sign_;
    return {Q, R};
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
      BigInt t = a % b;
      a = std::move(b);
      b = std::move(t);
    }
    return a;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> rest = limbs_;
    const std::vector<uint32_t> base{1000000000u};
    std::string out;
    while (!rest.empty()) {
      std::vector<uint32_t> q, r;
      divmod_mag(rest, base, q, r);
      trim(q);
      uint32_t chunk = r.empty() ? 0u : r[0];
      std::string part = std::to_string(chunk);
      rest = std::move(q);
      if (!rest.empty())
        part.insert(part.begin(), 9 - part.size(), '0');
      out.insert(0, part);
    }
    if (sign_ < 0) out.insert(out.begin(), '-');
    return out;
  }

 private:
  int sign_ = 0;
  std::vector<uint32_t> limbs_;  // no trailing zero limbs; empty <=> zero

  static void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      uint64_t s = carry;
      if (i < a.size()) s += a[i];
      if (i < b.size()) s += b[i];
      r.push_back(static_cast<uint32_t>(s & 0xffffffffull));
      carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t d = static_cast<int64_t>(r[i]) - borrow -
                  (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
      if (d < 0) {
        d += (1ll << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(d);
    }
    trim(r);
    return r;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
        r[k] = static_cast<uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(r);
    return r;
  }

  static bool get_bit(const std::vector<uint32_t>& v, size_t bit) {
    size_t limb = bit / 32;
    if (limb >= v.size()) return false;
    return (v[limb] >> (bit % 32)) & 1u;
  }

  // binary long division on magnitudes; n, d nonzero
  static void divmod_mag(const std::vector<uint32_t>& n,
                         const std::vector<uint32_t>& d,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(n.size(), 0);
    r.clear();
    for (size_t bit = n.size() * 32; bit-- > 0;) {
      // r = (r << 1) | n[bit]
      uint32_t carry = get_bit(n, bit) ? 1u : 0u;
      for (size_t i = 0; i < r.size(); ++i) {
        uint32_t next = r[i] >> 31;
        r[i] = (r[i] << 1) | carry;
        carry = next;
      }
      if (carry) r.push_back(carry);
      if (cmp_mag_trimmed(r, d) >= 0) {
        r = sub_mag(r, d);
        q[bit / 32] |= (1u << (bit % 32));
      }
    }
  }

  static int cmp_mag_trimmed(const std::vector<uint32_t>& a,
                             const std::vector<uint32_t>& b) {
    size_t as = a.size(), bs = b.size();
    while (as > 0 && a[as - 1] == 0) --as;
    while (bs > 0 && b[bs - 1] == 0) --bs;
    if (as != bs) return as < bs ? -1 : 1;
    for (size_t i = as; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
};

/// Rational number, always normalized: denominator > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static Rational from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.sign() < 0; }
  bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

  Rational abs() const { return is_negative() ? -*this : *this; }

  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = r.num_.negated();
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  std::string to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.sign() < 0) {
      num_ = num_.negated();
      den_ = den_.negated();
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

}  // namespace hilali
