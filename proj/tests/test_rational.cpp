#include "doctest.h"

#include <random>

#include "hilali/rational.hpp"

using hilali::BigInt;
using hilali::Rational;

TEST_CASE("BigInt basic arithmetic and printing") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-17).to_string() == "-17");
  CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() ==
        "998244359987710471");
  CHECK(BigInt::from_string("-998244359987710471").to_string() ==
        "-998244359987710471");
  CHECK((BigInt(7) - BigInt(10)).to_string() == "-3");
  CHECK(BigInt(-7) + BigInt(7) == BigInt(0));
}

TEST_CASE("BigInt division truncates toward zero") {
  CHECK(BigInt(7) / BigInt(2) == BigInt(3));
  CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
  CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
  CHECK(BigInt(7) % BigInt(-2) == BigInt(1));
  CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("BigInt random consistency with native arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    long long a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
}

TEST_CASE("BigInt grows past 64 bits exactly") {
  // 2^100 computed two ways
  BigInt p(1);
  for (int i = 0; i < 100; ++i) p = p * BigInt(2);
  CHECK(p.to_string() == "1267650600228229401496703205376");
  BigInt q = BigInt::from_string("1267650600228229401496703205376");
  CHECK(p == q);
  CHECK(BigInt::gcd(p, BigInt(3) * p) == p);
}

TEST_CASE("Rational normalization") {
  CHECK(Rational(BigInt(2), BigInt(4)).to_string() == "1/2");
  CHECK(Rational(BigInt(-2), BigInt(-4)).to_string() == "1/2");
  CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).to_string() == "0");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("Rational arithmetic is exact") {
  Rational third(BigInt(1), BigInt(3));
  CHECK((third + third + third).is_one());
  CHECK((Rational(1) / Rational(7) * Rational(7)).is_one());
  CHECK(Rational::from_string("2/6") == third);
  CHECK(Rational::from_string("-10/4").to_string() == "-5/2");
  CHECK(Rational(1) / Rational(3) < Rational(1) / Rational(2));
  CHECK(Rational(-1) < Rational(0));
}
