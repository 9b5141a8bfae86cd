#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bded/rational.hpp"

using bded::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), bded::InvalidArgument);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), bded::InvalidArgument);
}

TEST_CASE("ordering is cross-multiplication order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 5) > Rational(4, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("serialization round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.to_string()) == r);
  }
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational(5, 1).to_string() == "5");
  CHECK(Rational(5, 10).to_string() == "1/2");
  CHECK_THROWS_AS(Rational::parse("0.5"), bded::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), bded::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), bded::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), bded::ParseError);
}

TEST_CASE("mediant law") {
  // a/b <= (a+c)/(b+d)  iff  a/b <= c/d, and the same with equality.
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> pos(1, 200);
  for (int i = 0; i < 5000; ++i) {
    long long a = pos(rng), b = pos(rng), c = pos(rng), d = pos(rng);
    Rational ab(a, b), cd(c, d), mediant(a + c, b + d);
    CHECK((ab <= mediant) == (ab <= cd));
    CHECK((ab == mediant) == (ab == cd));
  }
}

TEST_CASE("lowest terms is preserved by arithmetic") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long long> num(-60, 60);
  std::uniform_int_distribution<long long> den(1, 60);
  auto gcd_ll = [](long long a, long long b) {
    a = a < 0 ? -a : a;
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (int i = 0; i < 3000; ++i) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    for (Rational r : {x + y, x - y, x * y}) {
      long long n = static_cast<long long>(r.num());
      long long d = static_cast<long long>(r.den());
      CHECK(d > 0);
      CHECK((n == 0 ? d == 1 : gcd_ll(n, d) == 1));
    }
  }
}
