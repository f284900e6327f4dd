#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slack/rational.hpp"

using slack::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);

  Rational b(3, -6);
  CHECK(b.numerator() == -1);
  CHECK(b.denominator() == 2);

  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(0).denominator() == 1);
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "1", "-1", "3/2", "-7/3", "123456789123456789/2"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("field arithmetic") {
  Rational half(1, 2), third(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(half.reciprocal().str() == "2");
  CHECK_THROWS(half / Rational(0));
  CHECK_THROWS(Rational(0).reciprocal());
  CHECK(Rational(-5, 3).abs().str() == "5/3");
  CHECK(Rational(-2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("arithmetic is exact at 256-bit scale: (a+b)-b == a") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<int> digit(0, 9);
  auto big = [&] {
    std::string num = "1", den = "1";
    for (int i = 0; i < 77; ++i) num += char('0' + digit(rng));  // ~256 bits
    for (int i = 0; i < 30; ++i) den += char('0' + digit(rng));
    return Rational::parse(num + "/" + den);
  };
  for (int i = 0; i < 50; ++i) {
    Rational a = big(), b = big();
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
  }
}
