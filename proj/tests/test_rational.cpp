#include <doctest.h>

#include <random>

#include "flagspec/error.hpp"
#include "flagspec/pi_scalar.hpp"
#include "flagspec/rational.hpp"

using namespace flagspec;

TEST_CASE("parse_rational canonicalizes") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -2/6 ") == Rational(-1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("to_string and parse_rational are inverse") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("big integers format in full decimal") {
  CHECK(to_string(pow2(120)) == "1329227995784915872903807060280344576");
  CHECK(binomial(120, 60) > pow2(100));
  CHECK(parse_bigint(to_string(pow2(200))) == pow2(200));
}

TEST_CASE("parse_rational_list") {
  auto v = parse_rational_list("1,-1/2, 3");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Rational(-1, 2));
  CHECK(parse_rational_list("").empty());
}

TEST_CASE("PiScalar arithmetic tracks powers") {
  PiScalar four_pi(Rational(4), 1), two(Rational(2), 0);
  CHECK((four_pi / two) == PiScalar(Rational(2), 1));
  CHECK((four_pi / four_pi) == PiScalar(Rational(1), 0));
  CHECK((two / four_pi).pi_power() == -1);
  CHECK_THROWS_AS(four_pi + two, Error);
  CHECK_THROWS_AS(four_pi * four_pi, Error);
  CHECK((four_pi + PiScalar(Rational(0), 0)) == four_pi);
  CHECK(two < PiScalar(Rational(3), 0));
  CHECK_THROWS_AS((void)(two < four_pi), Error);
}

TEST_CASE("PiScalar text round trip") {
  for (const auto& s : {PiScalar(Rational(4), 1), PiScalar(Rational(-1, 3), -1), PiScalar(Rational(24), 0)})
    CHECK(parse_pi_scalar(to_string(s)) == s);
  CHECK(parse_pi_scalar("pi") == PiScalar(Rational(1), 1));
  CHECK(parse_pi_scalar("-pi") == PiScalar(Rational(-1), 1));
  CHECK(parse_pi_scalar("3/2*pi") == PiScalar(Rational(3, 2), 1));
}
