#include <doctest.h>

#include <stdexcept>

#include "lgroup/rational.hpp"

using namespace lgroup;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(parse_rat("0") == Rat(0));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat("1/2") == Rat(1, 2));
  CHECK(parse_rat("-7/14") == Rat(-1, 2));
  CHECK(parse_rat(" 5/3 ") == Rat(5, 3));
  CHECK(parse_rat("+4/6") == Rat(2, 3));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("rendering is canonical") {
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
  CHECK(rat_to_string(parse_rat("6/-4")) == "-3/2");
  CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("floor and ceil agree with exact arithmetic") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(6)) == 6);
  CHECK(rat_ceil(Rat(6)) == 6);
  CHECK(rat_floor(Rat(0)) == 0);
}

TEST_CASE("sign and absolute value") {
  CHECK(rat_sign(Rat(-5, 3)) == -1);
  CHECK(rat_sign(Rat(0)) == 0);
  CHECK(rat_sign(Rat(2)) == 1);
  CHECK(rat_abs(Rat(-5, 3)) == Rat(5, 3));
}
