#include <doctest.h>

#include "cookiecut/rational.hpp"

using namespace cookiecut;

TEST_CASE("fraction strings parse to canonical lowest terms") {
  CHECK(*parse_rational("3/6") == rat(1, 2));
  CHECK(*parse_rational("7") == Rat(7));
  CHECK(*parse_rational("-3/9") == rat(-1, 3));
  CHECK(*parse_rational("0/5") == Rat(0));
}

TEST_CASE("decimal literals parse exactly") {
  CHECK(*parse_rational("1.25") == rat(5, 4));
  CHECK(*parse_rational("0.1") == rat(1, 10));
  CHECK(*parse_rational("-2.50") == rat(-5, 2));
  CHECK(*parse_rational("3.") == Rat(3));
  CHECK(*parse_rational(".5") == rat(1, 2));
}

TEST_CASE("garbage is rejected") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational("1e5"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1/2/3"));
  CHECK(!parse_rational("--2"));
}

TEST_CASE("serialization is canonical a/b") {
  CHECK(fraction_string(rat(1, 2)) == "1/2");
  CHECK(fraction_string(Rat(3)) == "3/1");
  CHECK(fraction_string(rat(-2, 4)) == "-1/2");
  CHECK(fraction_string(Rat(0)) == "0/1");
}

TEST_CASE("decimal detection drives the tolerance switch") {
  CHECK(is_decimal_literal("1.5"));
  CHECK(!is_decimal_literal("3/2"));
  CHECK(!is_decimal_literal("15"));
}

TEST_CASE("round trip through strings is lossless") {
  for (long num = -20; num <= 20; ++num) {
    for (long den = 1; den <= 7; ++den) {
      const Rat q = rat(num, den);
      CHECK(*parse_rational(fraction_string(q)) == q);
    }
  }
}
