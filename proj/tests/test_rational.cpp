#include <doctest.h>

#include "powerkit/rational.hpp"

using namespace powerkit;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7/30") == Rat(7, 30));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("12") == Rat(12));
    CHECK(parse_rational("0.62") == Rat(62, 100));
    CHECK(parse_rational("-0.125") == Rat(-1, 8));
    CHECK(parse_rational(" 2 / 3 ") == Rat(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("fraction rendering") {
    CHECK(to_fraction_string(Rat(7, 30)) == "7/30");
    CHECK(to_fraction_string(Rat(4, 2)) == "2");
    CHECK(to_fraction_string(Rat(-1, 8)) == "-1/8");
}

TEST_CASE("half-even decimal rendering") {
    CHECK(to_decimal_string(Rat(7, 30), 3) == "0.233");
    CHECK(to_decimal_string(Rat(3, 20), 3) == "0.150");
    CHECK(to_decimal_string(Rat(1, 8), 3) == "0.125");
    CHECK(to_decimal_string(Rat(0), 3) == "0.000");
    // Ties go to the even neighbour.
    CHECK(to_decimal_string(Rat(25, 10), 0) == "2");
    CHECK(to_decimal_string(Rat(35, 10), 0) == "4");
    CHECK(to_decimal_string(Rat(1, 8), 2) == "0.12");
    CHECK(to_decimal_string(Rat(3, 8), 2) == "0.38");
    CHECK(to_decimal_string(Rat(-1, 8), 2) == "-0.12");
    CHECK(to_decimal_string(Rat(7, 30), 6) == "0.233333");
    CHECK(to_decimal_string(Rat(1832624140942590534ULL), 0) ==
          "1832624140942590534");
}

TEST_CASE("round_half_even as rational") {
    CHECK(round_half_even(Rat(7, 30), 3) == Rat(233, 1000));
    CHECK(round_half_even(Rat(1, 8), 2) == Rat(12, 100));
    CHECK(round_half_even(Rat(-1, 8), 2) == Rat(-12, 100));
    CHECK(round_half_even(Rat(5, 2), 0) == Rat(2));
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(64, 32) == Int("1832624140942590534"));
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("common denominator") {
    CHECK(common_denominator({Rat(1, 4), Rat(1, 6), Rat(2)}) == 12);
    CHECK(common_denominator({}) == 1);
}
