#include <doctest.h>

#include "thompson/exact.hpp"

using thompson::Dyadic;

TEST_CASE("dyadic arithmetic is exact and canonical") {
    Dyadic half(1, 1);
    Dyadic quarter(1, 2);
    CHECK(half + quarter == Dyadic(3, 2));
    CHECK(half - half == Dyadic(0));
    CHECK(half * half == quarter);
    CHECK(Dyadic(2, 1) == Dyadic(1));  // 2/2 reduces
    CHECK(Dyadic(4, 2) == Dyadic(1));
    CHECK(half.shifted(2) == Dyadic(2));
    CHECK(half.shifted(-1) == quarter);
    CHECK(Dyadic(3, 2) < Dyadic(1));
    CHECK(-half < Dyadic(0));
}

TEST_CASE("dyadic parse and print") {
    CHECK(Dyadic::parse("3/2^2") == Dyadic(3, 2));
    CHECK(Dyadic::parse("0.75") == Dyadic(3, 2));
    CHECK(Dyadic::parse("1") == Dyadic(1));
    CHECK(Dyadic::parse("3/8") == Dyadic(3, 3));
    CHECK(Dyadic::parse(" 0.5 ") == Dyadic(1, 1));
    CHECK(Dyadic(3, 2).str() == "3/2^2");
    CHECK(Dyadic(1).str() == "1");
    CHECK_THROWS_AS(Dyadic::parse("1/3"), thompson::parse_error);
    CHECK_THROWS_AS(Dyadic::parse("0.1"), thompson::parse_error);  // not dyadic
    CHECK_THROWS_AS(Dyadic::parse("x"), thompson::parse_error);
}

TEST_CASE("digit sums of dyadic points") {
    CHECK(Dyadic(0).digit_sum() == 0);
    CHECK(Dyadic(1, 1).digit_sum() == 1);   // 0.1
    CHECK(Dyadic(3, 2).digit_sum() == 2);   // 0.11
    CHECK(Dyadic(5, 3).digit_sum() == 2);   // 0.101
    CHECK(Dyadic(7, 3).digit_sum() == 3);   // 0.111
}

TEST_CASE("to_double") {
    CHECK(Dyadic(3, 2).to_double() == doctest::Approx(0.75));
    CHECK(Dyadic(1, 20).to_double() == doctest::Approx(1.0 / (1 << 20)));
}
