#include <doctest.h>

#include "core/rational.hpp"

using namespace cuthex;

TEST_CASE("pochhammer rising factorial") {
    CHECK(pochhammer(rat(3), 2) == rat(12));
    CHECK(pochhammer(rat(7), 0) == rat(1));
    CHECK(pochhammer(rat(-4), 0) == rat(1));
    CHECK(pochhammer(rat(-2), 5) == rat(0));  // crosses zero
    CHECK(pochhammer(rat(1), 5) == rat(120));
    CHECK(pochhammer_int(-2, 5) == 0);
}

TEST_CASE("factorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(inv_factorial(-1) == 0);
    CHECK(inv_factorial(3) == rat(1, 6));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-6/8") == rat(-3, 4));
    CHECK(parse_rat(" 7 ") == rat(7));
    CHECK(rat_to_string(rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("integer powers") {
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(5), 0) == rat(1));
}
