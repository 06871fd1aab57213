#include <catch2/catch_amalgamated.hpp>

#include "lrb/rational.hpp"
#include "test_util.hpp"

using lrb::make_rational;
using lrb::parse_rational;
using lrb::Rational;

TEST_CASE("rationals are canonical", "[rational]") {
    CHECK(lrb::to_string(make_rational(2, 4)) == "1/2");
    CHECK(lrb::to_string(make_rational(3, -6)) == "-1/2");
    CHECK(lrb::to_string(make_rational(-3, -6)) == "1/2");
    CHECK(lrb::to_string(make_rational(0, 5)) == "0");
    CHECK(lrb::to_string(make_rational(7, 1)) == "7");
    CHECK(denominator(make_rational(0, 5)) == 1);
    CHECK_THROWS_AS(make_rational(1, 0), lrb::Error);
}

TEST_CASE("rational parsing round-trips", "[rational]") {
    CHECK(parse_rational("1/2") == make_rational(1, 2));
    CHECK(parse_rational("-1/2") == make_rational(-1, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK(parse_rational("1/-2") == make_rational(-1, 2));

    CHECK_THROWS_AS(parse_rational(""), lrb::ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), lrb::ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), lrb::ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), lrb::ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), lrb::ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), lrb::ParseError);

    lrbtest::RationalGen gen(101);
    for (int i = 0; i < 200; ++i) {
        const Rational q = gen.any();
        CHECK(parse_rational(lrb::to_string(q)) == q);
    }
}

TEST_CASE("arithmetic is exact", "[rational]") {
    lrbtest::RationalGen gen(102);
    for (int i = 0; i < 500; ++i) {
        const Rational a = gen.any();
        const Rational b = gen.nonzero();
        CHECK(Rational((a + b) - b) == a);
        CHECK(Rational((a * b) / b) == a);
    }
}
