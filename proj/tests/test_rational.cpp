#include "doctest.h"

#include "terj/rational.hpp"

using terj::Rational;

TEST_CASE("construction keeps lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK_THROWS_AS(Rational(1, 0), terj::DivisionByZero);
}

TEST_CASE("string round trips use p/q, never decimals") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-9") == Rational(-9));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("1/0"), terj::DivisionByZero);
    CHECK_THROWS_AS(Rational::from_string("0.5"), terj::Error);
    CHECK_THROWS_AS(Rational::from_string("x"), terj::Error);
    CHECK_THROWS_AS(Rational::from_string(""), terj::Error);
}

TEST_CASE("field arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a.inv() == Rational(2));
    CHECK_THROWS_AS(Rational(0).inv(), terj::DivisionByZero);
    CHECK_THROWS_AS(a / Rational(0), terj::DivisionByZero);

    Rational c(3, 4);
    c += Rational(1, 4);
    CHECK(c == Rational(1));
    c *= Rational(-2);
    CHECK(c == Rational(-2));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(-1, 2));
    CHECK(Rational(7, 7).is_integer());
    CHECK_FALSE(Rational(7, 8).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(5).sign() == 1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("floor and ceiling") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("exact square roots") {
    auto r = Rational(9, 4).sqrt_exact();
    REQUIRE(r.has_value());
    CHECK(*r == Rational(3, 2));
    CHECK(Rational(0).sqrt_exact().value() == Rational(0));
    CHECK(Rational(49).sqrt_exact().value() == Rational(7));
    CHECK_FALSE(Rational(2).sqrt_exact().has_value());
    CHECK_FALSE(Rational(1, 3).sqrt_exact().has_value());
    CHECK_THROWS_AS(Rational(-1).sqrt_exact(), terj::Error);
}

TEST_CASE("to_long guards") {
    CHECK(Rational(-12).to_long() == -12);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), terj::Error);
}
