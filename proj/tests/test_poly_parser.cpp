#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfe/poly_parser.hpp"

using pfe::parse_poly;
using pfe::PolyParseError;
using pfe::Rational;
using pfe::XPolynomial;

TEST_CASE("plain polynomials") {
    CHECK(parse_poly("x^4 - 3*x + 1") ==
          XPolynomial({Rational(1), Rational(-3), Rational(0), Rational(0), Rational(1)}));
    CHECK(parse_poly("(x-1)*(x+1)") == XPolynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK(parse_poly("1/2*x^2") == XPolynomial({Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(parse_poly("5") == XPolynomial::constant(Rational(5)));
    CHECK(parse_poly("x") == XPolynomial::variable());
    CHECK(parse_poly("0") == XPolynomial());
}

TEST_CASE("precedence: power binds tighter than unary minus and product") {
    CHECK(parse_poly("-x^2") == Rational(-1) * XPolynomial::monomial(2, Rational(1)));
    CHECK(parse_poly("2*x^3") == XPolynomial::monomial(3, Rational(2)));
    CHECK(parse_poly("(-x)^2") == XPolynomial::monomial(2, Rational(1)));
    CHECK(parse_poly("-x*x") == Rational(-1) * XPolynomial::monomial(2, Rational(1)));
    CHECK(parse_poly("2^3") == XPolynomial::constant(Rational(8)));
    CHECK(parse_poly("(x+1)^2") ==
          XPolynomial({Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("rational literals use slash without a division operator") {
    CHECK(parse_poly("3/6") == XPolynomial::constant(Rational(1, 2)));
    CHECK(parse_poly("1/2 * x + 1/3") ==
          XPolynomial({Rational(1, 3), Rational(1, 2)}));
    CHECK_THROWS_AS(parse_poly("x/2"), PolyParseError);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_poly("  x ^ 2  +  1 ") == XPolynomial({Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_poly("x^4 - 3*y + 1");
        FAIL("expected a parse error");
    } catch (const PolyParseError& e) {
        CHECK(e.position() == 8);
    }
    try {
        parse_poly("x + ");
        FAIL("expected a parse error");
    } catch (const PolyParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_poly("(x+1"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^(2)"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^-2"), PolyParseError);
    CHECK_THROWS_AS(parse_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_poly("1 2"), PolyParseError);
}

TEST_CASE("expressions combine exactly") {
    CHECK(parse_poly("(x-1)^3 - x^3 + 3*x^2 - 3*x + 1") == XPolynomial());
    CHECK(parse_poly("2/4*x - -x") == XPolynomial({Rational(0), Rational(3, 2)}));
}
