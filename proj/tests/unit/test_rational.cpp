#include "doctest.h"
#include "generators.hpp"

#include "vassiliev/rational.hpp"

#include <sstream>

using vassiliev::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator")
{
    const Rational r(6, -8);
    CHECK(r.numerator_str() == "-3");
    CHECK(r.denominator_str() == "4");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational(0, -5).denominator_str() == "1");
    CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("parse accepts integers and fractions")
{
    CHECK(Rational::parse("3/8") == Rational(3, 8));
    CHECK(Rational::parse("-12/4") == Rational(-3));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("division by zero is an error")
{
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("pow and ordering")
{
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    std::ostringstream os;
    os << Rational(-5, 10);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("big values stay exact")
{
    const Rational big = Rational(10).pow(40) + Rational(1, 3);
    CHECK((big - Rational(10).pow(40)) == Rational(1, 3));
}

TEST_CASE("property: (a + b) - b == a and field identities")
{
    vassiliev::testing::Gen gen(11);
    for (int i = 0; i < 500; ++i) {
        const Rational a = gen.small_rational();
        const Rational b = gen.small_rational();
        const Rational c = gen.nonzero_rational();
        CHECK((a + b) - b == a);
        CHECK((a * c) / c == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}
