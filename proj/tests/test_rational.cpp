#include <doctest.h>

#include "hitreal/rational.hpp"

using namespace hitreal;

TEST_CASE("rational arithmetic is exact") {
    Rational third(1, 3), sixth(1, 6);
    CHECK(third + sixth == Rational(1, 2));
    CHECK(Rational(10, 4) == Rational(5, 2));
    CHECK(sign_of(Rational(-7, 3)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
    CHECK(rat_abs(Rational(-3, 2)) == Rational(3, 2));
}

TEST_CASE("rational text round trip") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(0)) == "0");

    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational(" -4 / 6 ") == Rational(-2, 3));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(!parse_rational("3/2x").has_value());
    CHECK(!parse_rational("1.5").has_value());
}

TEST_CASE("complex arithmetic is exact") {
    ComplexQ a(Rational(1), Rational(2));
    ComplexQ b(Rational(3), Rational(-1));
    CHECK(a * b == ComplexQ(Rational(5), Rational(5)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == ComplexQ(Rational(1), Rational(-2)));
    CHECK(a + a.conj() == ComplexQ(Rational(2), Rational(0)));
    CHECK(ComplexQ(Rational(3, 2)).is_real());
    CHECK(!a.is_real());
}

TEST_CASE("complex text round trip") {
    CHECK(to_string(ComplexQ(Rational(0), Rational(1))) == "i");
    CHECK(to_string(ComplexQ(Rational(0), Rational(-1))) == "-i");
    CHECK(to_string(ComplexQ(Rational(0), Rational(2))) == "2i");
    CHECK(to_string(ComplexQ(Rational(1), Rational(2))) == "1+2i");
    CHECK(to_string(ComplexQ(Rational(1), Rational(-2))) == "1-2i");
    CHECK(to_string(ComplexQ(Rational(3, 2), Rational(0))) == "3/2");
    CHECK(to_string(ComplexQ(Rational(-1, 2), Rational(1))) == "-1/2+i");

    CHECK(parse_complex("i") == ComplexQ(Rational(0), Rational(1)));
    CHECK(parse_complex("-i") == ComplexQ(Rational(0), Rational(-1)));
    CHECK(parse_complex("3/2") == ComplexQ(Rational(3, 2), Rational(0)));
    CHECK(parse_complex(" 1 + 2i ") == ComplexQ(Rational(1), Rational(2)));
    CHECK(parse_complex("3/2-5/7i") == ComplexQ(Rational(3, 2), Rational(-5, 7)));
    CHECK(!parse_complex("").has_value());
    CHECK(!parse_complex("1+2j").has_value());

    for (const char* s : {"i", "-i", "2i", "1+2i", "1-2i", "3/2", "-1/2+i"}) {
        auto z = parse_complex(s);
        REQUIRE(z.has_value());
        CHECK(to_string(*z) == s);
    }
}

TEST_CASE("projective points distinguish infinity") {
    CHECK(ProjectivePoint::inf() == ProjectivePoint::inf());
    CHECK(!(ProjectivePoint::at(Rational(2)) == ProjectivePoint::inf()));
    CHECK(ProjectivePoint::at(Rational(2)) == ProjectivePoint::at(Rational(2)));
    CHECK(to_string(ProjectivePoint::inf()) == "inf");
    CHECK(to_string(ProjectivePoint::at(Rational(-3, 2))) == "-3/2");
}
