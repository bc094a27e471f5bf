#include <catch2/catch_amalgamated.hpp>

#include "polyode/rational.hpp"

#include <random>

using namespace polyode;

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("rational parse and serialize") {
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse(" 7/14 ") == Rational(1, 2));
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(5).pretty() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 eng(42);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(eng), den(eng)), b(num(eng), den(eng)), c(num(eng), den(eng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("rational sqrt detection") {
    Rational root;
    CHECK(rational_sqrt(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    CHECK(rational_sqrt(Rational(0), root));
    CHECK(root == Rational(0));
    CHECK_FALSE(rational_sqrt(Rational(2), root));
    CHECK_FALSE(rational_sqrt(Rational(-4), root));

    CHECK(equals_times_sqrt(Rational(3), Rational(2), Rational(9, 4)));
    CHECK_FALSE(equals_times_sqrt(Rational(-3), Rational(2), Rational(9, 4)));
    CHECK(equals_times_sqrt(Rational(-3), Rational(-2), Rational(9, 4)));
    CHECK_FALSE(equals_times_sqrt(Rational(1), Rational(1), Rational(2)));
    CHECK(equals_times_sqrt(Rational(0), Rational(0), Rational(-5)));
    CHECK_FALSE(equals_times_sqrt(Rational(1), Rational(1), Rational(-5)));
}
