#include <random>

#include "doctest.h"
#include "sidon/errors.hpp"
#include "sidon/rational.hpp"
#include "test_support.hpp"

using sidon::Rational;
using sidon::testing::q;

TEST_CASE("parse canonicalizes") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-6/3").to_string() == "-2");
    CHECK(Rational::parse("−3/4") == Rational(-3, 4));
    CHECK(Rational::parse("0/7").is_zero());
    CHECK(Rational::parse("12345678901234567890123/1").to_string() == "12345678901234567890123");
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1 ", "+1", "a", "1/-2", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), sidon::ParseError);
    }
}

TEST_CASE("to_string round trips") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational x = sidon::testing::random_rational(rng, 1'000'000, 1'000);
        CHECK(Rational::parse(x.to_string()) == x);
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = sidon::testing::random_rational(rng, 50, 20);
        const Rational b = sidon::testing::random_rational(rng, 50, 20);
        const Rational c = sidon::testing::random_rational(rng, 50, 20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("ordering and powers") {
    CHECK(q("-1/2") < q("-1/3"));
    CHECK(q("1/3") < q("1/2"));
    CHECK(sidon::power(Rational(2), -3) == q("1/8"));
    CHECK(sidon::power(q("2/3"), 2) == q("4/9"));
    CHECK(sidon::power(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(sidon::power(Rational(0), -1), sidon::DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), sidon::DomainError);
}
