#include <catch2/catch_amalgamated.hpp>

#include "schurtau/rational.hpp"

using schurtau::Rational;

namespace {

// Small deterministic generator for property checks.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 41) - 20;
        long den = static_cast<long>(next() % 9) + 1;
        return Rational(num, den);
    }
};

}  // namespace

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing round-trips") {
    CHECK(Rational::parse("2/6") == Rational(1, 3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("field axioms on random values") {
    Rng rng{12345};
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("reduction is idempotent") {
    Rng rng{999};
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational();
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::factorial(0) == Rational(1));
}
