#include <catch2/catch_amalgamated.hpp>

#include "schurtau/series.hpp"

using namespace schurtau;

namespace {

TruncatedSeries one_plus_z(int prec) {
    TruncatedSeries s(prec);
    s.set_coefficient(0, Rational(1));
    s.set_coefficient(1, Rational(1));
    return s;
}

}  // namespace

TEST_CASE("product preserves precision") {
    TruncatedSeries a = one_plus_z(8);
    TruncatedSeries b(8);
    b.set_coefficient(0, Rational(1));
    b.set_coefficient(1, Rational(-1));
    TruncatedSeries p = a * b;
    CHECK(p.precision() == 8);
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(p.coefficient(1) == Rational(0));
    CHECK(p.coefficient(2) == Rational(-1));
}

TEST_CASE("inverse of 1 + z matches the geometric series") {
    // Independent oracle: the alternating geometric series.
    TruncatedSeries inv = one_plus_z(10).invert();
    CHECK(inv.precision() == 10);
    for (int e = 0; e < 10; ++e) CHECK(inv.coefficient(e) == Rational(e % 2 == 0 ? 1 : -1));
}

TEST_CASE("Laurent monomials invert exactly") {
    TruncatedSeries zm3 = TruncatedSeries::monomial(Rational(1), -3);
    TruncatedSeries z3 = TruncatedSeries::monomial(Rational(1), 3);
    TruncatedSeries p = zm3 * z3;
    CHECK(p.is_exact());
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(zm3.invert() == z3);
}

TEST_CASE("inverting a zero-leading series fails") {
    CHECK_THROWS_AS(TruncatedSeries::zero(6).invert(), std::domain_error);
    CHECK_THROWS_AS((one_plus_z(6) * TruncatedSeries::zero(2)).invert(), std::domain_error);
    CHECK_THROWS_AS(one_plus_z(TruncatedSeries::kExact).invert(), std::domain_error);
}

TEST_CASE("invert then multiply is one modulo precision") {
    for (int val : {-2, 0, 3}) {
        TruncatedSeries s(10 + val);
        s.set_coefficient(val, Rational(2));
        s.set_coefficient(val + 1, Rational(1, 3));
        s.set_coefficient(val + 4, Rational(-5));
        TruncatedSeries prod = s * s.invert();
        REQUIRE(prod.coefficient(0) == Rational(1));
        int checked = 0;
        for (const auto& [e, c] : prod.coefficients()) {
            if (e != 0) {
                CHECK(c == Rational(0));
            }
            ++checked;
        }
        CHECK(checked >= 1);
    }
}

TEST_CASE("precision propagates through valuations") {
    TruncatedSeries a(5);  // a = O(z^5) unknown beyond
    a.set_coefficient(2, Rational(1));
    TruncatedSeries b = TruncatedSeries::monomial(Rational(1), -2);
    CHECK((a * b).precision() == 3);
    CHECK((a + b).precision() == 5);
}

TEST_CASE("rendering") {
    TruncatedSeries s(5);
    s.set_coefficient(-3, Rational(1));
    s.set_coefficient(1, Rational(1, 2));
    CHECK(s.str() == "z^-3 + 1/2*z + O(z^5)");
    CHECK(TruncatedSeries::zero(4).str() == "O(z^4)");
    CHECK(TruncatedSeries::zero().str() == "0");
    CHECK(TruncatedSeries::monomial(Rational(-1), 2).str() == "-z^2");
}
