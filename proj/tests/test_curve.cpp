#include <catch2/catch_amalgamated.hpp>

#include "schurtau/curve.hpp"

using namespace schurtau;

namespace {

CurveModel weierstrass(Rational a, Rational b) {
    // y^2 = x^3 + a x + b
    return CurveModel(2, 3, {{{1, 0}, a}, {{0, 0}, b}});
}

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(CurveModel(2, 4, {}), std::invalid_argument);
    CHECK_THROWS_AS(CurveModel(3, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(CurveModel(2, 3, {{{3, 0}, Rational(1)}}), std::invalid_argument);  // 2*3 >= 6
    CHECK_THROWS_AS(CurveModel(2, 5, {{{0, 2}, Rational(1)}}), std::invalid_argument);  // j > n-1
    CHECK(CurveModel(2, 5, {{{2, 1}, Rational(1)}}).genus() == 2);  // 2*2+5*1 = 9 < 10
}

TEST_CASE("monomial orders") {
    CurveModel c34(3, 4, {});
    CHECK(c34.ord_monomial(2, 1) == 10);
    CHECK(c34.ord_monomial(0, 0) == 0);
    CHECK(CurveModel(2, 5, {}).ord_monomial(0, 1) == 5);
    CHECK_THROWS_AS(c34.ord_monomial(0, 3), std::invalid_argument);
}

TEST_CASE("phi basis") {
    CurveModel c34(3, 4, {});
    auto phis = c34.phi_basis(6);
    std::vector<CurveModel::Index> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(phis == expected);  // orders 0,3,4,6,7,8
    CurveModel c25(2, 5, {});
    auto phis25 = c25.phi_basis(4);
    std::vector<CurveModel::Index> expected25 = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    CHECK(phis25 == expected25);  // orders 0,2,4,5
    CHECK(phis25[0] == CurveModel::Index{0, 0});
}

TEST_CASE("gap sequence of a curve") {
    CHECK(CurveModel(2, 5, {}).gap_sequence_of().gaps() == std::vector<int>{1, 3});
    CHECK(CurveModel(3, 4, {}).gap_sequence_of().gaps() == std::vector<int>{1, 2, 5});
    CHECK(CurveModel(2, 3, {}).gap_sequence_of().gaps() == std::vector<int>{1});
    // phi orders are exactly the nongaps, in order.
    for (auto [n, s] : {std::pair{2, 5}, {3, 4}, {3, 5}}) {
        CurveModel c(n, s, {});
        GapSequence G = c.gap_sequence_of();
        auto phis = c.phi_basis(8);
        for (int i = 1; i <= 8; ++i) CHECK(c.ord_monomial(phis[i - 1].first, phis[i - 1].second) == G.nongap(i));
    }
}

TEST_CASE("trivial curve expands exactly") {
    CurveModel c(2, 5, {});
    PuiseuxData p = c.expand_y(12);
    CHECK(p.x == TruncatedSeries::monomial(Rational(1), -2));
    CHECK(p.y.valuation() == -5);
    CHECK(p.y.leading_coefficient() == Rational(1));
    CHECK(p.y.coefficients().size() == 1);  // y = z^-5, nothing else
}

TEST_CASE("weierstrass cubic matches the binomial series oracle") {
    // z^3 y = (1 + a z^4 + b z^6)^{1/2}; binomial expansion with exponent 1/2.
    Rational a(3, 2), b(-2, 1);
    CurveModel c = weierstrass(a, b);
    PuiseuxData p = c.expand_y(10);
    TruncatedSeries w = p.y.shifted(3);
    // (1+u)^{1/2} = sum binom(1/2, m) u^m with u = a z^4 + b z^6.
    TruncatedSeries u(13);
    u.set_coefficient(4, a);
    u.set_coefficient(6, b);
    TruncatedSeries expect = TruncatedSeries::constant(Rational(1), 13);
    TruncatedSeries upow = TruncatedSeries::constant(Rational(1), 13);
    Rational binom(1);
    for (int m = 1; 4 * m < 13; ++m) {
        upow = upow * u;
        binom *= (Rational(1, 2) - Rational(m - 1)) / Rational(m);
        expect = expect + binom * upow;
    }
    for (int e = 0; e < 13; ++e) CHECK(w.coefficient(e) == expect.coefficient(e));
    CHECK(w.coefficient(4) == a * Rational(1, 2));
    CHECK(w.coefficient(6) == b * Rational(1, 2));
    CHECK(w.coefficient(8) == -(a * a) * Rational(1, 8));
}

TEST_CASE("residual vanishes for random curves") {
    for (auto [n, s] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            CurveModel c = CurveModel::random(n, s, seed);
            PuiseuxData p = c.expand_y(16);
            TruncatedSeries r = c.residual(p);
            CHECK(r.precision() >= 16 + s);
            CHECK(r.is_zero_so_far());
        }
    }
}

TEST_CASE("differentials have valuation w_i - 1 and unit leading coefficient") {
    for (auto [n, s] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
        for (std::uint64_t seed : {5ull, 6ull}) {
            CurveModel c = CurveModel::random(n, s, seed);
            GapSequence G = c.gap_sequence_of();
            PuiseuxData p = c.expand_y(16);
            auto dus = c.differentials(p);
            REQUIRE(dus.size() == static_cast<std::size_t>(c.genus()));
            for (int i = 1; i <= c.genus(); ++i) {
                REQUIRE(dus[i - 1].valuation().has_value());
                CHECK(*dus[i - 1].valuation() == G.gap(i) - 1);
                CHECK(dus[i - 1].leading_coefficient() == Rational(1));
            }
        }
    }
}

TEST_CASE("trivial (2,3) differential is 1 + O(z)") {
    CurveModel c(2, 3, {});
    PuiseuxData p = c.expand_y(8);
    auto dus = c.differentials(p);
    REQUIRE(dus.size() == 1);
    CHECK(*dus[0].valuation() == 0);
    CHECK(dus[0].leading_coefficient() == Rational(1));
}

TEST_CASE("doubling precision reproduces the truncation") {
    CurveModel c = CurveModel::random(3, 5, 9);
    PuiseuxData lo = c.expand_y(10);
    PuiseuxData hi = c.expand_y(20);
    for (int e = -5; e < 10; ++e) CHECK(lo.y.coefficient(e) == hi.y.coefficient(e));
}

TEST_CASE("insufficient precision is reported") {
    CurveModel c = CurveModel::random(2, 7, 1);  // max gap 5
    PuiseuxData p = c.expand_y(3);
    CHECK_THROWS_AS(c.differentials(p), std::invalid_argument);
}
