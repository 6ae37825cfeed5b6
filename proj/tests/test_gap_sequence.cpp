#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "schurtau/gap_sequence.hpp"

using namespace schurtau;

TEST_CASE("validation") {
    CHECK(GapSequence::from_gaps({1, 2, 3, 7}).genus() == 4);
    CHECK(GapSequence::from_gaps({1, 3}).genus() == 2);
    CHECK_THROWS_WITH(GapSequence::from_gaps({2, 3}),
                      Catch::Matchers::ContainsSubstring("1 and 1 are nongaps but 2 is a gap"));
    CHECK_THROWS_AS(GapSequence::from_gaps({}), std::invalid_argument);
    CHECK_THROWS_AS(GapSequence::from_gaps({3, 1}), std::invalid_argument);
    CHECK_THROWS_WITH(GapSequence::from_gaps({1, 4}),
                      Catch::Matchers::ContainsSubstring("2 and 2 are nongaps but 4 is a gap"));
}

TEST_CASE("type (n,s) gap sequences") {
    CHECK(GapSequence::from_ns(2, 5).gaps() == std::vector<int>{1, 3});
    CHECK(GapSequence::from_ns(2, 7).gaps() == std::vector<int>{1, 3, 5});
    CHECK(GapSequence::from_ns(3, 4).gaps() == std::vector<int>{1, 2, 5});
    CHECK(GapSequence::from_ns(3, 4).genus() == 3);
    CHECK_THROWS_AS(GapSequence::from_ns(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(GapSequence::from_ns(1, 5), std::invalid_argument);
}

TEST_CASE("genus formula for coprime pairs up to 9") {
    for (int n = 2; n <= 9; ++n)
        for (int s = n + 1; s <= 9; ++s)
            if (std::gcd(n, s) == 1) CHECK(GapSequence::from_ns(n, s).genus() == (n - 1) * (s - 1) / 2);
}

TEST_CASE("nongaps") {
    GapSequence G = GapSequence::from_gaps({1, 3});
    CHECK(G.nongap(1) == 0);
    CHECK(G.nongap(2) == 2);
    CHECK(GapSequence::from_gaps({1, 2, 3, 7}).nongap(4) == 6);
}

TEST_CASE("partition of a gap sequence") {
    CHECK(GapSequence::from_gaps({1, 3}).partition_of() == Partition({2, 1}));
    CHECK(GapSequence::from_gaps({1, 3, 5}).partition_of() == Partition({3, 2, 1}));
    CHECK(GapSequence::from_gaps({1, 2, 3, 7}).partition_of() == Partition({4, 1, 1, 1}));
}

TEST_CASE("partition of an (n,s) sequence is self-conjugate") {
    for (auto [n, s] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}}) {
        Partition lam = GapSequence::from_ns(n, s).partition_of();
        CHECK(lam.conjugate() == lam);
    }
}

TEST_CASE("a sequences") {
    GapSequence g2 = GapSequence::from_gaps({1, 3});
    CHECK(g2.a_sequence(0).entries == std::vector<int>{3});
    CHECK(g2.a_sequence(1).entries == std::vector<int>{1});
    CHECK(g2.a_sequence(2).entries.empty());
    GapSequence g3 = GapSequence::from_gaps({1, 3, 5});
    CHECK(g3.a_sequence(0).entries == std::vector<int>{5, 1});
    CHECK_THROWS_AS(g2.a_sequence(3), std::out_of_range);
    CHECK_THROWS_AS(g2.a_sequence(-1), std::out_of_range);
}

TEST_CASE("a sequence properties for every gap sequence of genus <= 6") {
    for (int g = 1; g <= 6; ++g) {
        for (const auto& G : enumerate_gap_sequences(g)) {
            Partition lam = G.partition_of();
            REQUIRE(lam.length() == g);
            for (int k = 0; k <= g; ++k) {
                ASequence a = G.a_sequence(k);
                for (std::size_t i = 0; i < a.entries.size(); ++i) {
                    CHECK(G.is_gap(a.entries[i]));
                    if (i > 0) CHECK(a.entries[i] < a.entries[i - 1]);
                }
                CHECK(a.sum() == lam.n_tail(k));
            }
        }
    }
}

TEST_CASE("hyperelliptic a sequences follow the closed form") {
    // Type (2, 2g+1): m_k = floor((g-k+1)/2), a^(k) = (2g-2k-1, 2g-2k-5, ...).
    for (int g = 1; g <= 6; ++g) {
        GapSequence G = GapSequence::from_ns(2, 2 * g + 1);
        for (int k = 0; k < g; ++k) {
            ASequence a = G.a_sequence(k);
            CHECK(a.m() == (g - k + 1) / 2);
            for (int j = 0; j < a.m(); ++j) CHECK(a.entries[j] == 2 * g - 2 * k - 1 - 4 * j);
        }
    }
}

TEST_CASE("counts of gap sequences by genus") {
    // Known census of numerical semigroups by genus.
    std::vector<int> expected = {1, 2, 4, 7, 12, 23};
    for (int g = 1; g <= 6; ++g) CHECK(enumerate_gap_sequences(g).size() == static_cast<size_t>(expected[g - 1]));
}

TEST_CASE("c_k signs") {
    CHECK(GapSequence::from_gaps({1, 3}).c_k_sign(1) == 1);
    CHECK(GapSequence::from_gaps({1, 2, 5}).c_k_sign(1) == -1);
    for (int g = 1; g <= 5; ++g)
        for (const auto& G : enumerate_gap_sequences(g)) CHECK(G.c_k_sign(g) == 1);
}

TEST_CASE("c prime constants") {
    CHECK(c_prime(Partition({1}), 0) == Rational(1));
    CHECK(c_prime(Partition({2, 1}), 0) == Rational(2));
    CHECK(c_prime(Partition({2, 1}), 1) == Rational(1));
    CHECK_THROWS_AS(c_prime(Partition({2, 1}), 3), std::out_of_range);
}

TEST_CASE("c lambda constants") {
    CHECK(c_lambda(Partition({2, 2})) == Rational(1));
    CHECK(c_lambda(Partition({3, 3, 2})) == Rational(2));
    CHECK(c_lambda(Partition({2, 1})) == Rational(1));
    CHECK_THROWS_AS(c_lambda(Partition{}), std::invalid_argument);
}

TEST_CASE("b coefficients") {
    GapSequence G = GapSequence::from_gaps({1, 3});
    CHECK(b_coeff(G, 1, false) == Rational(1));
    CHECK(b_coeff(G, 1, true) == Rational(G.c_k_sign(1)) * c_prime(G.partition_of(), 1).pow(-1));
    CHECK_THROWS_AS(b_coeff(G, 2, true), std::invalid_argument);
    // n = 1 always kills the global sign: exponent g*n*(n-1)/2 = 0.
    for (int g = 1; g <= 4; ++g)
        for (const auto& H : enumerate_gap_sequences(g)) {
            Rational b = b_coeff(H, 1, false);
            CHECK(b.sign() > 0);
        }
}

TEST_CASE("text format") {
    CHECK(GapSequence::from_gaps({1, 3, 5}).str() == "1,3,5");
    CHECK(GapSequence::parse("1,3,5") == GapSequence::from_gaps({1, 3, 5}));
}
