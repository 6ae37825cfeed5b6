#include <catch2/catch_amalgamated.hpp>

#include "schurtau/tau.hpp"

using namespace schurtau;

TEST_CASE("random tau population") {
    TauSeries empty = TauSeries::random(Partition({2, 1}), 3, 7);
    CHECK(empty.coefficients().empty());

    TauSeries two = TauSeries::random(Partition({1}), 2, 7);
    REQUIRE(two.coefficients().size() == 2);
    CHECK(two.coefficients().count(Partition({2})) == 1);
    CHECK(two.coefficients().count(Partition({1, 1})) == 1);
    for (const auto& [mu, xi] : two.coefficients()) CHECK_FALSE(xi.is_zero());

    TauSeries a = TauSeries::random(Partition({2, 1}), 8, 42);
    TauSeries b = TauSeries::random(Partition({2, 1}), 8, 42);
    CHECK(a.coefficients() == b.coefficients());
    TauSeries c = TauSeries::random(Partition({2, 1}), 8, 43);
    CHECK(a.coefficients() != c.coefficients());

    CHECK_THROWS_AS(TauSeries::pure(Partition({2, 1}), 2), std::invalid_argument);
}

TEST_CASE("tau_k projection") {
    Partition lam({2, 1});
    TauSeries pure = TauSeries::pure(lam, 6);
    SchurSeries k1 = tau_k(pure, 1);
    REQUIRE(k1.terms.size() == 1);
    CHECK(k1.terms.begin()->first == Partition({2}));

    TauSeries with31 = TauSeries::pure(lam, 6);
    with31.set_coefficient(Partition({3, 1}), Rational(5, 3));
    SchurSeries k1b = tau_k(with31, 1);
    REQUIRE(k1b.terms.size() == 2);
    CHECK(k1b.terms.at(Partition({3})) == Rational(5, 3));

    TauSeries with22 = TauSeries::pure(lam, 6);
    with22.set_coefficient(Partition({2, 2}), Rational(5, 3));
    SchurSeries k1c = tau_k(with22, 1);
    CHECK(k1c.terms.size() == 1);  // (2,2) dropped: mu_2 != lambda_2

    SchurSeries k0 = tau_k(pure, 0);
    REQUIRE(k0.terms.size() == 1);
    CHECK(k0.terms.begin()->first == Partition{});
    CHECK_THROWS_AS(tau_k(pure, 3), std::out_of_range);
}

TEST_CASE("tau_2 projection") {
    Partition lam({2, 1});
    TauSeries pure = TauSeries::pure(lam, 6);
    SchurSeries h = tau_2(pure);
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms.begin()->first == Partition({2, 1}));

    TauSeries with31 = TauSeries::pure(lam, 6);
    with31.set_coefficient(Partition({3, 1}), Rational(2));
    CHECK(tau_2(with31).terms.size() == 2);

    TauSeries with22 = TauSeries::pure(lam, 6);
    with22.set_coefficient(Partition({2, 2}), Rational(2));
    CHECK(tau_2(with22).terms.size() == 1);  // (2,2) fails mu_2 = lambda_2 = 1

    TauSeries with211 = TauSeries::pure(lam, 6);
    with211.set_coefficient(Partition({2, 1, 1}), Rational(2));
    SchurSeries h2 = tau_2(with211);
    REQUIRE(h2.terms.size() == 2);
    CHECK(h2.terms.at(Partition({2, 1, 1})) == Rational(2));
}

TEST_CASE("tau_eval basics") {
    TauSeries pure = TauSeries::pure(Partition({2, 1}), 8);
    CHECK(tau_eval(pure, {}, symbolic_points(1)).value.is_zero());
    CHECK(tau_eval(pure, {}, {}).value.is_zero());  // s_lambda(0) = 0 for nonempty lambda
    ValuedPolynomial v = tau_eval(pure, DerivationIndex::single(1), symbolic_points(2));
    CHECK(v.validity == 7);
    CHECK(v.value == schur_eval(Partition({2, 1}), DerivationIndex::single(1), symbolic_points(2)));
    TauSeries empty_base = TauSeries::pure(Partition{}, 4);
    CHECK(tau_eval(empty_base, {}, {}).value == Polynomial(1));
}

TEST_CASE("section 3 identities for random taus of small genus") {
    for (int g = 1; g <= 3; ++g) {
        for (const auto& G : enumerate_gap_sequences(g)) {
            Partition lam = G.partition_of();
            int W = lam.weight() + 6;
            for (std::uint64_t seed : {11ull, 12ull}) {
                TauSeries tau = TauSeries::random(lam, W, seed);
                for (int k = 0; k < lam.length(); ++k) CHECK(check_prop_3_1(tau, k).ok);
                for (int k = 0; k <= g; ++k) {
                    CHECK(check_thm_3_1_i(tau, G, k).ok);
                    CHECK(check_thm_3_2(tau, k).ok);
                }
                for (int k = 1; k <= g; ++k) {
                    CHECK(check_thm_3_1_ii(tau, k).ok);
                    CHECK(check_cor_3_1(tau, G, k).ok);
                    CHECK(check_cor_3_2(tau, k).ok);
                }
                CHECK(check_thm_3_3_i(tau).ok);
                CHECK(check_thm_3_3_ii(tau).ok);
                CHECK(check_thm_3_3_iv(tau).ok);
            }
        }
    }
}

TEST_CASE("theorem 3.3 (iii) discrepancy is flagged exactly when the signs differ") {
    GapSequence g12 = GapSequence::from_gaps({1, 2});  // lambda = (1,1): signs +1 vs -1
    TauSeries tau12 = TauSeries::random(g12.partition_of(), 8, 3);
    CheckResult r12 = check_thm_3_3_iii(tau12);
    CHECK(r12.ok);
    CHECK(r12.flagged);
    CHECK(r12.note.find("disagrees") != std::string::npos);

    GapSequence g13 = GapSequence::from_gaps({1, 3});  // lambda = (2,1): both signs -1
    TauSeries tau13 = TauSeries::random(g13.partition_of(), 9, 3);
    CheckResult r13 = check_thm_3_3_iii(tau13);
    CHECK(r13.ok);
    CHECK_FALSE(r13.flagged);
}

TEST_CASE("degenerate tau reproduces the schur path bit-exactly") {
    for (int g = 1; g <= 3; ++g)
        for (const auto& G : enumerate_gap_sequences(g))
            CHECK(check_degenerate_tau(G, G.partition_of().weight() + 6).ok);
}
