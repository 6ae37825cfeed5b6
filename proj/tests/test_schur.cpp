#include <catch2/catch_amalgamated.hpp>

#include "schurtau/schur.hpp"

using namespace schurtau;

namespace {

Polynomial t(int i) { return Polynomial::variable(tvar(i)); }
Polynomial x(int i) { return Polynomial::variable(xvar(i)); }

/// Independent oracle for the generating polynomials: expand
/// exp(sum_{n=1}^N t_n k^n) modulo k^{N+1} by brute force.
std::vector<Polynomial> exp_expansion(int N) {
    std::vector<Polynomial> arg(N + 1);  // coefficient of k^n
    for (int n = 1; n <= N; ++n) arg[n] = t(n);
    std::vector<Polynomial> result(N + 1), power(N + 1);
    result[0] = Polynomial(1);
    power[0] = Polynomial(1);
    Rational mfact(1);
    for (int m = 1; m <= N; ++m) {
        std::vector<Polynomial> next(N + 1);
        for (int a = 0; a <= N; ++a) {
            if (power[a].is_zero()) continue;
            for (int b = 1; a + b <= N; ++b) next[a + b] += power[a] * arg[b];
        }
        power = std::move(next);
        mfact *= Rational(m);
        Rational inv = Rational(1) / mfact;
        for (int n = 0; n <= N; ++n) result[n] += inv * power[n];
    }
    return result;
}

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace

TEST_CASE("p polynomials: first values") {
    CHECK(p_poly(0) == Polynomial(1));
    CHECK(p_poly(1) == t(1));
    CHECK(p_poly(2) == Rational(1, 2) * t(1).pow(2) + t(2));
    CHECK(p_poly(3) == Rational(1, 6) * t(1).pow(3) + t(1) * t(2) + t(3));
    CHECK(p_poly(-1).is_zero());
    CHECK(p_list(3).size() == 4);
}

TEST_CASE("p polynomials match the exponential expansion oracle") {
    auto oracle = exp_expansion(9);
    for (int n = 0; n <= 9; ++n) CHECK(p_poly(n) == oracle[n]);
}

TEST_CASE("brackets") {
    CHECK(bracket({1, 0}) == Polynomial(1));
    CHECK(bracket({0, 1}) == Polynomial(-1));
    CHECK(bracket({2, 0}) == t(1));
    CHECK(bracket({3, 1, 1}).is_zero());
    CHECK(bracket({3, -1}).is_zero());
    CHECK(bracket({5, 2, 0}) == -bracket({2, 5, 0}));
}

TEST_CASE("schur polynomials in t") {
    CHECK(schur_t(Partition{}) == Polynomial(1));
    CHECK(schur_t(Partition({1})) == t(1));
    CHECK(schur_t(Partition({2, 1})) == Rational(1, 3) * t(1).pow(3) - t(3));
    CHECK(schur_t(Partition({2, 1})).str() == "1/3*t1^3 - t3");
}

TEST_CASE("schur_t equals the bracket of its w-sequence") {
    for (const auto& lam : partitions_up_to_weight(7)) {
        if (lam.empty()) continue;
        CHECK(schur_t(lam) == bracket(lam.w_sequence(lam.length())));
    }
}

TEST_CASE("schur polynomials in x") {
    CHECK(schur_x(Partition({1}), 2) == x(1) + x(2));
    CHECK(schur_x(Partition({2, 1}), 2) == x(1).pow(2) * x(2) + x(1) * x(2).pow(2));
    CHECK(schur_x(Partition{}, 3) == Polynomial(1));
    CHECK_THROWS_AS(schur_x(Partition({2, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("abel substitution") {
    Polynomial s21 = schur_t(Partition({2, 1}));
    CHECK(abel_subs(s21, symbolic_points(2)) == schur_x(Partition({2, 1}), 2));
    CHECK(abel_subs(s21, symbolic_points(1)).is_zero());
    Polynomial expected = -(x(1) * x(2) * (x(1) - x(2)));
    CHECK(abel_subs(s21, difference_points()) == expected);
    CHECK(abel_subs(s21, {}).is_zero());  // evaluation at t = 0
}

TEST_CASE("abel substitution with numeric points") {
    CHECK(abel_subs(t(1), {SignedPoint::numeric(1, Rational(3, 2))}) == Polynomial(Rational(3, 2)));
    // s_1 at [x_1] - [3/2] = x_1 - 3/2
    Polynomial v = abel_subs(t(1), {SignedPoint::symbolic(1, 1), SignedPoint::numeric(-1, Rational(3, 2))});
    CHECK(v == x(1) - Polynomial(Rational(3, 2)));
    CHECK_THROWS_AS(abel_subs(x(1), symbolic_points(1)), std::invalid_argument);
}

TEST_CASE("jacobi-trudi matches bialternant for small partitions") {
    for (const auto& lam : partitions_up_to_weight(6)) {
        for (int k = lam.length(); k <= std::min(4, lam.length() + 2); ++k) {
            CHECK(abel_subs(schur_t(lam), symbolic_points(k)) == schur_x(lam, k));
        }
    }
}

TEST_CASE("derivatives of schur polynomials") {
    CHECK(derive(schur_t(Partition({2, 2, 1})), DerivationIndex::single(1)) ==
          schur_t(Partition({2, 1, 1})) + schur_t(Partition({2, 2})));
    CHECK(derive(schur_t(Partition({2, 1})), DerivationIndex::single(3)) == Polynomial(-1));
    CHECK(derive(schur_t(Partition({2, 1})), DerivationIndex::single(2)).is_zero());
    CHECK(derive_schur(Partition({2, 2, 1}), DerivationIndex::single(1)) ==
          derive(schur_t(Partition({2, 2, 1})), DerivationIndex::single(1)));
}

TEST_CASE("derivation indices") {
    DerivationIndex a = DerivationIndex::from_indices({3, 1, 1});
    CHECK(a.weight() == 5);
    CHECK(a.str() == "d1^2d3");
    CHECK(DerivationIndex{}.weight() == 0);
    CHECK(derivations_of_weight(4).size() == 5);
    CHECK_THROWS_AS(DerivationIndex::from_indices({0}), std::invalid_argument);
}

TEST_CASE("weight homogeneity of schur polynomials") {
    for (const auto& lam : partitions_up_to_weight(8))
        CHECK(is_weight_homogeneous(schur_t(lam), lam.weight()));
}

TEST_CASE("bracket skew symmetry on random tuples") {
    Rng rng{2024};
    for (int trial = 0; trial < 30; ++trial) {
        int l = 2 + static_cast<int>(rng.next() % 3);
        std::vector<int> idx(l);
        for (int& v : idx) v = static_cast<int>(rng.next() % 7);
        std::vector<int> swapped = idx;
        std::swap(swapped[0], swapped[l - 1]);
        if (idx[0] == idx[l - 1])
            CHECK(bracket(idx).is_zero());
        else
            CHECK(bracket(idx) == -bracket(swapped));
    }
}
