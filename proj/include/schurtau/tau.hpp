#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurtau/gap_sequence.hpp"
#include "schurtau/partition.hpp"
#include "schurtau/prng.hpp"
#include "schurtau/schur.hpp"
#include "schurtau/theorems.hpp"

namespace schurtau {

/// A polynomial together with the total x-degree through which it is exact.
/// Coefficients of higher degree may be missing truncated-series content.
struct ValuedPolynomial {
    Polynomial value;
    int validity = 0;

    Polynomial valid_part() const { return value.truncate_total_degree(validity); }
};

/// Finite rational combination sum c_mu s_mu(t), complete through weight
/// `cutoff`: every mu with |mu| <= cutoff that belongs to the underlying
/// series is present.
struct SchurSeries {
    std::map<Partition, Rational> terms;
    int cutoff = 0;
};

/// Truncated tau series s_lambda + sum_{lambda < mu} xi_mu s_mu modulo
/// weight > cutoff.
class TauSeries {
public:
    TauSeries(Partition base, int cutoff) : base_(std::move(base)), cutoff_(cutoff) {
        if (cutoff_ < base_.weight())
            throw std::invalid_argument("TauSeries: cutoff below the base weight");
    }

    /// The bare Schur function: every xi_mu = 0.
    static TauSeries pure(Partition base, int cutoff) { return TauSeries(std::move(base), cutoff); }

    /// Deterministic-from-seed coefficients: every mu above the base up to
    /// the cutoff gets a small nonzero rational.
    static TauSeries random(Partition base, int cutoff, std::uint64_t seed) {
        TauSeries tau(std::move(base), cutoff);
        Prng rng(seed);
        for (const auto& mu : enumerate_above(tau.base_, cutoff)) {
            long num = rng.range(0, 9);
            num = num < 5 ? num - 5 : num - 4;  // {-5..-1, 1..5}
            long den = rng.range(1, 4);
            tau.coefficients_.emplace(mu, Rational(num, den));
        }
        return tau;
    }

    const Partition& base() const { return base_; }
    int cutoff() const { return cutoff_; }
    const std::map<Partition, Rational>& coefficients() const { return coefficients_; }

    void set_coefficient(const Partition& mu, Rational xi) {
        if (!contains(base_, mu) || mu == base_)
            throw std::invalid_argument("TauSeries: mu must strictly contain the base");
        if (mu.weight() > cutoff_) throw std::invalid_argument("TauSeries: mu beyond the cutoff");
        if (xi.is_zero())
            coefficients_.erase(mu);
        else
            coefficients_[mu] = std::move(xi);
    }

    SchurSeries combination() const {
        SchurSeries s;
        s.cutoff = cutoff_;
        s.terms.emplace(base_, Rational(1));
        for (const auto& [mu, xi] : coefficients_) s.terms.emplace(mu, xi);
        return s;
    }

private:
    Partition base_;
    std::map<Partition, Rational> coefficients_;
    int cutoff_;
};

/// tau^(k): keep the mu that agree with the base beyond row k, truncated to
/// their first k rows. Complete through weight cutoff - N_{lambda,k}.
inline SchurSeries tau_k(const TauSeries& tau, int k) {
    const Partition& lambda = tau.base();
    if (k < 0 || k > lambda.length()) throw std::out_of_range("tau_k: k out of range");
    SchurSeries s;
    s.cutoff = tau.cutoff() - lambda.n_tail(k);
    if (k == 0) {  // tau^(0) = 1
        s.terms.emplace(Partition{}, Rational(1));
        return s;
    }
    s.terms.emplace(lambda.prefix(k), Rational(1));
    for (const auto& [mu, xi] : tau.coefficients()) {
        bool tail_fixed = true;
        for (int i = k + 1; i <= std::max(mu.length(), lambda.length()); ++i) {
            if (mu.part(i) != lambda.part(i)) {
                tail_fixed = false;
                break;
            }
        }
        if (!tail_fixed) continue;
        auto [it, fresh] = s.terms.try_emplace(mu.prefix(k), xi);
        if (!fresh) it->second += xi;
    }
    return s;
}

/// tau_2: hook projection over the mu of shape (mu_1, lambda_2..lambda_l,
/// 1^{l'-l}). Complete through weight cutoff - N'_{lambda,1}.
inline SchurSeries tau_2(const TauSeries& tau) {
    const Partition& lambda = tau.base();
    if (lambda.empty()) throw std::invalid_argument("tau_2: empty base");
    int l = lambda.length();
    SchurSeries s;
    s.cutoff = tau.cutoff() - lambda.n_prime();
    s.terms.emplace(lambda.hook_of(l), Rational(1));
    for (const auto& [mu, xi] : tau.coefficients()) {
        int lp = mu.length();
        if (lp < l) continue;
        bool qualifies = true;
        for (int i = 2; i <= l && qualifies; ++i) qualifies = mu.part(i) == lambda.part(i);
        for (int i = l + 1; i <= lp && qualifies; ++i) qualifies = mu.part(i) == 1;
        if (!qualifies) continue;
        auto [it, fresh] = s.terms.try_emplace(mu.hook_of(lp), xi);
        if (!fresh) it->second += xi;
    }
    return s;
}

/// Evaluate d^alpha of a Schur combination at the given points. Exact for
/// total x-degree <= cutoff - wt(alpha); the result carries that validity.
inline ValuedPolynomial tau_eval(const SchurSeries& series, const DerivationIndex& alpha,
                                 const std::vector<SignedPoint>& points) {
    ValuedPolynomial out;
    out.validity = series.cutoff - alpha.weight();
    for (const auto& [mu, c] : series.terms) out.value += c * schur_eval(mu, alpha, points);
    return out;
}

inline ValuedPolynomial tau_eval(const TauSeries& tau, const DerivationIndex& alpha,
                                 const std::vector<SignedPoint>& points) {
    return tau_eval(tau.combination(), alpha, points);
}

// ---------------------------------------------------------------------------
// Section-3 identity checks. All comparisons are made within the validity
// degree that the truncation supports.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string tau_inputs(const TauSeries& tau, const std::string& extra = "") {
    std::string s = "base=" + tau.base().str() + " cutoff=" + std::to_string(tau.cutoff());
    if (!extra.empty()) s += " " + extra;
    return s;
}

}  // namespace detail

/// Prop 3.1: derivatives of weight < N_{lambda,k} kill tau at k points.
inline CheckResult check_prop_3_1(const TauSeries& tau, int k) {
    std::string inputs = detail::tau_inputs(tau, "k=" + std::to_string(k));
    const Partition& lambda = tau.base();
    auto points = symbolic_points(k);
    for (int w = 0; w < lambda.n_tail(k); ++w) {
        for (const auto& alpha : derivations_of_weight(w)) {
            ValuedPolynomial v = tau_eval(tau, alpha, points);
            if (!v.valid_part().is_zero())
                return CheckResult::fail("prop-3-1", inputs, v.valid_part().str(),
                                         "nonzero at alpha=" + alpha.str());
        }
    }
    return CheckResult::pass("prop-3-1", inputs);
}

/// Thm 3.1 (i): the a^(k)-derivative of tau at k points is c_k tau^(k).
inline CheckResult check_thm_3_1_i(const TauSeries& tau, const GapSequence& G, int k) {
    std::string inputs = detail::tau_inputs(tau, "G=" + G.str() + " k=" + std::to_string(k));
    DerivationIndex alpha = DerivationIndex::from_indices(G.a_sequence(k).entries);
    auto points = symbolic_points(k);
    ValuedPolynomial lhs = tau_eval(tau, alpha, points);
    ValuedPolynomial rhs = tau_eval(tau_k(tau, k), {}, points);
    int validity = std::min(lhs.validity, rhs.validity);
    Polynomial diff = (lhs.value - Rational(G.c_k_sign(k)) * rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail("thm-3-1-i", inputs, diff.str());
    CheckResult r = CheckResult::pass("thm-3-1-i", inputs);
    r.constant_found = Rational(G.c_k_sign(k)).str();
    return r;
}

/// Thm 3.1 (ii): tau^(k) at k points starts at x_k^{lambda_k} with
/// coefficient tau^(k-1) at k-1 points.
inline CheckResult check_thm_3_1_ii(const TauSeries& tau, int k) {
    std::string inputs = detail::tau_inputs(tau, "k=" + std::to_string(k));
    const Partition& lambda = tau.base();
    if (k < 1 || k > lambda.length()) throw std::out_of_range("check_thm_3_1_ii: k out of range");
    ValuedPolynomial lhs = tau_eval(tau_k(tau, k), {}, symbolic_points(k));
    auto coeffs = lhs.valid_part().collect(xvar(k));
    for (const auto& [e, c] : coeffs) {
        if (e < lambda.part(k) && !c.is_zero())
            return CheckResult::fail("thm-3-1-ii", inputs, c.str(),
                                     "nonzero below x_k^" + std::to_string(lambda.part(k)));
    }
    Polynomial lead;
    if (auto it = coeffs.find(lambda.part(k)); it != coeffs.end()) lead = it->second;
    ValuedPolynomial rhs = tau_eval(tau_k(tau, k - 1), {}, symbolic_points(k - 1));
    int validity = std::min(lhs.validity - lambda.part(k), rhs.validity);
    Polynomial diff =
        (lead - rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail("thm-3-1-ii", inputs, diff.str());
    return CheckResult::pass("thm-3-1-ii", inputs);
}

namespace detail {

/// Shared body of Cor 3.1 / Cor 3.2: D_k tau at k points expands in x_k as
/// ratio * (D_{k-1} tau at k-1 points) x_k^{lambda_k} + O(x_k^{lambda_k+1}).
inline CheckResult check_two_point_recursion(std::string theorem, std::string inputs,
                                             const TauSeries& tau, int k,
                                             const DerivationIndex& alpha_k,
                                             const DerivationIndex& alpha_km1,
                                             const Rational& ratio) {
    const Partition& lambda = tau.base();
    ValuedPolynomial lhs = tau_eval(tau, alpha_k, symbolic_points(k));
    auto coeffs = lhs.valid_part().collect(xvar(k));
    for (const auto& [e, c] : coeffs) {
        if (e < lambda.part(k) && !c.is_zero())
            return CheckResult::fail(std::move(theorem), std::move(inputs), c.str(),
                                     "nonzero below x_k^" + std::to_string(lambda.part(k)));
    }
    Polynomial lead;
    if (auto it = coeffs.find(lambda.part(k)); it != coeffs.end()) lead = it->second;
    ValuedPolynomial rhs = tau_eval(tau, alpha_km1, symbolic_points(k - 1));
    int validity = std::min(lhs.validity - lambda.part(k), rhs.validity);
    Polynomial diff = (lead - ratio * rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail(std::move(theorem), std::move(inputs), diff.str());
    CheckResult r = CheckResult::pass(std::move(theorem), std::move(inputs));
    r.constant_found = ratio.str();
    return r;
}

}  // namespace detail

/// Cor 3.1: the recursion between consecutive a^(k)-derivatives with ratio
/// c_k / c_{k-1}.
inline CheckResult check_cor_3_1(const TauSeries& tau, const GapSequence& G, int k) {
    std::string inputs = detail::tau_inputs(tau, "G=" + G.str() + " k=" + std::to_string(k));
    if (k < 1 || k > G.genus()) throw std::out_of_range("check_cor_3_1: k out of range");
    Rational ratio = Rational(G.c_k_sign(k)) / Rational(G.c_k_sign(k - 1));
    return detail::check_two_point_recursion(
        "cor-3-1", inputs, tau, k, DerivationIndex::from_indices(G.a_sequence(k).entries),
        DerivationIndex::from_indices(G.a_sequence(k - 1).entries), ratio);
}

/// Thm 3.2: d_1^{N_{lambda,k}} tau at k points equals c'_{lambda,k} tau^(k).
inline CheckResult check_thm_3_2(const TauSeries& tau, int k) {
    std::string inputs = detail::tau_inputs(tau, "k=" + std::to_string(k));
    const Partition& lambda = tau.base();
    if (k < 0 || k > lambda.length()) throw std::out_of_range("check_thm_3_2: k out of range");
    auto points = symbolic_points(k);
    ValuedPolynomial lhs = tau_eval(tau, DerivationIndex::single(1, lambda.n_tail(k)), points);
    ValuedPolynomial rhs = tau_eval(tau_k(tau, k), {}, points);
    int validity = std::min(lhs.validity, rhs.validity);
    Rational c = c_prime(lambda, k);
    Polynomial diff = (lhs.value - c * rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail("thm-3-2", inputs, diff.str());
    CheckResult r = CheckResult::pass("thm-3-2", inputs);
    r.constant_found = c.str();
    return r;
}

/// Cor 3.2: the d_1 recursion with ratio c'_{lambda,k} / c'_{lambda,k-1}.
inline CheckResult check_cor_3_2(const TauSeries& tau, int k) {
    std::string inputs = detail::tau_inputs(tau, "k=" + std::to_string(k));
    const Partition& lambda = tau.base();
    if (k < 1 || k > lambda.length()) throw std::out_of_range("check_cor_3_2: k out of range");
    Rational ratio = c_prime(lambda, k) / c_prime(lambda, k - 1);
    return detail::check_two_point_recursion("cor-3-2", inputs, tau, k,
                                             DerivationIndex::single(1, lambda.n_tail(k)),
                                             DerivationIndex::single(1, lambda.n_tail(k - 1)), ratio);
}

/// Thm 3.3 (i): d_1^n tau([x_1]-[x_2]) = 0 for n < N'_{lambda,1}.
inline CheckResult check_thm_3_3_i(const TauSeries& tau) {
    std::string inputs = detail::tau_inputs(tau);
    auto pts = difference_points();
    for (int n = 0; n < tau.base().n_prime(); ++n) {
        ValuedPolynomial v = tau_eval(tau, DerivationIndex::single(1, n), pts);
        if (!v.valid_part().is_zero())
            return CheckResult::fail("thm-3-3-i", inputs, v.valid_part().str(),
                                     "nonzero at order " + std::to_string(n));
    }
    return CheckResult::pass("thm-3-3-i", inputs);
}

/// Thm 3.3 (ii): d_1^{N'_{lambda,1}} tau([x_1]-[x_2]) = c_lambda tau_2.
inline CheckResult check_thm_3_3_ii(const TauSeries& tau) {
    std::string inputs = detail::tau_inputs(tau);
    auto pts = difference_points();
    ValuedPolynomial lhs = tau_eval(tau, DerivationIndex::single(1, tau.base().n_prime()), pts);
    ValuedPolynomial rhs = tau_eval(tau_2(tau), {}, pts);
    int validity = std::min(lhs.validity, rhs.validity);
    Rational c = c_lambda(tau.base());
    Polynomial diff = (lhs.value - c * rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail("thm-3-3-ii", inputs, diff.str());
    CheckResult r = CheckResult::pass("thm-3-3-ii", inputs);
    r.constant_found = c.str();
    return r;
}

/// Thm 3.3 (iv): tau_2([x_1]-[x_2]) = (-1)^{l-1} tau^(1)([x_1]) x_2^{l-1} +
/// O(x_2^l).
inline CheckResult check_thm_3_3_iv(const TauSeries& tau) {
    std::string inputs = detail::tau_inputs(tau);
    const Partition& lambda = tau.base();
    int l = lambda.length();
    ValuedPolynomial lhs = tau_eval(tau_2(tau), {}, difference_points());
    auto coeffs = lhs.valid_part().collect(xvar(2));
    for (const auto& [e, c] : coeffs) {
        if (e < l - 1 && !c.is_zero())
            return CheckResult::fail("thm-3-3-iv", inputs, c.str(),
                                     "nonzero below x_2^" + std::to_string(l - 1));
    }
    Polynomial lead;
    if (auto it = coeffs.find(l - 1); it != coeffs.end()) lead = it->second;
    ValuedPolynomial rhs = tau_eval(tau_k(tau, 1), {}, symbolic_points(1));
    int validity = std::min(lhs.validity - (l - 1), rhs.validity);
    Rational sign((l - 1) % 2 == 0 ? 1 : -1);
    Polynomial diff = (lead - sign * rhs.value).truncate_total_degree(validity);
    if (!diff.is_zero()) return CheckResult::fail("thm-3-3-iv", inputs, diff.str());
    return CheckResult::pass("thm-3-3-iv", inputs);
}

/// Thm 3.3 (iii) states the leading sign of tau_2([x_1]-[x_2]) as
/// (-1)^{lambda_1 - 1}, while (iv) together with the hook formula forces
/// (-1)^{l-1}. The check verifies the (iv)-consistent leading term and
/// flags the cases where the stated (iii) sign disagrees.
inline CheckResult check_thm_3_3_iii(const TauSeries& tau) {
    std::string inputs = detail::tau_inputs(tau);
    const Partition& lambda = tau.base();
    int l = lambda.length(), l1 = lambda.part(1);
    ValuedPolynomial lhs = tau_eval(tau_2(tau), {}, difference_points());
    int lead_degree = l1 + l - 1;
    if (lhs.validity < lead_degree)
        return CheckResult::fail("thm-3-3-iii", inputs, "", "cutoff too small to see the leading term");
    Polynomial low = lhs.value.truncate_total_degree(lead_degree);
    Polynomial x1 = Polynomial::variable(xvar(1)), x2 = Polynomial::variable(xvar(2));
    Polynomial base = x1.pow(l1 - 1) * x2.pow(l - 1) * (x1 - x2);
    Rational iv_sign((l - 1) % 2 == 0 ? 1 : -1);
    Rational iii_sign((l1 - 1) % 2 == 0 ? 1 : -1);
    if (low != iv_sign * base)
        return CheckResult::fail("thm-3-3-iii", inputs, (low - iv_sign * base).str(),
                                 "leading term mismatch");
    CheckResult r = CheckResult::pass("thm-3-3-iii", inputs);
    r.constant_found = iv_sign.str();
    if (iii_sign != iv_sign) {
        r.flagged = true;
        r.note = "stated sign (-1)^(lambda_1-1) = " + iii_sign.str() +
                 " disagrees with the verified leading sign " + iv_sign.str();
    }
    return r;
}

/// With every xi_mu = 0 the tau evaluation path must reproduce the direct
/// Schur evaluation bit for bit.
inline CheckResult check_degenerate_tau(const GapSequence& G, int cutoff) {
    Partition lambda = G.partition_of();
    TauSeries tau = TauSeries::pure(lambda, cutoff);
    std::string inputs = "G=" + G.str() + " cutoff=" + std::to_string(cutoff);
    for (int k = 0; k <= std::min(G.genus(), 3); ++k) {
        auto points = symbolic_points(k);
        DerivationIndex a = DerivationIndex::from_indices(G.a_sequence(k).entries);
        if (tau_eval(tau, a, points).value.str() != schur_eval(lambda, a, points).str())
            return CheckResult::fail("tau-degenerate", inputs, "",
                                     "a^(k)-derivative mismatch at k=" + std::to_string(k));
        DerivationIndex d1 = DerivationIndex::single(1, lambda.n_tail(k));
        if (tau_eval(tau, d1, points).value.str() != schur_eval(lambda, d1, points).str())
            return CheckResult::fail("tau-degenerate", inputs, "",
                                     "d_1 derivative mismatch at k=" + std::to_string(k));
    }
    DerivationIndex dn = DerivationIndex::single(1, lambda.n_prime());
    if (tau_eval(tau, dn, difference_points()).value.str() !=
        schur_eval(lambda, dn, difference_points()).str())
        return CheckResult::fail("tau-degenerate", inputs, "", "difference-point mismatch");
    return CheckResult::pass("tau-degenerate", inputs);
}

}  // namespace schurtau
