#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schurtau/gap_sequence.hpp"
#include "schurtau/prng.hpp"
#include "schurtau/series.hpp"

namespace schurtau {

/// Formal solution of the curve equation at infinity: x = z^-n exactly and
/// y = z^-s (1 + O(z)) correct modulo z^precision.
struct PuiseuxData {
    TruncatedSeries x;
    TruncatedSeries y;
    int precision = 0;
};

/// Plane (n,s) curve y^n = x^s + sum coeffs_{ij} x^i y^j over the index set
/// ni + sj < ns, 0 <= j <= n-1.
class CurveModel {
public:
    using Index = std::pair<int, int>;

    CurveModel(int n, int s, std::map<Index, Rational> coeffs)
        : n_(n), s_(s), coeffs_(std::move(coeffs)) {
        if (n < 2 || s <= n || std::gcd(n, s) != 1)
            throw std::invalid_argument("CurveModel: needs coprime 2 <= n < s");
        for (const auto& [idx, c] : coeffs_) {
            auto [i, j] = idx;
            if (i < 0 || j < 0 || j > n_ - 1 || n_ * i + s_ * j >= n_ * s_)
                throw std::invalid_argument("CurveModel: coefficient index (" + std::to_string(i) +
                                            "," + std::to_string(j) + ") outside ni+sj < ns, j <= n-1");
        }
    }

    /// One nonzero rational per admissible index, deterministic from seed.
    static CurveModel random(int n, int s, std::uint64_t seed) {
        Prng rng(seed);
        std::map<Index, Rational> coeffs;
        for (int i = 0; n * i < n * s; ++i) {
            for (int j = 0; j <= n - 1; ++j) {
                if (n * i + s * j >= n * s) break;
                long num = rng.range(0, 7);
                num = num < 4 ? num - 4 : num - 3;  // {-4..-1, 1..4}
                coeffs[{i, j}] = Rational(num, rng.range(1, 3));
            }
        }
        return CurveModel(n, s, std::move(coeffs));
    }

    int n() const { return n_; }
    int s() const { return s_; }
    int genus() const { return (n_ - 1) * (s_ - 1) / 2; }
    const std::map<Index, Rational>& coeffs() const { return coeffs_; }

    Rational coefficient(int i, int j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// Pole order at infinity of x^i y^j: ord x = n, ord y = s.
    int ord_monomial(int i, int j) const {
        if (i < 0 || j < 0) throw std::invalid_argument("ord_monomial: negative exponent");
        if (j > n_ - 1) throw std::invalid_argument("ord_monomial: y-exponent must be < n");
        return n_ * i + s_ * j;
    }

    /// First `count` monomials x^i y^j (j < n) by strictly increasing pole
    /// order; the orders are exactly the nongaps.
    std::vector<Index> phi_basis(int count) const {
        if (count < 1) throw std::invalid_argument("phi_basis: count must be >= 1");
        std::vector<std::pair<int, Index>> pool;
        // Orders are distinct since gcd(n,s) = 1; scan a window large enough
        // to contain `count` nongaps.
        int bound = n_ * s_ + count * std::max(n_, s_);
        for (int j = 0; j <= n_ - 1 && s_ * j <= bound; ++j)
            for (int i = 0; n_ * i + s_ * j <= bound; ++i) pool.push_back({n_ * i + s_ * j, {i, j}});
        std::sort(pool.begin(), pool.end());
        if (static_cast<int>(pool.size()) < count) throw std::logic_error("phi_basis: window too small");
        std::vector<Index> out;
        for (int i = 0; i < count; ++i) out.push_back(pool[i].second);
        return out;
    }

    /// Gap sequence at infinity: complement of the phi orders.
    GapSequence gap_sequence_of() const { return GapSequence::from_ns(n_, s_); }

    /// Newton iteration for the unit w = z^s y: w^n = 1 + sum coeffs z^{ns-ni-sj} w^j,
    /// starting from w = 1 with precision doubling. Returns y to precision P.
    PuiseuxData expand_y(int P) const {
        if (P < 1) throw std::invalid_argument("expand_y: P must be >= 1");
        int target = P + s_;  // relative precision of w
        TruncatedSeries w = TruncatedSeries::constant(Rational(1), 1);
        int prec = 1;
        while (prec < target) {
            prec = std::min(2 * prec, target);
            TruncatedSeries cand = with_precision(w, prec);
            TruncatedSeries f = unit_equation(cand);
            TruncatedSeries fp = unit_equation_derivative(cand);
            w = cand - f * fp.invert();
            w = w.truncated(prec);
        }
        PuiseuxData out;
        out.x = TruncatedSeries::monomial(Rational(1), -n_);
        out.y = w.shifted(-s_);
        out.precision = P;
        return out;
    }

    /// f(x,y) = y^n - x^s - sum coeffs x^i y^j on series arguments.
    TruncatedSeries evaluate_f(const TruncatedSeries& x, const TruncatedSeries& y) const {
        std::vector<TruncatedSeries> xp = powers(x, s_), yp = powers(y, n_);
        TruncatedSeries f = yp[n_] - xp[s_];
        for (const auto& [idx, c] : coeffs_) f = f - c * (xp[idx.first] * yp[idx.second]);
        return f;
    }

    /// f_y(x,y) = n y^{n-1} - sum j coeffs x^i y^{j-1}.
    TruncatedSeries evaluate_f_y(const TruncatedSeries& x, const TruncatedSeries& y) const {
        std::vector<TruncatedSeries> xp = powers(x, s_), yp = powers(y, n_);
        TruncatedSeries fy = Rational(n_) * yp[n_ - 1];
        for (const auto& [idx, c] : coeffs_) {
            auto [i, j] = idx;
            if (j >= 1) fy = fy - (Rational(j) * c) * (xp[i] * yp[j - 1]);
        }
        return fy;
    }

    /// The residual z^{ns} f(x(z), y(z)); identically zero through z^{P+s}
    /// when the expansion is correct.
    TruncatedSeries residual(const PuiseuxData& p) const {
        return evaluate_f(p.x, p.y).shifted(n_ * s_);
    }

    /// The g series du_{w_i}/dz = n phi_{g+1-i}(x,y) z^{-n-1} / f_y(x,y),
    /// expected to be z^{w_i - 1}(1 + O(z)).
    std::vector<TruncatedSeries> differentials(const PuiseuxData& p) const {
        int g = genus();
        GapSequence G = gap_sequence_of();
        if (p.precision < G.gap(g) + 2)
            throw std::invalid_argument("differentials: need P >= max gap + 2");
        auto phis = phi_basis(g);
        TruncatedSeries fy_inv = evaluate_f_y(p.x, p.y).invert();
        TruncatedSeries neg_dxdz = TruncatedSeries::monomial(Rational(n_), -n_ - 1);
        std::vector<TruncatedSeries> out;
        std::vector<TruncatedSeries> xp = powers(p.x, s_), yp = powers(p.y, n_);
        for (int i = 1; i <= g; ++i) {
            auto [a, b] = phis[g + 1 - i - 1];
            TruncatedSeries phi = xp[a] * yp[b];
            TruncatedSeries du = (phi * neg_dxdz) * fy_inv;
            int want = G.gap(i) - 1;
            if (du.precision() <= want)
                throw std::invalid_argument("differentials: insufficient precision to certify du_" +
                                            std::to_string(G.gap(i)));
            out.push_back(du);
        }
        return out;
    }

private:
    static TruncatedSeries with_precision(const TruncatedSeries& s, int prec) {
        TruncatedSeries r(prec);
        for (const auto& [e, c] : s.coefficients()) r.set_coefficient(e, c);
        return r;
    }

    /// F(w) = w^n - 1 - sum coeffs z^{ns-ni-sj} w^j.
    TruncatedSeries unit_equation(const TruncatedSeries& w) const {
        std::vector<TruncatedSeries> wp = powers(w, n_);
        TruncatedSeries f = wp[n_] - TruncatedSeries::constant(Rational(1), w.precision());
        for (const auto& [idx, c] : coeffs_) {
            auto [i, j] = idx;
            int e = n_ * s_ - n_ * i - s_ * j;
            f = f - (TruncatedSeries::monomial(c, e) * wp[j]).truncated(w.precision());
        }
        return f.truncated(w.precision());
    }

    TruncatedSeries unit_equation_derivative(const TruncatedSeries& w) const {
        std::vector<TruncatedSeries> wp = powers(w, n_);
        TruncatedSeries fp = Rational(n_) * wp[n_ - 1];
        for (const auto& [idx, c] : coeffs_) {
            auto [i, j] = idx;
            if (j < 1) continue;
            int e = n_ * s_ - n_ * i - s_ * j;
            fp = fp - (TruncatedSeries::monomial(Rational(j) * c, e) * wp[j - 1]).truncated(w.precision());
        }
        return fp.truncated(w.precision());
    }

    static std::vector<TruncatedSeries> powers(const TruncatedSeries& base, int up_to) {
        std::vector<TruncatedSeries> p;
        p.push_back(TruncatedSeries::constant(Rational(1)));
        for (int e = 1; e <= up_to; ++e) p.push_back(p.back() * base);
        return p;
    }

    int n_;
    int s_;
    std::map<Index, Rational> coeffs_;
};

}  // namespace schurtau
