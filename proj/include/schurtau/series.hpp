#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "schurtau/rational.hpp"

namespace schurtau {

/// One-variable truncated series in z with exact rational coefficients and
/// integer (possibly negative) exponents. A series with precision P is known
/// modulo z^P: every stored exponent is < P. Precision kExact marks values
/// known exactly (finite Laurent polynomials such as z^-n).
class TruncatedSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    TruncatedSeries() : precision_(kExact) {}

    explicit TruncatedSeries(int precision) : precision_(precision) {}

    static TruncatedSeries zero(int precision = kExact) { return TruncatedSeries(precision); }

    static TruncatedSeries monomial(Rational c, int exponent, int precision = kExact) {
        TruncatedSeries s(precision);
        if (!c.is_zero() && exponent < precision) s.coeffs_[exponent] = std::move(c);
        return s;
    }

    static TruncatedSeries constant(Rational c, int precision = kExact) {
        return monomial(std::move(c), 0, precision);
    }

    int precision() const { return precision_; }
    bool is_exact() const { return precision_ == kExact; }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    /// No nonzero coefficient below the precision bound.
    bool is_zero_so_far() const { return coeffs_.empty(); }

    std::optional<int> valuation() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }

    Rational coefficient(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational leading_coefficient() const {
        if (coeffs_.empty()) throw std::domain_error("TruncatedSeries: zero series has no leading term");
        return coeffs_.begin()->second;
    }

    void set_coefficient(int exponent, Rational c) {
        if (exponent >= precision_) return;
        if (c.is_zero())
            coeffs_.erase(exponent);
        else
            coeffs_[exponent] = std::move(c);
    }

    TruncatedSeries truncated(int new_precision) const {
        TruncatedSeries r(std::min(precision_, new_precision));
        for (const auto& [e, c] : coeffs_) {
            if (e < r.precision_) r.coeffs_[e] = c;
        }
        return r;
    }

    /// Multiply by z^m.
    TruncatedSeries shifted(int m) const {
        TruncatedSeries r(clamp_add(precision_, m));
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + m] = c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.precision_, b.precision_));
        for (const auto& [e, c] : a.coeffs_) r.set_coefficient(e, c);
        for (const auto& [e, c] : b.coeffs_) r.set_coefficient(e, r.coefficient(e) + c);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + b.negated();
    }

    TruncatedSeries negated() const {
        TruncatedSeries r(precision_);
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
        TruncatedSeries r(s.precision_);
        if (c.is_zero()) return r;
        for (const auto& [e, sc] : s.coeffs_) r.coeffs_[e] = c * sc;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int prec = std::min(clamp_add(a.precision_, b.effective_valuation()),
                            clamp_add(b.precision_, a.effective_valuation()));
        TruncatedSeries r(prec);
        for (const auto& [ea, ca] : a.coeffs_) {
            for (const auto& [eb, cb] : b.coeffs_) {
                int e = ea + eb;
                if (e >= prec) continue;
                r.set_coefficient(e, r.coefficient(e) + ca * cb);
            }
        }
        return r;
    }

    TruncatedSeries pow(int e) const {
        if (e < 0) throw std::domain_error("TruncatedSeries: negative power, use invert");
        TruncatedSeries r = constant(Rational(1));
        TruncatedSeries base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    /// Multiplicative inverse. Requires a nonzero leading term. The relative
    /// precision of the input is preserved; a non-monomial exact series must
    /// be truncated first since its inverse is an infinite series.
    TruncatedSeries invert() const {
        if (coeffs_.empty())
            throw std::domain_error("TruncatedSeries: cannot invert series with zero leading term");
        int v = coeffs_.begin()->first;
        const Rational a0 = coeffs_.begin()->second;
        if (is_exact()) {
            if (coeffs_.size() == 1) return monomial(Rational(1) / a0, -v);
            throw std::domain_error("TruncatedSeries: truncate before inverting an exact multi-term series");
        }
        int rel = precision_ - v;  // number of known coefficients
        if (rel <= 0) throw std::domain_error("TruncatedSeries: no known coefficients to invert");
        // Solve sum_{i+j=k} a_i b_j = [k == 0] with a_i the coeff of z^{v+i}.
        TruncatedSeries r(precision_ - 2 * v);
        std::map<int, Rational> b;  // relative exponents
        b[0] = Rational(1) / a0;
        for (int k = 1; k < rel; ++k) {
            Rational acc(0);
            for (const auto& [e, c] : coeffs_) {
                int i = e - v;
                if (i < 1 || i > k) continue;
                auto it = b.find(k - i);
                if (it != b.end()) acc += c * it->second;
            }
            if (!acc.is_zero()) b[k] = -(acc / a0);
        }
        for (const auto& [i, c] : b) r.set_coefficient(-v + i, c);
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
    }

    /// Ascending rendering, e.g. "z^-3 + 1/2*z + O(z^5)".
    std::string str() const {
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (e == 0) {
                s += a.str();
            } else {
                if (!a.is_one()) s += a.str() + "*";
                s += e == 1 ? "z" : "z^" + std::to_string(e);
            }
        }
        if (!is_exact()) {
            if (!s.empty()) s += " + ";
            s += "O(z^" + std::to_string(precision_) + ")";
        } else if (s.empty()) {
            s = "0";
        }
        return s;
    }

private:
    static int clamp_add(int a, int b) {
        if (a == kExact || b == kExact) return kExact;  // exactness survives shifts
        long s = static_cast<long>(a) + static_cast<long>(b);
        if (s >= kExact) return kExact;
        if (s <= -kExact) return -kExact;
        return static_cast<int>(s);
    }

    /// Valuation used for precision propagation: min exponent when terms
    /// exist, otherwise everything known so far is zero, so O(z^P) (or exact 0).
    int effective_valuation() const {
        if (!coeffs_.empty()) return coeffs_.begin()->first;
        return precision_;
    }

    std::map<int, Rational> coeffs_;
    int precision_;
};

}  // namespace schurtau
