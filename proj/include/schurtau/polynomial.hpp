#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurtau/rational.hpp"

namespace schurtau {

/// Variable families: the t_1,t_2,... alphabet and the x_1,x_2,... alphabet.
enum class VarFamily : std::uint8_t { T = 0, X = 1 };

struct Var {
    VarFamily family;
    int index;  // >= 1

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string str() const {
        return (family == VarFamily::T ? "t" : "x") + std::to_string(index);
    }
};

inline Var tvar(int i) { return Var{VarFamily::T, i}; }
inline Var xvar(int i) { return Var{VarFamily::X, i}; }

/// Monomial: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
public:
    using Term = std::pair<Var, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Term> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].second <= 0) throw std::invalid_argument("Monomial: exponent must be positive");
            if (i > 0 && factors_[i].first == factors_[i - 1].first)
                throw std::invalid_argument("Monomial: duplicate variable");
        }
    }

    static Monomial one() { return Monomial(); }

    static Monomial var(Var v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.push_back({v, exp});
        return m;
    }

    const std::vector<Term>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent_of(Var v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        std::size_t i = 0, j = 0;
        while (i < factors_.size() && j < o.factors_.size()) {
            if (factors_[i].first < o.factors_[j].first) {
                r.factors_.push_back(factors_[i++]);
            } else if (o.factors_[j].first < factors_[i].first) {
                r.factors_.push_back(o.factors_[j++]);
            } else {
                r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
                ++i, ++j;
            }
        }
        for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
        for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
        return r;
    }

    /// Exact quotient this / o, or nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (j < o.factors_.size()) {
            if (i == factors_.size()) return std::nullopt;
            if (factors_[i].first < o.factors_[j].first) {
                r.factors_.push_back(factors_[i++]);
            } else if (o.factors_[j].first < factors_[i].first) {
                return std::nullopt;
            } else {
                int e = factors_[i].second - o.factors_[j].second;
                if (e < 0) return std::nullopt;
                if (e > 0) r.factors_.push_back({factors_[i].first, e});
                ++i, ++j;
            }
        }
        for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
        return r;
    }

    /// Remove one variable entirely (for coefficient collection).
    Monomial without(Var v) const {
        Monomial r;
        for (const auto& f : factors_)
            if (!(f.first == v)) r.factors_.push_back(f);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Term> factors_;
};

/// Graded lexicographic order: total degree first, ties broken variable by
/// variable (t-family before x-family, lower index first, higher exponent
/// on the earlier variable wins).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0, j = 0;
        while (i < fa.size() && j < fb.size()) {
            if (fa[i].first < fb[j].first) return false;  // a has earlier var with positive exp
            if (fb[j].first < fa[i].first) return true;
            if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
            ++i, ++j;
        }
        return i == fa.size() && j < fb.size();
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms with zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(Rational c) {  // NOLINT: implicit constant polynomial
        if (!c.is_zero()) terms_[Monomial::one()] = std::move(c);
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v) { return term(Rational(1), Monomial::var(v)); }

    static Polynomial term(Rational c, Monomial m) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
        return terms_.begin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.terms_.empty() || b.terms_.empty()) return r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::domain_error("Polynomial: negative power");
        Polynomial r(1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Partial derivative with respect to one variable.
    Polynomial derivative(Var v) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            if (e == 0) continue;
            Monomial q = e == 1 ? m.without(v) : *m.divide(Monomial::var(v));
            r.add_term(q, c * Rational(e));
        }
        return r;
    }

    int total_degree() const {
        if (terms_.empty()) return 0;
        return std::prev(terms_.end())->first.total_degree();  // grlex max has max degree
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
        return d;
    }

    /// Coefficients with respect to one variable: exponent -> polynomial.
    std::map<int, Polynomial> collect(Var v) const {
        std::map<int, Polynomial> out;
        for (const auto& [m, c] : terms_) out[m.exponent_of(v)].add_term(m.without(v), c);
        return out;
    }

    /// Drop all terms of total degree > d.
    Polynomial truncate_total_degree(int d) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            if (m.total_degree() <= d) r.terms_[m] = c;
        }
        return r;
    }

    /// Exact division; nullopt when the remainder is nonzero.
    std::optional<Polynomial> try_divide(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
        Polynomial q;
        Polynomial rem = *this;
        const auto& [lm, lc] = *std::prev(d.terms_.end());
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *std::prev(rem.terms_.end());
            auto qm = rm.divide(lm);
            if (!qm) return std::nullopt;
            Rational qc = rc / lc;
            Polynomial t = term(qc, *qm);
            rem -= t * d;
            q += t;
        }
        return q;
    }

    /// Canonical rendering: graded-lex descending, e.g. "1/3*t1^3 - t3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (m.is_one()) {
                s += a.str();
            } else {
                if (!a.is_one()) s += a.str() + "*";
                s += m.str();
            }
        }
        return s;
    }

private:
    TermMap terms_;
};

/// Weight of a t-monomial: sum of index * exponent. Rejects x-variables.
inline int weighted_degree(const Monomial& m) {
    int w = 0;
    for (const auto& [v, e] : m.factors()) {
        if (v.family != VarFamily::T)
            throw std::invalid_argument("weighted_degree: monomial contains x-family variable");
        w += v.index * e;
    }
    return w;
}

/// True when every term of a t-polynomial has the same weight.
inline bool is_weight_homogeneous(const Polynomial& p, int weight) {
    for (const auto& [m, c] : p.terms())
        if (weighted_degree(m) != weight) return false;
    return true;
}

}  // namespace schurtau
