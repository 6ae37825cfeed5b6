#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurtau/partition.hpp"
#include "schurtau/polynomial.hpp"
#include "schurtau/rational.hpp"

namespace schurtau {

/// One argument of the Abel-Jacobi-style substitution: a signed symbolic
/// point [x_i] or a signed numeric point [r].
struct SignedPoint {
    int sign = 1;                  // +1 or -1
    std::optional<int> var_index;  // symbolic x_i when set
    Rational value = Rational(0);  // numeric otherwise

    static SignedPoint symbolic(int sign, int xi) {
        SignedPoint p;
        p.sign = sign;
        p.var_index = xi;
        return p;
    }

    static SignedPoint numeric(int sign, Rational v) {
        SignedPoint p;
        p.sign = sign;
        p.value = std::move(v);
        return p;
    }

    std::string str() const {
        std::string s = sign >= 0 ? "+" : "-";
        if (var_index)
            s += "x" + std::to_string(*var_index);
        else
            s += value.str();
        return s;
    }
};

/// [+x_1, ..., +x_k]
inline std::vector<SignedPoint> symbolic_points(int k) {
    std::vector<SignedPoint> pts;
    for (int i = 1; i <= k; ++i) pts.push_back(SignedPoint::symbolic(1, i));
    return pts;
}

/// [+x_1, -x_2]
inline std::vector<SignedPoint> difference_points() {
    return {SignedPoint::symbolic(1, 1), SignedPoint::symbolic(-1, 2)};
}

inline std::string points_key(const std::vector<SignedPoint>& pts) {
    std::string key;
    for (const auto& p : pts) {
        key += p.str();
        key += ",";
    }
    return key;
}

/// Multi-index alpha for the derivation d^alpha = d_1^{a_1} d_2^{a_2} ...
struct DerivationIndex {
    std::map<int, int> alpha;  // t-index -> multiplicity, entries >= 1

    DerivationIndex() = default;

    /// From a list of indices, one derivative per occurrence, e.g. {3,1,1}.
    static DerivationIndex from_indices(const std::vector<int>& indices) {
        DerivationIndex d;
        for (int i : indices) {
            if (i < 1) throw std::invalid_argument("DerivationIndex: index must be >= 1");
            ++d.alpha[i];
        }
        return d;
    }

    static DerivationIndex single(int index, int multiplicity = 1) {
        DerivationIndex d;
        if (index < 1) throw std::invalid_argument("DerivationIndex: index must be >= 1");
        if (multiplicity < 0) throw std::invalid_argument("DerivationIndex: negative multiplicity");
        if (multiplicity > 0) d.alpha[index] = multiplicity;
        return d;
    }

    int weight() const {
        int w = 0;
        for (const auto& [i, m] : alpha) w += i * m;
        return w;
    }

    bool empty() const { return alpha.empty(); }

    std::string str() const {
        if (alpha.empty()) return "1";
        std::string s;
        for (const auto& [i, m] : alpha) {
            s += "d" + std::to_string(i);
            if (m > 1) s += "^" + std::to_string(m);
        }
        return s;
    }
};

/// All alpha with wt(alpha) == w, one per partition of w.
inline std::vector<DerivationIndex> derivations_of_weight(int w) {
    std::vector<DerivationIndex> out;
    for (const auto& p : partitions_of_weight(w)) out.push_back(DerivationIndex::from_indices(p.parts()));
    return out;
}

namespace detail {

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ull;
        return h;
    }
};

inline std::vector<Polynomial>& p_cache() {
    thread_local std::vector<Polynomial> cache{Polynomial(1)};  // p_0 = 1
    return cache;
}

}  // namespace detail

/// Generating polynomials p_0..p_N of exp(sum t_n k^n); p_n = 0 for n < 0.
/// Computed by the recurrence n p_n = sum_{i=1}^n i t_i p_{n-i}.
inline const Polynomial& p_poly(int n) {
    static const Polynomial zero;
    if (n < 0) return zero;
    auto& cache = detail::p_cache();
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Polynomial acc;
        for (int i = 1; i <= m; ++i) acc += Rational(i) * (Polynomial::variable(tvar(i)) * cache[m - i]);
        cache.push_back(Rational(1, m) * acc);
    }
    return cache[n];
}

inline std::vector<Polynomial> p_list(int N) {
    if (N < 0) throw std::invalid_argument("p_list: N must be >= 0");
    std::vector<Polynomial> out;
    for (int n = 0; n <= N; ++n) out.push_back(p_poly(n));
    return out;
}

namespace detail {

/// Cofactor expansion along the last column with memoized minors; indices
/// strictly decreasing and nonnegative.
inline Polynomial bracket_canonical(const std::vector<int>& idx) {
    thread_local std::unordered_map<std::vector<int>, Polynomial, VecIntHash> memo;
    if (idx.empty()) return Polynomial(1);
    if (auto it = memo.find(idx); it != memo.end()) return it->second;
    int l = static_cast<int>(idx.size());
    Polynomial det;
    std::vector<int> sub(l - 1);
    for (int j = 1; j <= l; ++j) {
        int pos = 0;
        bool dead = false;
        for (int m = 1; m <= l; ++m) {
            if (m == j) continue;
            int v = idx[m - 1] - 1;
            if (v < 0) {
                dead = true;
                break;
            }
            sub[pos++] = v;
        }
        if (dead) continue;
        const Polynomial& entry = p_poly(idx[j - 1]);
        if (entry.is_zero()) continue;
        Polynomial minor = bracket_canonical(sub);
        if ((j + l) % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    memo.emplace(idx, det);
    return det;
}

}  // namespace detail

/// Determinant [i_1,...,i_l] whose j-th row is (..., p_{i_j - 1}, p_{i_j}).
/// Skew symmetric in the indices; zero when an index is negative or repeated.
inline Polynomial bracket(const std::vector<int>& indices) {
    std::vector<int> idx = indices;
    for (int v : idx)
        if (v < 0) return {};
    int sign = 1;  // sort descending by bubble, tracking parity
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[j] > idx[i]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            } else if (idx[j] == idx[i]) {
                return {};
            }
        }
    }
    Polynomial det = detail::bracket_canonical(idx);
    return sign == 1 ? det : -det;
}

/// Schur polynomial s_lambda(t) = det(p_{lambda_i - i + j}); weight
/// homogeneous of weight |lambda|.
inline Polynomial schur_t(const Partition& lambda) {
    thread_local std::map<Partition, Polynomial> memo;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    Polynomial s = lambda.empty() ? Polynomial(1) : bracket(lambda.w_sequence(lambda.length()));
    memo.emplace(lambda, s);
    return s;
}

/// Schur polynomial S_lambda(x_1..x_k) via the bialternant: the x-alternant
/// divided exactly by the Vandermonde determinant.
inline Polynomial schur_x(const Partition& lambda, int k) {
    if (k < lambda.length()) throw std::invalid_argument("schur_x: need k >= length of lambda");
    if (k == 0) return Polynomial(1);
    std::vector<int> expo(k);
    for (int i = 1; i <= k; ++i) expo[i - 1] = lambda.part(i) + k - i;
    // det(x_j^{e_i}) as a signed sum over permutations: every term is a
    // distinct monomial because the e_i are distinct.
    Polynomial alternant;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<Monomial::Term> factors;
        for (int i = 0; i < k; ++i)
            if (expo[i] > 0) factors.push_back({xvar(perm[i] + 1), expo[i]});
        alternant.add_term(Monomial(std::move(factors)), Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    Polynomial vandermonde(1);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            vandermonde *= Polynomial::variable(xvar(i)) - Polynomial::variable(xvar(j));
    auto q = alternant.try_divide(vandermonde);
    if (!q) throw std::logic_error("schur_x: alternant not divisible by Vandermonde");
    return *q;
}

namespace detail {

struct AbelCache {
    std::map<int, Polynomial> tj;                       // image of t_j
    std::map<Monomial, Polynomial, GrlexLess> monomial;  // image of a t-monomial
};

inline AbelCache& abel_cache(const std::string& key) {
    thread_local std::unordered_map<std::string, AbelCache> caches;
    return caches[key];
}

inline const Polynomial& abel_tj(AbelCache& cache, const std::vector<SignedPoint>& pts, int j) {
    auto it = cache.tj.find(j);
    if (it != cache.tj.end()) return it->second;
    Polynomial img;
    for (const auto& p : pts) {
        Rational c = Rational(p.sign, j);
        if (p.var_index)
            img += Polynomial::term(c, Monomial::var(xvar(*p.var_index), j));
        else
            img += Polynomial(c * p.value.pow(j));
    }
    return cache.tj.emplace(j, std::move(img)).first->second;
}

inline const Polynomial& abel_monomial(AbelCache& cache, const std::vector<SignedPoint>& pts,
                                       const Monomial& m) {
    auto it = cache.monomial.find(m);
    if (it != cache.monomial.end()) return it->second;
    Polynomial img;
    if (m.is_one()) {
        img = Polynomial(1);
    } else {
        const auto& [v, e] = m.factors().front();
        if (v.family != VarFamily::T)
            throw std::invalid_argument("abel_subs: polynomial contains x-family variable");
        Monomial rest = *m.divide(Monomial::var(v));
        img = abel_monomial(cache, pts, rest) * abel_tj(cache, pts, v.index);
    }
    return cache.monomial.emplace(m, std::move(img)).first->second;
}

}  // namespace detail

/// Substitute t_j = sum_i sign_i v_i^j / j exactly. Symbolic points must
/// carry distinct indices.
inline Polynomial abel_subs(const Polynomial& p, const std::vector<SignedPoint>& points) {
    auto& cache = detail::abel_cache(points_key(points));
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += c * detail::abel_monomial(cache, points, m);
    return out;
}

/// Iterated partial derivative d^alpha.
inline Polynomial derive(const Polynomial& p, const DerivationIndex& alpha) {
    Polynomial r = p;
    for (const auto& [i, mult] : alpha.alpha)
        for (int c = 0; c < mult && !r.is_zero(); ++c) r = r.derivative(tvar(i));
    return r;
}

/// d^alpha s_lambda with the derivative chain memoized, so sweeping many
/// alpha of a common shape costs one single derivative per new node.
inline const Polynomial& derive_schur(const Partition& lambda, const DerivationIndex& alpha) {
    thread_local std::unordered_map<std::string, Polynomial> memo;
    std::string key = lambda.str() + "|" + alpha.str();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Polynomial v;
    if (alpha.empty()) {
        v = schur_t(lambda);
    } else {
        DerivationIndex parent = alpha;
        int i = parent.alpha.rbegin()->first;
        if (--parent.alpha[i] == 0) parent.alpha.erase(i);
        v = derive_schur(lambda, parent).derivative(tvar(i));
    }
    return memo.emplace(std::move(key), std::move(v)).first->second;
}

/// Memoized derive-then-substitute of a Schur polynomial; the workhorse of
/// the identity checks.
inline const Polynomial& schur_eval(const Partition& lambda, const DerivationIndex& alpha,
                                    const std::vector<SignedPoint>& points) {
    thread_local std::unordered_map<std::string, Polynomial> memo;
    std::string key = lambda.str() + "|" + alpha.str() + "|" + points_key(points);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Polynomial v = abel_subs(derive_schur(lambda, alpha), points);
    return memo.emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace schurtau
