#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurtau/partition.hpp"
#include "schurtau/rational.hpp"

namespace schurtau {

/// Derivative index sequence a^(k) attached to a gap sequence: strictly
/// decreasing gaps that sum to the tail weight N_{lambda,k}.
struct ASequence {
    int k = 0;
    std::vector<int> entries;  // a_1 > ... > a_m >= 1; empty for k = genus

    int m() const { return static_cast<int>(entries.size()); }

    int sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }
};

/// Genus-g set of gaps w_1 < ... < w_g whose complement in Z_{>=0} is an
/// additive semigroup containing 0.
class GapSequence {
public:
    static GapSequence from_gaps(std::vector<int> gaps) {
        if (gaps.empty()) throw std::invalid_argument("GapSequence: empty gap set");
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            if (gaps[i] <= 0) throw std::invalid_argument("GapSequence: gaps must be positive");
            if (i > 0 && gaps[i] <= gaps[i - 1])
                throw std::invalid_argument("GapSequence: gaps must be strictly increasing");
        }
        // Sums above the largest gap are automatically nongaps, so checking
        // pair sums up to w_g is a complete closure test.
        int top = gaps.back();
        std::vector<bool> is_gap(top + 1, false);
        for (int w : gaps) is_gap[w] = true;
        for (int a = 1; a <= top; ++a) {
            if (is_gap[a]) continue;
            for (int b = a; a + b <= top; ++b) {
                if (is_gap[b]) continue;
                if (is_gap[a + b])
                    throw std::invalid_argument(
                        "GapSequence: complement not closed under addition: " + std::to_string(a) +
                        " and " + std::to_string(b) + " are nongaps but " + std::to_string(a + b) +
                        " is a gap");
            }
        }
        return GapSequence(std::move(gaps));
    }

    /// Gap sequence of type (n,s): complement generated by coprime n,s >= 2.
    static GapSequence from_ns(int n, int s) {
        if (n < 2 || s < 2) throw std::invalid_argument("GapSequence: from_ns needs n,s >= 2");
        if (std::gcd(n, s) != 1) throw std::invalid_argument("GapSequence: from_ns needs gcd(n,s) = 1");
        int g = (n - 1) * (s - 1) / 2;
        int top = 2 * g;  // all gaps are < 2g
        std::vector<bool> nongap(top + 1, false);
        for (int i = 0; i * n <= top; ++i)
            for (int j = 0; i * n + j * s <= top; ++j) nongap[i * n + j * s] = true;
        std::vector<int> gaps;
        for (int w = 1; w <= top; ++w)
            if (!nongap[w]) gaps.push_back(w);
        GapSequence G(std::move(gaps));
        if (G.genus() != g) throw std::logic_error("GapSequence: genus mismatch in from_ns");
        return G;
    }

    int genus() const { return static_cast<int>(gaps_.size()); }
    const std::vector<int>& gaps() const { return gaps_; }

    /// 1-based gap access: w_i.
    int gap(int i) const {
        if (i < 1 || i > genus()) throw std::out_of_range("GapSequence: gap index");
        return gaps_[i - 1];
    }

    bool is_gap(int v) const {
        return v >= 1 && std::binary_search(gaps_.begin(), gaps_.end(), v);
    }

    /// i-th smallest nongap, 1-based: w*_1 = 0.
    int nongap(int i) const {
        if (i < 1) throw std::out_of_range("GapSequence: nongap index");
        int count = 0;
        for (int v = 0;; ++v) {
            if (!is_gap(v)) {
                if (++count == i) return v;
            }
        }
    }

    /// lambda = (w_g,...,w_1) - (g-1,...,1,0); always of length g.
    Partition partition_of() const {
        int g = genus();
        std::vector<int> parts(g);
        for (int j = 1; j <= g; ++j) parts[j - 1] = gap(g + 1 - j) - (g - j);
        return Partition(std::move(parts));
    }

    /// a^(k) = (w_{g-k},...,w_{g-k-m+1}) - (w*_1,...,w*_m) with
    /// m = #{i : w*_i < g-k}; empty for k = g.
    ASequence a_sequence(int k) const {
        int g = genus();
        if (k < 0 || k > g) throw std::out_of_range("GapSequence: a_sequence k out of range");
        ASequence a;
        a.k = k;
        if (k == g) return a;
        int m = 0;
        while (nongap(m + 1) < g - k) ++m;
        for (int j = 1; j <= m; ++j) a.entries.push_back(gap(g - k - (j - 1)) - nongap(j));
        return a;
    }

    /// Sign of the permutation carrying (w*_1,...,w*_m, w_{g-k-m},...,w_1)
    /// to (g-k-1,...,1,0); +1 for k = g.
    int c_k_sign(int k) const {
        int g = genus();
        if (k < 0 || k > g) throw std::out_of_range("GapSequence: c_k_sign k out of range");
        if (k == g) return 1;
        int n = g - k;
        int m = 0;
        while (nongap(m + 1) < n) ++m;
        std::vector<int> source;
        for (int j = 1; j <= m; ++j) source.push_back(nongap(j));
        for (int j = n - m; j >= 1; --j) source.push_back(gap(j));
        // source is a permutation of {0,...,n-1}; target[p] = n-1-p.
        std::vector<int> pi(n);
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            int v = source[i];
            if (v < 0 || v >= n || seen[v])
                throw std::logic_error("GapSequence: c_k_sign source is not a permutation");
            seen[v] = true;
            pi[i] = n - 1 - v;
        }
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pi[i] > pi[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    /// "1,3,5"
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < gaps_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(gaps_[i]);
        }
        return s;
    }

    static GapSequence parse(const std::string& s) {
        std::vector<int> gaps;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            gaps.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return from_gaps(std::move(gaps));
    }

    friend bool operator==(const GapSequence& a, const GapSequence& b) { return a.gaps_ == b.gaps_; }

private:
    explicit GapSequence(std::vector<int> gaps) : gaps_(std::move(gaps)) {}

    std::vector<int> gaps_;
};

namespace detail {
/// Increasing w-sequence of a partition: w_i = lambda_{l+1-i} + i - 1.
inline std::vector<int> increasing_w(const Partition& lambda) {
    int l = lambda.length();
    std::vector<int> w(l);
    for (int i = 1; i <= l; ++i) w[i - 1] = lambda.part(l + 1 - i) + i - 1;
    return w;
}
}  // namespace detail

/// c'_{lambda,k} = N_{lambda,k}! / prod w_i! * prod_{i<j} (w_j - w_i) over the
/// first l-k entries of the increasing w-sequence.
inline Rational c_prime(const Partition& lambda, int k) {
    int l = lambda.length();
    if (k < 0 || k > l) throw std::out_of_range("c_prime: k out of range");
    auto w = detail::increasing_w(lambda);
    int n = l - k;
    Rational r = Rational::factorial(lambda.n_tail(k));
    for (int i = 0; i < n; ++i) {
        r = r / Rational::factorial(w[i]);
        for (int j = i + 1; j < n; ++j) r *= Rational(w[j] - w[i]);
    }
    return r;
}

/// c_lambda = N'_{lambda,1}! / prod (w_i - 1)! * prod_{i<j} (w_j - w_i) over
/// the first l-1 entries of the increasing w-sequence.
inline Rational c_lambda(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("c_lambda: empty partition");
    int l = lambda.length();
    auto w = detail::increasing_w(lambda);
    Rational r = Rational::factorial(lambda.n_prime());
    for (int i = 0; i < l - 1; ++i) {
        r = r / Rational::factorial(w[i] - 1);
        for (int j = i + 1; j < l - 1; ++j) r *= Rational(w[j] - w[i]);
    }
    return r;
}

/// Addition-formula coefficient: (-1)^{g n(n-1)/2} c_lambda^{n(n-1)/2}
/// (c'_{lambda,1})^{-n^2}, times c'_{lambda,n} (unprimed, n < g) or the sign
/// c_n (primed, requires n < g).
inline Rational b_coeff(const GapSequence& G, int n, bool primed) {
    if (n < 1) throw std::invalid_argument("b_coeff: n must be >= 1");
    int g = G.genus();
    if (primed && n >= g) throw std::invalid_argument("b_coeff: primed form requires n < g");
    Partition lambda = G.partition_of();
    long half = static_cast<long>(n) * (n - 1) / 2;
    Rational r = (g * half) % 2 == 0 ? Rational(1) : Rational(-1);
    r *= c_lambda(lambda).pow(half);
    r *= c_prime(lambda, 1).pow(-static_cast<long>(n) * n);
    if (primed)
        r *= Rational(G.c_k_sign(n));
    else if (n < g)
        r *= c_prime(lambda, n);
    return r;
}

/// All gap sequences of the given genus (every gap is at most 2g-1).
inline std::vector<GapSequence> enumerate_gap_sequences(int genus) {
    if (genus < 1) throw std::invalid_argument("enumerate_gap_sequences: genus must be >= 1");
    std::vector<GapSequence> out;
    int top = 2 * genus - 1;
    std::vector<int> candidates;
    for (int v = 2; v <= top; ++v) candidates.push_back(v);
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
        if (static_cast<int>(chosen.size()) == genus - 1) {
            std::vector<int> gaps = {1};
            gaps.insert(gaps.end(), chosen.begin(), chosen.end());
            try {
                out.push_back(GapSequence::from_gaps(std::move(gaps)));
            } catch (const std::invalid_argument&) {
            }
            return;
        }
        if (idx == candidates.size()) return;
        if (candidates.size() - idx < genus - 1 - chosen.size()) return;
        chosen.push_back(candidates[idx]);
        self(self, idx + 1);
        chosen.pop_back();
        self(self, idx + 1);
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace schurtau
