#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurtau {

/// Weakly decreasing sequence of positive integers. Canonical form never
/// stores zero parts; padded input is accepted and stripped.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based part access with zero padding.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition: part index must be >= 1");
        return i <= length() ? parts_[i - 1] : 0;
    }

    /// Diagram transpose.
    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    /// (lambda_1 + l - 1, ..., lambda_l + 0), strictly decreasing; l >= length.
    std::vector<int> w_sequence(int l) const {
        if (l < length()) throw std::invalid_argument("Partition: w_sequence needs l >= length");
        std::vector<int> w(l);
        for (int i = 1; i <= l; ++i) w[i - 1] = part(i) + l - i;
        return w;
    }

    /// Tail weight: sum of parts after position k.
    int n_tail(int k) const {
        if (k < 0) throw std::invalid_argument("Partition: n_tail needs k >= 0");
        int s = 0;
        for (int i = k; i < length(); ++i) s += parts_[i];
        return s;
    }

    /// n_tail(1) - length + 1; defined for nonempty partitions.
    int n_prime() const {
        if (parts_.empty()) throw std::invalid_argument("Partition: n_prime of empty partition");
        return n_tail(1) - length() + 1;
    }

    /// All parts after the first equal 1.
    bool is_hook() const {
        for (int i = 2; i <= length(); ++i)
            if (part(i) != 1) return false;
        return true;
    }

    /// Conjugate with every part decreased by one, zeros stripped.
    Partition tilde_conjugate() const {
        Partition c = conjugate();
        std::vector<int> parts;
        for (int p : c.parts_)
            if (p > 1) parts.push_back(p - 1);
        return Partition(std::move(parts));
    }

    /// First k parts as a partition (trailing zeros stripped).
    Partition prefix(int k) const {
        std::vector<int> p;
        for (int i = 1; i <= k && i <= length(); ++i) p.push_back(parts_[i - 1]);
        return Partition(std::move(p));
    }

    /// The hook (first part, 1^{rows-1}).
    Partition hook_of(int rows) const {
        if (parts_.empty() || rows < 1) throw std::invalid_argument("Partition: hook_of needs a first part");
        std::vector<int> p(rows, 1);
        p[0] = parts_[0];
        return Partition(std::move(p));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// "4,1,1,1"; the empty partition renders as "0".
    std::string str() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& s) {
        if (s.empty() || s == "0") return {};
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            parts.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// lambda <= mu componentwise with zero padding.
inline bool contains(const Partition& lambda, const Partition& mu) {
    for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

namespace detail {
inline void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

/// Partitions of exactly w, lexicographically descending: (w), (w-1,1), ...
inline std::vector<Partition> partitions_of_weight(int w) {
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::gen_partitions(w, w, acc, out);
    return out;
}

/// Partitions of weight 0..W ordered by weight, then lex descending.
inline std::vector<Partition> partitions_up_to_weight(int W) {
    std::vector<Partition> out;
    for (int w = 0; w <= W; ++w) {
        auto layer = partitions_of_weight(w);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// All mu with lambda < mu and |mu| <= max_weight, ordered by weight then
/// lex descending.
inline std::vector<Partition> enumerate_above(const Partition& lambda, int max_weight) {
    if (max_weight < lambda.weight())
        throw std::invalid_argument("enumerate_above: max_weight below |lambda|");
    std::vector<Partition> out;
    for (int w = lambda.weight(); w <= max_weight; ++w) {
        for (auto& mu : partitions_of_weight(w)) {
            if (mu != lambda && contains(lambda, mu)) out.push_back(std::move(mu));
        }
    }
    return out;
}

}  // namespace schurtau
