#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace schurtau {

/// Exact arbitrary-precision rational. Always canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {  // NOLINT: implicit by design, numeric literals are rationals
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {  // mpq_set_si takes an unsigned denominator
            num = -num;
            den = -den;
        }
        mpq_init(q_);
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }

    /// Parses "p" or "p/q" (arbitrary precision).
    static Rational parse(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    /// Integer power; negative exponents invert (error on zero base).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0 to negative power");
            return (Rational(1) / *this).pow(-e);
        }
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
        return r;  // powers of a canonical value stay canonical
    }

    static Rational factorial(long n) {
        if (n < 0) throw std::domain_error("Rational: factorial of negative");
        Rational r;
        mpz_fac_ui(mpq_numref(r.q_), static_cast<unsigned long>(n));
        return r;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        char* cs = mpq_get_str(nullptr, 10, q_);
        std::string s(cs);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(cs, s.size() + 1);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](const mpz_t z) {
            std::size_t n = mpz_size(z);
            for (std::size_t i = 0; i < n; ++i) h = (h ^ mpz_getlimbn(z, i)) * 0x100000001b3ull;
            h = (h ^ static_cast<std::size_t>(mpz_sgn(z))) * 0x100000001b3ull;
        };
        mix(mpq_numref(q_));
        mix(mpq_denref(q_));
        return h;
    }

private:
    mpq_t q_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace schurtau
