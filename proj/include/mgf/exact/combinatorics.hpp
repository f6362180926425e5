#pragma once

#include "mgf/exact/rational.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace mgf {

// Zero outside 0 <= k <= n; no negative-argument extension.
inline Integer binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace detail {

// Grow-only table shared between threads. Entries are immutable once
// published; readers take a shared lock, extension takes an exclusive one.
template <class Builder>
class SequenceTable {
public:
    explicit SequenceTable(std::size_t initial) : initial_(initial) {}

    Rational get(std::size_t n) {
        {
            std::shared_lock lock(mu_);
            if (n < values_.size()) return values_[n];
        }
        std::unique_lock lock(mu_);
        std::size_t target = std::max(n + 1, std::max(initial_, values_.size() * 2));
        builder_.extend(values_, target);
        return values_[n];
    }

private:
    std::size_t initial_;
    std::shared_mutex mu_;
    Builder builder_;
    std::vector<Rational> values_;
};

struct BernoulliBuilder {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    void extend(std::vector<Rational>& b, std::size_t target) {
        for (std::size_t n = b.size(); n < target; ++n) {
            if (n == 0) { b.emplace_back(1); continue; }
            if (n > 1 && n % 2 == 1) { b.emplace_back(0); continue; }
            Rational s;
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].is_zero()) s += Rational(binom(long(n) + 1, long(k))) * b[k];
            b.push_back(-s / Rational(long(n) + 1));
        }
    }
};

struct EulerZeroBuilder {
    // Coefficients c_n of 2/(e^x+1) from (2 + sum_{j>=1} x^j/j!) * c = 2.
    // E_n(0) = n! c_n.
    std::vector<Rational> c;
    void extend(std::vector<Rational>& e, std::size_t target) {
        for (std::size_t n = e.size(); n < target; ++n) {
            Rational s = (n == 0) ? Rational(2) : Rational(0);
            for (std::size_t j = 1; j <= n; ++j)
                if (!c[n - j].is_zero()) s -= c[n - j] / Rational(factorial(long(j)));
            c.push_back(s / Rational(2));
            e.push_back(c.back() * Rational(factorial(long(n))));
        }
    }
};

inline std::size_t& table_initial_size() {
    static std::size_t n = 256;
    return n;
}

inline SequenceTable<BernoulliBuilder>& bernoulli_table() {
    static SequenceTable<BernoulliBuilder> t(table_initial_size());
    return t;
}

inline SequenceTable<EulerZeroBuilder>& euler_table() {
    static SequenceTable<EulerZeroBuilder> t(table_initial_size());
    return t;
}

}  // namespace detail

// Must be called before the first table lookup to have any effect.
inline void set_sequence_table_size(std::size_t n) { detail::table_initial_size() = n; }

// B_n with B_1 = -1/2.
inline Rational bernoulli(long n) {
    if (n < 0) throw std::domain_error("bernoulli: negative index");
    return detail::bernoulli_table().get(static_cast<std::size_t>(n));
}

// E_n(0), Euler polynomial at zero.
inline Rational euler_at_zero(long n) {
    if (n < 0) throw std::domain_error("euler_at_zero: negative index");
    return detail::euler_table().get(static_cast<std::size_t>(n));
}

// r with zeta(2k) = r * pi^(2k).
inline Rational zeta_even_pi_power(long k) {
    if (k < 1) throw std::domain_error("zeta_even_pi_power: k must be >= 1");
    Rational r = Rational(pow_int(2, static_cast<unsigned long>(2 * k - 1))) * bernoulli(2 * k) /
                 Rational(factorial(2 * k));
    return parity_sign(k + 1) > 0 ? r : -r;
}

// sum_{d | n} d^s, exact for negative s.
inline Rational divisor_sigma(long s, long n) {
    if (n < 1) throw std::domain_error("divisor_sigma: n must be >= 1");
    Rational total;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        total += pow(Rational(d), s);
        long e = n / d;
        if (e != d) total += pow(Rational(e), s);
    }
    return total;
}

}  // namespace mgf
