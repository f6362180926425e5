#pragma once

#include "mgf/errors.hpp"
#include "mgf/exact/combinatorics.hpp"
#include "mgf/exact/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mgf {

using DoubleIndex = std::pair<int, int>;

// pi^p * prod zeta(odd_i) * prod zeta(a_j, b_j), factors kept sorted.
class ZetaMonomial {
public:
    ZetaMonomial() = default;
    ZetaMonomial(int pi_power, std::vector<int> odd, std::vector<DoubleIndex> dbl)
        : pi_(pi_power), odd_(std::move(odd)), dbl_(std::move(dbl)) {
        for (int n : odd_) check_odd(n);
        for (auto& d : dbl_) check_double(d);
        std::sort(odd_.begin(), odd_.end());
        std::sort(dbl_.begin(), dbl_.end());
    }

    static ZetaMonomial odd_zeta(int n) { return ZetaMonomial(0, {n}, {}); }
    static ZetaMonomial pi(int p) { return ZetaMonomial(p, {}, {}); }
    static ZetaMonomial double_zeta(int a, int b) { return ZetaMonomial(0, {}, {{a, b}}); }

    int pi_power() const { return pi_; }
    const std::vector<int>& odd_factors() const { return odd_; }
    const std::vector<DoubleIndex>& double_factors() const { return dbl_; }

    bool is_one() const { return pi_ == 0 && odd_.empty() && dbl_.empty(); }
    bool has_double() const { return !dbl_.empty(); }

    int weight() const {
        int w = pi_;
        for (int n : odd_) w += n;
        for (auto& d : dbl_) w += d.first + d.second;
        return w;
    }

    ZetaMonomial with_pi_shift(int dp) const {
        ZetaMonomial m = *this;
        m.pi_ += dp;
        return m;
    }

    friend ZetaMonomial operator*(const ZetaMonomial& x, const ZetaMonomial& y) {
        ZetaMonomial m;
        m.pi_ = x.pi_ + y.pi_;
        std::merge(x.odd_.begin(), x.odd_.end(), y.odd_.begin(), y.odd_.end(), std::back_inserter(m.odd_));
        std::merge(x.dbl_.begin(), x.dbl_.end(), y.dbl_.begin(), y.dbl_.end(), std::back_inserter(m.dbl_));
        return m;
    }

    // Canonical order: (pi_power, odd factors, double factors), lexicographic.
    friend auto operator<=>(const ZetaMonomial&, const ZetaMonomial&) = default;
    friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;

private:
    static void check_odd(int n) {
        if (n == 1) throw ZetaOneError("odd factor zeta(1)");
        if (n < 3 || n % 2 == 0) throw std::domain_error("odd factor must be an odd integer >= 3");
    }
    static void check_double(const DoubleIndex& d) {
        if (d.first == 1) throw ZetaOneError("double factor zeta(1," + std::to_string(d.second) + ")");
        if (d.first < 2 || d.second < 1) throw std::domain_error("double factor needs a >= 2, b >= 1");
    }

    int pi_ = 0;
    std::vector<int> odd_;
    std::vector<DoubleIndex> dbl_;
};

// Finite rational combination of zeta monomials; zero coefficients are never stored.
class SymbolicConstant {
public:
    using Terms = std::map<ZetaMonomial, Rational>;

    SymbolicConstant() = default;
    SymbolicConstant(const Rational& r) { add(ZetaMonomial(), r); }
    SymbolicConstant(long r) : SymbolicConstant(Rational(r)) {}
    SymbolicConstant(const ZetaMonomial& m, const Rational& c = Rational(1)) { add(m, c); }

    // zeta(n): even n as rational * pi^n, odd n >= 3 as a symbol.
    static SymbolicConstant zeta(int n) {
        if (n == 1) throw ZetaOneError("zeta(1)");
        if (n < 2) throw std::domain_error("zeta(n) needs n >= 2");
        if (n % 2 == 0) return SymbolicConstant(ZetaMonomial::pi(n), zeta_even_pi_power(n / 2));
        return SymbolicConstant(ZetaMonomial::odd_zeta(n));
    }
    static SymbolicConstant zeta(int a, int b) { return SymbolicConstant(ZetaMonomial::double_zeta(a, b)); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    bool is_rational() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    Rational rational_part() const { return coefficient(ZetaMonomial()); }

    Rational coefficient(const ZetaMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    bool has_double() const {
        return std::any_of(t_.begin(), t_.end(), [](auto& kv) { return kv.first.has_double(); });
    }

    // Sum of all terms carrying exactly pi^p and nothing else.
    Rational pi_part(int p) const { return coefficient(ZetaMonomial::pi(p)); }

    // True when every monomial has the same weight (vacuous for zero).
    bool homogeneous(int* weight_out = nullptr) const {
        if (t_.empty()) return true;
        int w = t_.begin()->first.weight();
        for (auto& kv : t_)
            if (kv.first.weight() != w) return false;
        if (weight_out) *weight_out = w;
        return true;
    }

    SymbolicConstant& add(const ZetaMonomial& m, const Rational& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
        return *this;
    }

    SymbolicConstant times_pi(int p) const {
        SymbolicConstant r;
        for (auto& [m, c] : t_) r.t_.emplace(m.with_pi_shift(p), c);
        return r;
    }

    SymbolicConstant& operator+=(const SymbolicConstant& o) {
        for (auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    SymbolicConstant& operator-=(const SymbolicConstant& o) {
        for (auto& [m, c] : o.t_) add(m, -c);
        return *this;
    }
    SymbolicConstant& operator*=(const Rational& r) {
        if (r.is_zero()) { t_.clear(); return *this; }
        for (auto& kv : t_) kv.second *= r;
        return *this;
    }

    friend SymbolicConstant operator+(SymbolicConstant a, const SymbolicConstant& b) { return a += b; }
    friend SymbolicConstant operator-(SymbolicConstant a, const SymbolicConstant& b) { return a -= b; }
    friend SymbolicConstant operator-(SymbolicConstant a) { return a *= Rational(-1); }
    friend SymbolicConstant operator*(SymbolicConstant a, const Rational& r) { return a *= r; }
    friend SymbolicConstant operator*(const Rational& r, SymbolicConstant a) { return a *= r; }
    friend SymbolicConstant operator*(const SymbolicConstant& a, const SymbolicConstant& b) {
        SymbolicConstant r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const SymbolicConstant&, const SymbolicConstant&) = default;

private:
    Terms t_;
};

// c * zeta(a) * zeta(b) with even arguments turned into pi powers.
inline SymbolicConstant zeta_product(int a, int b, const Rational& c = Rational(1)) {
    return SymbolicConstant::zeta(a) * SymbolicConstant::zeta(b) * c;
}

}  // namespace mgf
