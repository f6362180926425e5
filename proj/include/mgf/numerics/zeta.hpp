#pragma once

#include "mgf/algebra/laurent_polynomial.hpp"
#include "mgf/algebra/symbolic.hpp"
#include "mgf/exact/combinatorics.hpp"
#include "mgf/numerics/real.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mgf {

namespace detail {

// Euler-Maclaurin tail sum_{k>=0} (x+k)^{-s} for x large enough that the
// asymptotic series converges to working precision. The remainder after the
// last used term is bounded by the first omitted term (completely monotone
// summand), and `err` receives twice that.
inline Real em_tail(const Real& s, const Real& x, long prec, Real& err) {
    const Real eps = ulp_scale(prec + 4, prec);
    Real xs = pow(x, -s);                 // x^{-s}
    Real sum = x * xs / (s - 1) + xs / 2;  // x^{1-s}/(s-1) + x^{-s}/2
    Real rising = s;                      // (s)_{2j-1}
    Real xp = xs / x;                     // x^{-s-2j+1}
    Real inv_x2 = 1 / (x * x);
    Real prev_mag(prec);
    for (long j = 1; j < 400; ++j) {
        Real term = Real(bernoulli(2 * j) / Rational(factorial(2 * j)), prec) * rising * xp;
        Real mag = abs(term);
        if (j > 1 && mag > prev_mag) break;  // asymptotic series starts to diverge
        sum += term;
        prev_mag = mag;
        if (mag <= eps * abs(sum)) {
            err = 2 * mag;
            return sum;
        }
        rising *= (s + (2 * j - 1)) * (s + 2 * j);
        xp *= inv_x2;
    }
    err = 2 * prev_mag;
    return sum;
}

}  // namespace detail

// Hurwitz zeta sum_{k>=0} (a+k)^{-s}, s > 1, a > 0, with error bound.
inline Estimate hurwitz_zeta(const Real& s, const Real& a, long prec) {
    if (!(s > Real(1L, prec))) throw std::domain_error("hurwitz_zeta needs s > 1");
    if (!(a > Real(0L, prec))) throw std::domain_error("hurwitz_zeta needs a > 0");
    const long wp = prec + 32;
    Real sw = s.with_precision(wp), aw = a.with_precision(wp);
    // Shift until a+K is comfortably inside the convergent range of the series.
    const long K = std::max(0L, long(wp * 0.25 + 8) - long(a.to_double()));
    Real head(wp);
    Real x = aw;
    for (long k = 0; k < K; ++k) {
        head += pow(x, -sw);
        x += 1;
    }
    Real err(wp);
    Real tail = detail::em_tail(sw, x, wp, err);
    Real v = head + tail;
    err += abs(v) * ulp_scale(wp - 8, wp);
    return {v.with_precision(prec), err.with_precision(prec), true};
}

inline Estimate hurwitz_zeta(long s, const Real& a, long prec) { return hurwitz_zeta(Real(s, prec), a, prec); }

// Riemann zeta for real s > 1.
inline Estimate zeta_num(const Real& s, long prec) {
    if (!(s > Real(1L, prec))) throw std::domain_error("zeta_num needs s > 1");
    return hurwitz_zeta(s, Real(1L, prec), prec);
}

inline Real zeta_num(long s, long prec) { return zeta_num(Real(s, prec), prec).value; }

// zeta(a,b) = sum_{m,n>=1} (m+n)^-a n^-b.
inline Estimate double_zeta_num(long a, long b, long prec) {
    if (a < 2 || b < 1) throw std::domain_error("double_zeta_num needs a >= 2, b >= 1");
    const long wp = prec + 40;
    const long N0 = std::max(64L, wp / 2);
    // Head: n < N0 with t_n = sum_{m>n} m^{-a} tracked by subtraction.
    Real t = zeta_num(a, wp);
    Real head(wp);
    for (long n = 1; n < N0; ++n) {
        Real nn(n, wp);
        t -= pow(nn, -a);
        head += t * pow(nn, -b);
    }
    // Tail: expand sum_{m>n} m^{-a} in powers of 1/n and sum each power by Hurwitz.
    const Real n0(N0, wp);
    Real err(wp);
    Real tail = hurwitz_zeta(a + b - 1, n0, wp).value / (a - 1) - hurwitz_zeta(a + b, n0, wp).value / 2;
    Rational rising(a);  // (a)_{2j-1}
    const Real eps = ulp_scale(wp, wp);
    Real prev(wp);
    for (long j = 1; j < 200; ++j) {
        Rational c = bernoulli(2 * j) / Rational(factorial(2 * j)) * rising;
        Real term = Real(c, wp) * hurwitz_zeta(a + b + 2 * j - 1, n0, wp).value;
        if (j > 1 && abs(term) > prev) break;
        tail += term;
        prev = abs(term);
        if (prev <= eps * abs(tail)) break;
        rising *= Rational((a + 2 * j - 1) * (a + 2 * j));
    }
    err = 2 * prev + abs(head + tail) * ulp_scale(wp - 16, wp);
    Real v = head + tail;
    return {v.with_precision(prec), err.with_precision(prec), true};
}

// Memoised zeta(n), zeta(a,b) and pi at fixed precision; safe to share.
class ZetaValues {
public:
    explicit ZetaValues(long prec) : prec_(prec) {}

    long precision() const { return prec_; }

    Real single(int n) {
        std::lock_guard lock(mu_);
        auto it = single_.find(n);
        if (it != single_.end()) return it->second;
        Real v = zeta_num(long(n), prec_ + 16).with_precision(prec_);
        single_.emplace(n, v);
        return v;
    }

    Real pair(int a, int b) {
        std::lock_guard lock(mu_);
        auto it = pair_.find({a, b});
        if (it != pair_.end()) return it->second;
        Real v = double_zeta_num(a, b, prec_ + 16).value.with_precision(prec_);
        pair_.emplace(std::make_pair(a, b), v);
        return v;
    }

    Real pi() { return Real::pi(prec_); }

    Real monomial(const ZetaMonomial& m) {
        Real v = pow(pi(), long(m.pi_power()));
        for (int n : m.odd_factors()) v *= single(n);
        for (auto& d : m.double_factors()) v *= pair(d.first, d.second);
        return v;
    }

    Real evaluate(const SymbolicConstant& c) {
        Real v(prec_);
        for (auto& [m, coef] : c.terms()) v += Real(coef, prec_) * monomial(m);
        return v;
    }

private:
    long prec_;
    std::mutex mu_;
    std::map<int, Real> single_;
    std::map<std::pair<int, int>, Real> pair_;
};

// Numeric value of a symbolic constant at `prec` bits.
inline Real evaluate(const SymbolicConstant& c, long prec) {
    ZetaValues z(prec + 16);
    return z.evaluate(c).with_precision(prec);
}

// Value of a Laurent polynomial at tau2 (any variable tag).
inline Real evaluate_laurent(const LaurentPolynomial& p, const Real& tau2, ZetaValues& z) {
    const long prec = z.precision();
    LaurentPolynomial py = convert_variable(p, Variable::y);
    const Real y = Real::pi(prec) * tau2.with_precision(prec);
    Real v(prec);
    for (auto& [k, c] : py.coeffs()) v += z.evaluate(c) * pow(y, long(k));
    return v;
}

inline Real evaluate_laurent(const LaurentPolynomial& p, const Real& tau2, long prec) {
    ZetaValues z(prec + 16);
    return evaluate_laurent(p, tau2, z).with_precision(prec);
}

}  // namespace mgf
