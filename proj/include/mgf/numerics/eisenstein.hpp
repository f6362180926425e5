#pragma once

#include "mgf/algebra/laurent_polynomial.hpp"
#include "mgf/exact/combinatorics.hpp"
#include "mgf/numerics/lattice.hpp"
#include "mgf/numerics/zeta.hpp"

#include <stdexcept>

namespace mgf {

// P_w(x) = sum_{m=0}^{w-1} (w+m-1)! / (m! (w-m-1)! x^m).
inline Rational p_polynomial(int w, const Rational& x) {
    if (w < 1) throw std::domain_error("p_polynomial needs w >= 1");
    if (x.is_zero()) throw std::domain_error("p_polynomial needs x != 0");
    Rational s;
    for (int m = 0; m < w; ++m)
        s += Rational(factorial(w + m - 1), factorial(m) * factorial(w - m - 1)) / pow(x, m);
    return s;
}

inline Real p_polynomial(int w, const Real& x) {
    if (w < 1) throw std::domain_error("p_polynomial needs w >= 1");
    if (x.is_zero()) throw std::domain_error("p_polynomial needs x != 0");
    const long prec = x.precision();
    Real s(prec), inv = 1 / x, xp(1L, prec);
    for (int m = 0; m < w; ++m) {
        s += Real(Rational(factorial(w + m - 1), factorial(m) * factorial(w - m - 1)), prec) * xp;
        xp *= inv;
    }
    return s;
}

// Laurent part of E_w in y = pi tau2.
inline LaurentPolynomial eisenstein_laurent(int w) {
    if (w < 2) throw std::domain_error("eisenstein_laurent needs w >= 2");
    LaurentPolynomial p(Variable::y, w);
    p.add(w, SymbolicConstant(-bernoulli(2 * w) / Rational(factorial(2 * w)) * Rational(pow_int(-4, unsigned(w)))));
    Rational c = Rational(4) * Rational(factorial(2 * w - 3), factorial(w - 2) * factorial(w - 1)) *
                 pow(Rational(4), 1 - w);
    p.add(1 - w, SymbolicConstant::zeta(2 * w - 1) * c);
    return p;
}

// E_w(tau) from its Fourier series with K nonzero modes.
inline Estimate eisenstein_num(int w, const ModulusPoint& tau, int K, long prec) {
    if (w < 2) throw std::domain_error("eisenstein_num needs w >= 2");
    if (K < 1) throw std::domain_error("eisenstein_num needs K >= 1");
    const long wp = prec + 16;
    const Real pi = Real::pi(wp);
    const Real t1(tau.tau1, wp), t2(tau.tau2, wp);
    Real v = evaluate_laurent(eisenstein_laurent(w), t2, wp);
    const Real pref = Real(Rational(2) / Rational(factorial(w - 1)), wp);
    auto bound_term = [&](long k) {  // |cos| <= 1, sigma_{1-2w}(k) <= zeta(2w-1)
        Real kk(k, wp);
        return 2 * pref * pow(kk, long(w - 1)) * zeta_num(long(2 * w - 1), wp) * exp(-2 * pi * kk * t2) *
               p_polynomial(w, 4 * pi * kk * t2);
    };
    for (long k = 1; k <= K; ++k) {
        Real kk(k, wp);
        Real sig(divisor_sigma(1 - 2 * w, k), wp);
        v += pref * pow(kk, long(w - 1)) * sig * 2 * cos(2 * pi * kk * t1) * exp(-2 * pi * kk * t2) *
             p_polynomial(w, 4 * pi * kk * t2);
    }
    // Geometric majorant for the omitted modes.
    Real b = bound_term(K + 1);
    Real ratio = pow(Real(double(K + 2) / double(K + 1), wp), long(w - 1)) * exp(-2 * pi * t2);
    Estimate e{v.with_precision(prec), Real(prec), true};
    if (ratio >= Real(1L, wp)) {
        e.error = Real(1e300, prec);
        e.converged = false;
    } else {
        e.error = (2 * b / (1 - ratio) + abs(v) * ulp_scale(prec - 8, wp)).with_precision(prec);
    }
    return e;
}

}  // namespace mgf
