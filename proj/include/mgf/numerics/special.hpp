#pragma once

#include "mgf/exact/combinatorics.hpp"
#include "mgf/numerics/quadrature.hpp"
#include "mgf/numerics/real.hpp"

#include <cmath>
#include <stdexcept>

namespace mgf {

// Upper incomplete gamma Gamma(a, x), x > 0, any real a. The seed at
// a0 = frac(a) (or a0 = 0 for negative integers, a0 = 1 for positive ones)
// is e^-x int_0^inf (x+s)^(a0-1) e^-s ds by exp-sinh quadrature; the
// recursion Gamma(b+1,x) = b Gamma(b,x) + x^b e^-x then walks to a.
inline Estimate incomplete_gamma(const Real& a, const Real& x, long prec) {
    if (!(x > Real(0L, prec))) throw std::domain_error("incomplete_gamma needs x > 0");
    const double ad = a.to_double(), xd = x.to_double();
    const double fl = std::floor(ad);
    const bool integral = (a == Real(fl, a.precision()));
    double a0d;
    if (integral) a0d = ad >= 1 ? 1.0 : 0.0;
    else a0d = ad - fl;
    const long steps = std::lround(std::fabs(ad - a0d));

    // Downward steps lose about log2(x/|b|) bits each to cancellation.
    double loss = 0;
    if (ad < a0d)
        for (long i = 1; i <= steps; ++i) loss += std::max(0.0, std::log2(xd / std::max(std::fabs(a0d - i), 0.5)));
    const long wp = prec + 32 + long(std::ceil(loss));

    const Real xw = x.with_precision(wp);
    Real a0 = integral ? Real(long(a0d), wp) : (a.with_precision(wp) - long(fl));
    const Real ex = exp(-xw);
    Real g(wp), err(wp);
    if (integral && a0d == 1.0) {
        g = ex;
    } else {
        QuadratureOptions opt;
        opt.prec = wp;
        const Real am1 = a0 - 1;
        auto f = [&](const Real& s) { return pow(xw + s, am1) * exp(-s); };
        Estimate q = integrate_half_line(f, Real(0L, wp), ulp_scale(wp - 8, wp), opt);
        g = ex * q.value;
        err = ex * q.error;
        if (!q.converged) return {g.with_precision(prec), err.with_precision(prec), false};
    }
    Real b = a0;
    if (ad > a0d) {
        for (long i = 0; i < steps; ++i) {  // b -> b+1
            g = b * g + pow(xw, b) * ex;
            err = abs(b) * err;
            b += 1;
        }
    } else {
        for (long i = 0; i < steps; ++i) {  // b -> b-1
            b -= 1;
            g = (g - pow(xw, b) * ex) / b;
            err = err / abs(b);
        }
    }
    err += abs(g) * ulp_scale(prec, wp);
    return {g.with_precision(prec), err.with_precision(prec), true};
}

// Decaying particular solution of (y^2 d^2/dy^2 - s(s-1)) phi = e^-y / y^m:
// y^s Gamma(-s-m,y)/(1-2s) + y^(1-s) Gamma(s-1-m,y)/(2s-1).
inline Real phi_sm(int s, int m, const Real& y) {
    if (s < 1) throw std::domain_error("phi_sm needs s >= 1");
    if (m < 0) throw std::domain_error("phi_sm needs m >= 0");
    if (!(y > Real(0L, y.precision()))) throw std::domain_error("phi_sm needs y > 0");
    const long prec = y.precision();
    const long wp = prec + 32 + long(std::ceil(std::log2(std::max(2.0, y.to_double()))));
    const Real yw = y.with_precision(wp);
    Real g1 = incomplete_gamma(Real(long(-s - m), wp), yw, wp).value;
    Real g2 = incomplete_gamma(Real(long(s - 1 - m), wp), yw, wp).value;
    Real v = pow(yw, long(s)) * g1 / (1 - 2 * s) + pow(yw, long(1 - s)) * g2 / (2 * s - 1);
    return v.with_precision(prec);
}

// (y^2 phi'' - s(s-1) phi) - e^-y/y^m by central differences with step h.
inline Real phi_sm_residual(int s, int m, const Real& y, const Real& h) {
    const Real p0 = phi_sm(s, m, y), pp = phi_sm(s, m, y + h), pm = phi_sm(s, m, y - h);
    const Real d2 = (pp - 2 * p0 + pm) / (h * h);
    return y * y * d2 - long(s) * long(s - 1) * p0 - exp(-y) / pow(y, long(m));
}

// Exponentially small part of the constant mode of C_{2,1,1}:
// -8 sum_n n^2 sigma_{-3}(n)^2 e^{-y_n}/y_n^2 with y_n = 4 pi tau2 n.
inline Estimate exp_part_C211(const Real& tau2, int n_max, long prec) {
    if (!(tau2 > Real(0L, prec))) throw std::domain_error("exp_part_C211 needs tau2 > 0");
    if (n_max < 1) throw std::domain_error("exp_part_C211 needs n_max >= 1");
    const long wp = prec + 16;
    const Real step = 4 * Real::pi(wp) * tau2.with_precision(wp);
    Real s(wp);
    for (long n = 1; n <= n_max; ++n) {
        Real sig(divisor_sigma(-3, n), wp);
        Real yn = step * n;
        s += Real(n * n, wp) * sig * sig * exp(-yn) / (yn * yn);
    }
    s *= -8;
    // sigma_{-3}(n) <= zeta(3) < 1.21, and n^2 / y_n^2 = 1/step^2.
    const Real q = exp(-step);
    Real tail = 8 * Real(1.21 * 1.21, wp) / (step * step) * pow(q, long(n_max + 1)) / (1 - q);
    return {s.with_precision(prec), tail.with_precision(prec), true};
}

}  // namespace mgf
