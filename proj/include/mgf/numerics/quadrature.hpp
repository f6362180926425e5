#pragma once

#include "mgf/numerics/real.hpp"

#include <functional>

namespace mgf {

struct QuadratureOptions {
    long prec = kDefaultPrecision;
    int max_level = 14;    // step h = 2^-level
    double t_max = 7.0;    // hard cap on |t| in the DE variable
};

namespace detail {

// Node in the original variable and its Jacobian weight at DE abscissa t.
struct DENode {
    Real x, w;
};

// Generic double-exponential rule: sums over t = j*h, doubles the density
// each level and reuses previous nodes. Stops walking outward once three
// consecutive contributions fall below 2^-prec relative to the running sum.
template <class Map, class F>
Estimate de_quadrature(Map map, F f, const Real& tol, const QuadratureOptions& opt) {
    const long prec = opt.prec;
    const Real eps = ulp_scale(prec, prec);
    auto branch_sum = [&](long j0, long step, double h, Real& acc) {
        for (int dir : {1, -1}) {
            int small = 0;
            for (long j = (dir > 0 ? j0 : (j0 == 0 ? step : j0)); ; j += step) {
                double tj = double(j) * h * dir;
                if (std::abs(tj) > opt.t_max) break;
                if (j == 0 && dir < 0) continue;
                DENode n = map(Real(tj, prec));
                if (!n.x.is_finite() || !n.w.is_finite() || n.w.is_zero()) break;
                Real term = n.w * f(n.x);
                acc += term;
                if (abs(term) <= eps * abs(acc)) {
                    if (++small >= 3) break;
                } else {
                    small = 0;
                }
            }
        }
    };

    double h = 1.0;
    Real sum(prec);
    branch_sum(0, 1, h, sum);
    Real prev = sum * Real(h, prec);
    Real err(prec);
    for (int level = 1; level <= opt.max_level; ++level) {
        h /= 2;
        // new nodes are the odd multiples of the halved step
        Real add(prec);
        branch_sum(1, 2, h, add);
        sum += add;
        Real cur = sum * Real(h, prec);
        err = abs(cur - prev);
        prev = cur;
        if (level >= 3 && err <= tol) return {cur, err, true};
    }
    return {prev, err, false};
}

}  // namespace detail

// Integral over the real line with x = c + sinh(pi/2 sinh t).
template <class F>
Estimate integrate_real_line(F f, const Real& tol, const QuadratureOptions& opt = {}, double center = 0.0) {
    const long prec = opt.prec;
    const Real half_pi = Real::pi(prec) / 2;
    const Real c(center, prec);
    auto map = [&](const Real& t) {
        Real s = half_pi * sinh(t);
        return detail::DENode{c + sinh(s), half_pi * cosh(t) * cosh(s)};
    };
    return detail::de_quadrature(map, f, tol, opt);
}

// Integral over [a, inf) with x = a + exp(pi/2 sinh t).
template <class F>
Estimate integrate_half_line(F f, const Real& a, const Real& tol, const QuadratureOptions& opt = {}) {
    const long prec = opt.prec;
    const Real half_pi = Real::pi(prec) / 2;
    auto map = [&](const Real& t) {
        Real e = exp(half_pi * sinh(t));
        return detail::DENode{a + e, half_pi * cosh(t) * e};
    };
    return detail::de_quadrature(map, f, tol, opt);
}

// Integral over [a, b] with x = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh t).
template <class F>
Estimate integrate_interval(F f, const Real& a, const Real& b, const Real& tol, const QuadratureOptions& opt = {}) {
    const long prec = opt.prec;
    const Real half_pi = Real::pi(prec) / 2;
    const Real mid = (a + b) / 2, rad = (b - a) / 2;
    auto map = [&](const Real& t) {
        Real s = half_pi * sinh(t);
        Real ch = cosh(s);
        return detail::DENode{mid + rad * tanh(s), rad * half_pi * cosh(t) / (ch * ch)};
    };
    return detail::de_quadrature(map, f, tol, opt);
}

}  // namespace mgf
