#pragma once

#include "mgf/laurent/partial_fractions.hpp"
#include "mgf/numerics/quadrature.hpp"
#include "mgf/numerics/real.hpp"

#include <stdexcept>
#include <vector>

namespace mgf {

// G(mu)/pi = P(mu) / (mu^mu_power (1+4mu^2)^quad_power), valid for mu > 0.
struct GRationalForm {
    std::vector<Rational> numerator;  // ascending powers of mu
    int mu_power = 0;
    int quad_power = 0;

    Real eval(const Real& mu) const {
        Real m = abs(mu);
        Real p(m.precision());
        for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) p = p * m + Real(*it, m.precision());
        Real q = 1 + 4 * m * m;
        return Real::pi(m.precision()) * p / (pow(m, mu_power) * pow(q, quad_power));
    }
};

namespace detail {

struct GaussRational {
    Rational re, im;
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

using GaussPoly = std::vector<GaussRational>;

inline GaussPoly mul(const GaussPoly& a, const GaussPoly& b) {
    GaussPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline GaussPoly power(const GaussPoly& p, int n) {
    GaussPoly r{{Rational(1), Rational(0)}};
    for (int i = 0; i < n; ++i) r = mul(r, p);
    return r;
}

// (i)^(-e) as a Gaussian rational.
inline GaussRational inv_i_power(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(-1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(1)};
    }
}

}  // namespace detail

// Exact residue form, both orderings of (a1, a2) included.
inline GRationalForm g_rational_form(int a1, int a2) {
    if (a1 < 1 || a2 < 1) throw std::domain_error("G needs a1, a2 >= 1");
    struct Piece { Integer g; int e, n; };
    std::vector<Piece> pieces;
    for (int pass = 0; pass < 2; ++pass) {
        int b1 = pass ? a2 : a1, b2 = pass ? a1 : a2;
        for (int al = 0; al < b1; ++al)
            for (int be = 0; be < b1 - al; ++be) pieces.push_back({g_coeff(b1, b2, al, be), 2 * b1 - 1 - al - be, b2 + al});
    }
    int E = 0, D = 0;
    for (auto& p : pieces) E = std::max(E, p.e), D = std::max(D, p.n);

    // -i g / ((2i mu)^e (1+2i mu)^n) = -i g (1-2i mu)^n / ((2i)^e mu^e (1+4mu^2)^n)
    const detail::GaussPoly one_minus{{Rational(1), Rational(0)}, {Rational(0), Rational(-2)}};
    const detail::GaussPoly quad{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}, {Rational(4), Rational(0)}};
    detail::GaussPoly total(1, {Rational(0), Rational(0)});
    for (auto& p : pieces) {
        if (p.g == 0) continue;
        detail::GaussRational pref = detail::GaussRational{Rational(0), -Rational(p.g)} * detail::inv_i_power(p.e);
        pref.re /= Rational(pow_int(2, unsigned(p.e)));
        pref.im /= Rational(pow_int(2, unsigned(p.e)));
        detail::GaussPoly term = detail::mul(detail::power(one_minus, p.n), detail::power(quad, D - p.n));
        detail::GaussPoly shifted(std::size_t(E - p.e), {Rational(0), Rational(0)});
        for (auto& c : term) shifted.push_back(c * pref);
        if (shifted.size() > total.size()) total.resize(shifted.size(), {Rational(0), Rational(0)});
        for (std::size_t i = 0; i < shifted.size(); ++i) total[i] += shifted[i];
    }
    GRationalForm f;
    f.mu_power = E;
    f.quad_power = D;
    for (auto& c : total) f.numerator.push_back(Rational(2) * c.re);  // z + conj(z)
    while (!f.numerator.empty() && f.numerator.back().is_zero()) f.numerator.pop_back();
    return f;
}

inline Real G_closed(int a1, int a2, const Real& mu) {
    if (mu.is_zero()) throw std::domain_error("G_closed: mu = 0 is a pole");
    return g_rational_form(a1, a2).eval(mu);
}

// Direct quadrature of the defining integral, centred between the two peaks.
inline Estimate G_quad(int a1, int a2, const Real& mu, const Real& tol) {
    if (a1 < 1 || a2 < 1) throw std::domain_error("G needs a1, a2 >= 1");
    if (mu.is_zero()) throw std::domain_error("G_quad: mu = 0 is a pole");
    QuadratureOptions opt;
    opt.prec = mu.precision();
    const Real m2 = mu * mu;
    auto f = [&](const Real& u) {
        Real u1 = u + 1;
        return 1 / (pow(u * u + m2, a1) * pow(u1 * u1 + m2, a2));
    };
    return integrate_real_line(f, tol, opt, -0.5);
}

}  // namespace mgf
