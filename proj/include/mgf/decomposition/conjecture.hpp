#pragma once

#include "mgf/decomposition/lemma.hpp"
#include "mgf/exact/graph_index.hpp"
#include "mgf/laurent/theorem1.hpp"

#include <map>
#include <vector>

namespace mgf {

// Z_alpha(a1,a2,a3); zero when the k range is empty.
inline Integer Z_alpha(long alpha, const Triple& t) {
    if (alpha < 0) throw std::domain_error("Z_alpha needs alpha >= 0");
    const long a1 = t.a1, a3 = t.a3, w = t.weight();
    const long kp = std::min(a1, 2 * alpha + 1), km = std::max(1L, 2 * alpha + 2 - a1);
    Integer s;
    for (long k = km; k <= kp; ++k)
        s += binom(a1 + a3 - k - 1, a3 - 1) * binom(a1 + a3 - 2 * alpha + k - 3, a3 - 1) * binom(2 * alpha, k - 1) *
             binom(2 * w - 2 * alpha - 4, w - k - 1);
    return s;
}

// Test hook: perturbs one Euler coefficient so the sweep harness can be
// shown to detect a nonzero X_n.
enum class XFault { none, flip_leading_euler };

// X_n(a1,a2,a3), symmetrised in a2 <-> a3.
inline Rational X_value(long n, const Triple& t, XFault fault = XFault::none) {
    if (n < 1 || n > t.a1 - 1) throw std::domain_error("X_value needs 1 <= n <= a1-1");
    const long a1 = t.a1, w = t.weight();
    Rational total;
    for (const Triple& p : {t, Triple{t.a1, t.a3, t.a2}}) {
        const long b2 = p.a2;
        for (long l = n; l < a1; ++l) {
            Rational e = euler_at_zero(2 * l - 2 * n + 1);
            if (fault == XFault::flip_leading_euler && l == n) e = -e;
            total += e * Rational(Z_alpha(l, p) * binom(2 * w - 2 * n - 3, 2 * w - 2 * l - 4));
        }
        const long kp = std::min(a1, 2 * n), km = std::max(1L, 2 * n - a1 + 1);
        for (long k = km; k <= kp; ++k)
            total += Rational(binom(a1 + b2 - k - 1, b2 - 1) * binom(a1 + b2 - 2 * n + k - 2, b2 - 1) *
                              binom(2 * n - 1, k - 1) * binom(2 * w - 2 * n - 3, w - k - 1));
    }
    return total;
}

// Same quantity after the change of variables n -> a1-n, l -> a1-l; returns X_n.
inline Rational X_value_second_form(long n, const Triple& t) {
    if (n < 1 || n > t.a1 - 1) throw std::domain_error("X_value_second_form needs 1 <= n <= a1-1");
    const long a1 = t.a1, m = a1 - n;
    Rational total;
    for (const Triple& p : {t, Triple{t.a1, t.a3, t.a2}}) {
        const long b2 = p.a2, b3 = p.a3;
        for (long k = 0; k < a1; ++k)
            for (long l = 0; l < a1; ++l) {
                const long e = 2 * m - k - l - 1;
                if (e < 0) continue;
                Rational E = euler_at_zero(e);
                if (E.is_zero()) continue;
                total += E * Rational(binom(b2 - 1 + k, k) * binom(b2 - 1 + l, l) * binom(2 * a1 - k - l - 2, a1 - k - 1) *
                                      binom(2 * b2 + 2 * b3 + k + l - 2, b2 + b3 + k - 1) *
                                      binom(2 * b2 + 2 * b3 + 2 * m - 3, e));
            }
    }
    return total;
}

// c_{2-w} written as a combination of zeta(2k+1) zeta(2w-2k-3).
struct OddPairDecomposition {
    int weight = 0;                  // 2w - 2
    std::vector<Rational> raw;       // raw[k-1] = gamma_k, k = 1..w-2, paired as (1/2) gamma_k
    std::map<DoubleIndex, Rational> folded;  // (s,t), s <= t: coefficient of zeta(s) zeta(t)

    bool integral() const {
        for (auto& g : raw)
            if (!g.is_integer()) return false;
        return true;
    }

    SymbolicConstant value() const {
        SymbolicConstant c;
        for (auto& [st, coef] : folded) c += zeta_product(st.first, st.second, coef);
        return c;
    }
};

namespace detail {

inline std::map<DoubleIndex, Rational> fold_gamma(const std::vector<Rational>& raw, int w) {
    std::map<DoubleIndex, Rational> folded;
    for (int k = 1; k <= w - 2; ++k) {
        const Rational& g = raw[std::size_t(k - 1)];
        if (g.is_zero()) continue;
        int s = 2 * k + 1, t = 2 * w - 2 * k - 3;
        if (t == 1) throw ZetaOneError("gamma_" + std::to_string(k) + " pairs with zeta(1)");
        if (s > t) std::swap(s, t);
        folded[{s, t}] += g / Rational(2);
    }
    for (auto it = folded.begin(); it != folded.end();) it = it->second.is_zero() ? folded.erase(it) : std::next(it);
    return folded;
}

}  // namespace detail

enum class GammaFormula { corrected, printed };

// gamma_k for k = 1..w-2. The corrected form subtracts the Euler sum, doubles
// the bracket and leaves the zeta(1) slot k = w-2 at zero.
inline std::vector<Rational> gamma_raw(const Triple& t, GammaFormula f = GammaFormula::corrected) {
    require_laurent_triple(t);
    const long w = t.weight();
    std::vector<Rational> raw(std::size_t(w - 2));
    const long kmax = (f == GammaFormula::corrected) ? w - 3 : w - 2;
    const int sgn = (f == GammaFormula::corrected) ? -1 : 1;
    for (long k = 1; k <= kmax; ++k) {
        Rational tot;
        for (const Triple& p : t.permutations()) {
            if (p.a1 - 1 - k >= 0) tot += Rational(2 * Z_alpha(k, p));
            tot -= Rational(Z_alpha(0, p));
            for (long al = 1; al < p.a1; ++al) {
                Integer za = Z_alpha(al, p);
                if (za == 0) continue;
                Rational inner;
                for (long n = 0; n < 2 * al; ++n) {
                    Rational e = euler_at_zero(n);
                    if (!e.is_zero()) inner += e * Rational(binom(2 * k, 2 * al - n) * binom(2 * w - 2 * al + n - 4, n));
                }
                tot += Rational(sgn * za) * inner;
            }
        }
        raw[std::size_t(k - 1)] = (f == GammaFormula::corrected) ? Rational(2) * tot : tot;
    }
    return raw;
}

inline OddPairDecomposition gamma_coeffs(const Triple& t) {
    OddPairDecomposition d;
    d.weight = 2 * t.weight() - 2;
    d.raw = gamma_raw(t, GammaFormula::corrected);
    d.folded = detail::fold_gamma(d.raw, t.weight());
    return d;
}

// c_{2-w} through S(w-1-n, n) and its reduction. The pi^(2w-2) part must cancel.
inline SymbolicConstant c_bottom_reduced_symbolic(const Triple& t) {
    require_laurent_triple(t);
    const int w = t.weight();
    SymbolicConstant c = SymbolicConstant::zeta(2 * w - 2) * Rational(parity_sign(w) * coeff_c0_bottom(t));
    for (const Triple& p : t.permutations())
        for (long n = 0; n < p.a1; ++n) {
            Integer z = Z_alpha(n, p);
            if (z != 0) c += S_reduce(w - 1 - n, n) * Rational(2 * z);
        }
    return c;
}

inline OddPairDecomposition c_bottom_reduced(const Triple& t) {
    const int w = t.weight();
    SymbolicConstant c = c_bottom_reduced_symbolic(t);
    OddPairDecomposition d;
    d.weight = 2 * w - 2;
    for (auto& [m, coef] : c.terms()) {
        if (m.pi_power() != 0 || m.has_double() || m.odd_factors().size() != 2)
            throw SymbolicGuardError("bottom coefficient of " + t.index().str() +
                                     " keeps a term outside the odd-pair span (pi power " +
                                     std::to_string(m.pi_power()) + ")");
        d.folded[{m.odd_factors()[0], m.odd_factors()[1]}] = coef;
    }
    // Symmetric representative: gamma_k = gamma_{w-2-k}.
    d.raw.assign(std::size_t(w - 2), Rational(0));
    for (auto& [st, coef] : d.folded) {
        int k = (st.first - 1) / 2, kk = (st.second - 1) / 2;
        if (k == kk) d.raw[std::size_t(k - 1)] = Rational(2) * coef;
        else d.raw[std::size_t(k - 1)] = d.raw[std::size_t(kk - 1)] = coef;
    }
    return d;
}

}  // namespace mgf
