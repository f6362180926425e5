#pragma once

#include "mgf/algebra/laurent_polynomial.hpp"
#include "mgf/algebra/symbolic.hpp"
#include "mgf/exact/graph_index.hpp"
#include "mgf/laurent/partial_fractions.hpp"

#include <map>
#include <string>

namespace mgf {

// Coefficient of u^w in the constant mode is (-1)^w times this.
inline Rational coeff_top(const Triple& t) {
    require_laurent_triple(t);
    const long w = t.weight();
    Rational total;
    const long pq[2][2] = {{t.a2, t.a3}, {t.a3, t.a2}};
    for (auto& row : pq) {
        const long p = row[0], q = row[1];
        for (long k = 0; k <= p; ++k) {
            Rational b = bernoulli(2 * k) * bernoulli(2 * w - 2 * k);
            if (b.is_zero()) continue;
            total += b / Rational(factorial(2 * k) * factorial(2 * w - 2 * k)) *
                     Rational(factorial(2 * p + 2 * q - 2 * k - 1), factorial(2 * q - 1) * factorial(2 * p - 2 * k));
        }
    }
    return total;
}

// The Laurent-polynomial part obtained from the contour integral route,
// symmetrised over all orderings.
struct KLParts {
    int weight = 0;
    std::map<int, Rational> zeta;  // j -> coefficient of zeta(2j+1) u^(w-2j-1)
    Integer c0;                    // coefficient of (-1)^w zeta(2w-2) u^(2-w)
};

namespace detail {

inline void kl_single(const Triple& t, KLParts& out) {
    const long a1 = t.a1, a2 = t.a2, a3 = t.a3;
    const long w = a1 + a2 + a3;
    for (long al = 0; al < a1; ++al) {
        for (long be = 0; be < a1 - al; ++be) {
            const Integer g = g_coeff(a1, a2, al, be);
            if (g == 0) continue;
            const long a = a2 + 2 * a3 + be, b = a2 + al;
            out.c0 += g * pf_B(1, a, b);

            Rational top(factorial(2 * a2 + 2 * a3 + al + be - 1), factorial(a) * factorial(b - 1));
            top *= Rational(2 * parity_sign(a2 + be) * parity_sign(w - 1));
            out.zeta[int(w - 1)] += top * Rational(g);

            for (long k = 1; k <= a3 + (a2 + be) / 2; ++k) {
                const Integer A = pf_A(2 * k, a, b);
                if (A == 0) continue;
                const long j = w - 1 - k;
                Rational term = Rational(-4 * parity_sign(k) * parity_sign(w - 1 - 2 * k)) *
                                zeta_even_pi_power(k) / Rational(pow_int(4, static_cast<unsigned long>(k))) *
                                Rational(A) * Rational(g);
                if (j < 1) throw ZetaOneError("contour route requested zeta(1) for " + t.index().str());
                out.zeta[int(j)] += term;
            }
        }
    }
}

}  // namespace detail

inline KLParts kl_parts(const Triple& t) {
    require_laurent_triple(t);
    KLParts out;
    out.weight = t.weight();
    for (const Triple& p : t.permutations()) detail::kl_single(p, out);
    for (auto it = out.zeta.begin(); it != out.zeta.end();)
        it = it->second.is_zero() ? out.zeta.erase(it) : std::next(it);
    return out;
}

// Tower coefficient c_{w-2k-1} of zeta(2k+1) u^(w-2k-1), contour-integral route.
inline Rational coeff_zeta(const Triple& t, int k) {
    require_laurent_triple(t);
    if (k < 1 || k > t.weight() - 1) throw std::domain_error("coeff_zeta: k out of range 1..w-1");
    auto parts = kl_parts(t);
    auto it = parts.zeta.find(k);
    return it == parts.zeta.end() ? Rational(0) : it->second;
}

// Same coefficient from the closed theta-gated sum; kept as a cross-check.
inline Rational coeff_zeta_gated(const Triple& t, int k) {
    require_laurent_triple(t);
    const long w = t.weight();
    if (k < 1 || k > w - 1) throw std::domain_error("coeff_zeta_gated: k out of range 1..w-1");
    Integer total;
    for (const Triple& p : t.permutations()) {
        const long b1 = p.a1, b2 = p.a2, b3 = p.a3;
        for (long al = 0; al < b1; ++al)
            for (long be = 0; be < b1 - al; ++be) {
                if (b3 + (b2 + be) / 2 - w + k + 1 < 0) continue;
                total += parity_sign(b1 + b3 + be + 1) * g_coeff(b1, b2, al, be) *
                         binom(2 * k - 2 * b1 + al + be + 1, b2 + al - 1);
            }
    }
    return Rational(2) * bernoulli(2 * w - 2 * k - 2) / Rational(factorial(2 * w - 2 * k - 2)) * Rational(total);
}

enum class C0Formula { amended, printed };

// Integer multiplying (-1)^w zeta(2w-2) in the bottom coefficient.
inline Integer coeff_c0_bottom(const Triple& t, C0Formula f = C0Formula::amended) {
    require_laurent_triple(t);
    Integer total;
    auto one = [&](const Triple& p, long shift) {
        for (long al = 0; al < p.a1; ++al)
            for (long be = 0; be < p.a1 - al; ++be)
                total += parity_sign(p.a2 + be) * g_coeff(p.a1, p.a2, al, be) *
                         binom(2 * p.a2 + 2 * p.a3 + al + be - shift, p.a2 + al - 1);
    };
    if (f == C0Formula::printed) {
        one(t, 0);
    } else {
        for (const Triple& p : t.permutations()) one(p, 2);
    }
    return total;
}

// Z(a1,a2,a3) as an integer combination of zeta(2w-k-l-1, k+l-1).
inline SymbolicConstant double_zeta_Z(const Triple& t) {
    require_laurent_triple(t);
    const long a1 = t.a1, a2 = t.a2, w = t.weight();
    SymbolicConstant z;
    for (long k = 1; k <= a1; ++k)
        for (long l = 1; l <= a1; ++l) {
            Integer c = binom(a1 + a2 - k - 1, a2 - 1) * binom(a1 + a2 - l - 1, a2 - 1) * binom(k + l - 2, k - 1) *
                        binom(2 * w - k - l - 2, w - k - 1);
            if (c != 0) z.add(ZetaMonomial::double_zeta(int(2 * w - k - l - 1), int(k + l - 1)), Rational(c));
        }
    return z;
}

// c_{2-w} over double zeta symbols and pi^(2w-2), unreduced.
inline SymbolicConstant coeff_bottom(const Triple& t) {
    require_laurent_triple(t);
    const int w = t.weight();
    SymbolicConstant c = SymbolicConstant::zeta(2 * w - 2) * Rational(parity_sign(w) * coeff_c0_bottom(t));
    for (const Triple& p : t.permutations()) c += double_zeta_Z(p) * Rational(2);
    return c;
}

// Contour-route Laurent part in u: the odd zeta tower and the zeta(2w-2) piece.
inline LaurentPolynomial kl_laurent_part(const Triple& t) {
    auto parts = kl_parts(t);
    const int w = parts.weight;
    LaurentPolynomial p(Variable::u, w);
    for (auto& [j, c] : parts.zeta) {
        if (2 * j + 1 == 1) throw ZetaOneError("contour route");
        p.add(w - 2 * j - 1, SymbolicConstant::zeta(2 * j + 1) * c);
    }
    p.add(2 - w, SymbolicConstant::zeta(2 * w - 2) * Rational(parity_sign(w) * parts.c0));
    return p;
}

}  // namespace mgf
