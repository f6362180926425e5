#pragma once

#include "mgf/algebra/symbolic.hpp"

namespace mgf {

// Replaces every occurrence of the double factor `target` by `replacement`.
inline SymbolicConstant substitute(const SymbolicConstant& c, DoubleIndex target,
                                   const SymbolicConstant& replacement) {
    SymbolicConstant out;
    for (auto& [m, coef] : c.terms()) {
        std::vector<DoubleIndex> rest;
        int hits = 0;
        for (auto& d : m.double_factors()) {
            if (d == target) ++hits;
            else rest.push_back(d);
        }
        if (hits == 0) { out.add(m, coef); continue; }
        SymbolicConstant term(ZetaMonomial(m.pi_power(), m.odd_factors(), rest), coef);
        for (int i = 0; i < hits; ++i) term = term * replacement;
        out += term;
    }
    return out;
}

// A single elimination rule zeta(a,b) -> replacement.
struct RewriteRule {
    DoubleIndex target;
    SymbolicConstant replacement;

    SymbolicConstant apply(const SymbolicConstant& c) const { return substitute(c, target, replacement); }
};

// Reflection zeta(s,t) + zeta(t,s) = zeta(s) zeta(t) - zeta(s+t).
// For s != t the rule eliminates zeta(t,s) in favour of zeta(s,t);
// for s == t it solves for zeta(s,s).
inline RewriteRule stuffle_reflect(int s, int t) {
    if (s == 1 || t == 1) throw ZetaOneError("reflection with an argument 1");
    if (s < 2 || t < 2) throw std::domain_error("stuffle_reflect needs s, t >= 2");
    SymbolicConstant prod = zeta_product(s, t) - SymbolicConstant::zeta(s + t);
    if (s == t) return {{s, s}, prod * Rational(1, 2)};
    return {{t, s}, prod - SymbolicConstant::zeta(s, t)};
}

// zeta(s,1) = (s/2) zeta(s+1) - 1/2 sum_{j=1}^{s-2} zeta(j+1) zeta(s-j).
inline SymbolicConstant euler_s1_reduce(int s) {
    if (s < 2) throw std::domain_error("euler_s1_reduce needs s >= 2");
    SymbolicConstant r = SymbolicConstant::zeta(s + 1) * Rational(s, 2);
    for (int j = 1; j <= s - 2; ++j) r -= zeta_product(j + 1, s - j, Rational(1, 2));
    return r;
}

inline RewriteRule euler_s1_rule(int s) { return {{s, 1}, euler_s1_reduce(s)}; }

}  // namespace mgf
