#pragma once

#include "mgf/algebra/symbolic.hpp"
#include "mgf/exact/combinatorics.hpp"

#include <stdexcept>

namespace mgf {

// phi_l = -(2l+2) E_{2l+1}(0); always an integer.
inline Rational phi_coeff(long l) {
    if (l < 0) throw std::domain_error("phi_coeff needs l >= 0");
    Rational r = -Rational(2 * l + 2) * euler_at_zero(2 * l + 1);
    if (!r.is_integer()) throw SymbolicGuardError("phi_" + std::to_string(l) + " is not an integer");
    return r;
}

// phi_l Gamma(2M+2l) / ((2l+2)! Gamma(2M-1)).
inline Rational st_weight(long M, long l) {
    return phi_coeff(l) * Rational(factorial(2 * M + 2 * l - 1), factorial(2 * l + 2) * factorial(2 * M - 2));
}

namespace detail {
inline void require_MN(long M, long N) {
    if (M < 2) throw std::domain_error("need M >= 2");
    if (N < 0) throw std::domain_error("need N >= 0");
}
}  // namespace detail

inline SymbolicConstant S_value(long M, long N) {
    detail::require_MN(M, N);
    SymbolicConstant s = SymbolicConstant::zeta(int(2 * M - 1), int(2 * N + 1));
    for (long l = 0; l < N; ++l) s += SymbolicConstant::zeta(int(2 * M + 2 * l), int(2 * N - 2 * l)) * st_weight(M, l);
    return s;
}

inline SymbolicConstant T_value(long M, long N) {
    detail::require_MN(M, N);
    if (N < 1) throw std::domain_error("T_value needs N >= 1 (N = 0 would contain zeta(1, 2M-1))");
    SymbolicConstant s = SymbolicConstant::zeta(int(2 * N + 1), int(2 * M - 1));
    for (long l = 0; l < N; ++l) s += SymbolicConstant::zeta(int(2 * N - 2 * l), int(2 * M + 2 * l)) * st_weight(M, l);
    return s;
}

inline SymbolicConstant S_reduce_N0(long M) {
    detail::require_MN(M, 0);
    SymbolicConstant s = SymbolicConstant::zeta(int(2 * M)) * Rational(2 * M - 1, 2);
    for (long j = 1; j <= 2 * M - 3; ++j) s -= zeta_product(int(j + 1), int(2 * M - 1 - j), Rational(1, 2));
    return s;
}

// Coefficient of (-1)^(alpha+1) zeta(alpha) zeta(2M+2N-alpha) per unit, without the sign.
inline Rational t_inner(long alpha, long M, long N) {
    Rational c;
    for (long n = 0; n < 2 * N; ++n) {
        Rational e = euler_at_zero(n);
        if (e.is_zero()) continue;
        c += e * Rational(binom(alpha - 1, 2 * N - n) * binom(2 * M + n - 2, n));
    }
    return c / Rational(2);
}

inline SymbolicConstant T_reduce(long M, long N) {
    detail::require_MN(M, N);
    if (N < 1) throw std::domain_error("T_reduce needs N >= 1");
    SymbolicConstant s;
    for (long al = 2; al <= 2 * M + 2 * N - 2; ++al) {
        Rational c = t_inner(al, M, N);
        if (c.is_zero()) continue;
        s += zeta_product(int(al), int(2 * M + 2 * N - al), c * Rational(parity_sign(al + 1)));
    }
    return s;
}

// S(M,N) reduced to products of single zeta values.
inline SymbolicConstant S_reduce(long M, long N) {
    if (N == 0) return S_reduce_N0(M);
    detail::require_MN(M, N);
    SymbolicConstant s = -T_reduce(M, N);
    s += zeta_product(int(2 * M - 1), int(2 * N + 1));
    s -= SymbolicConstant::zeta(int(2 * M + 2 * N));
    for (long l = 0; l < N; ++l) {
        Rational c = st_weight(M, l);
        s += zeta_product(int(2 * M + 2 * l), int(2 * N - 2 * l), c);
        s -= SymbolicConstant::zeta(int(2 * M + 2 * N)) * c;
    }
    return s;
}

// Right-hand side of the S + T relation for N >= 1.
inline SymbolicConstant S_plus_T(long M, long N) {
    detail::require_MN(M, N);
    if (N < 1) throw std::domain_error("S_plus_T needs N >= 1");
    SymbolicConstant s = zeta_product(int(2 * M - 1), int(2 * N + 1)) - SymbolicConstant::zeta(int(2 * M + 2 * N));
    for (long l = 0; l < N; ++l)
        s += (zeta_product(int(2 * M + 2 * l), int(2 * N - 2 * l)) - SymbolicConstant::zeta(int(2 * M + 2 * N))) *
             st_weight(M, l);
    return s;
}

// f_alpha(M,N): coefficients of 1/(m^alpha n^(2M+2N-alpha)) in the partial
// fraction expansion of the S/T summand.
inline Rational f_alpha(long alpha, long M, long N) {
    Rational c;
    for (long n = 0; n < 2 * N; ++n)
        c += euler_at_zero(n) * Rational(binom(alpha - 1, 2 * N - n) * binom(2 * M + n - 2, n));
    return c * Rational(parity_sign(alpha + 1));
}

}  // namespace mgf
