#pragma once

#include "mgf/exact/combinatorics.hpp"

#include <stdexcept>

namespace mgf {

// 1/(z^a (1+z)^b) = sum_k A_k/z^k + sum_k B_k/(1+z)^k.
inline Integer pf_A(long k, long a, long b) {
    if (a < 1 || b < 1) throw std::domain_error("pf_A needs a, b >= 1");
    if (k < 1 || k > a) return Integer(0);
    return parity_sign(a + k) * binom(a + b - k - 1, a - k);
}

inline Integer pf_B(long k, long a, long b) {
    if (a < 1 || b < 1) throw std::domain_error("pf_B needs a, b >= 1");
    if (k < 1 || k > b) return Integer(0);
    return parity_sign(a) * binom(a + b - k - 1, b - k);
}

// Residue coefficients g_{a1,a2}(alpha, beta).
inline Integer g_coeff(long a1, long a2, long alpha, long beta) {
    if (a1 < 1 || a2 < 1) throw std::domain_error("g_coeff needs a1, a2 >= 1");
    if (alpha < 0 || beta < 0) throw std::domain_error("g_coeff needs alpha, beta >= 0");
    return parity_sign(a1) * binom(2 * a1 - 2 - alpha - beta, a1 - 1) * binom(a2 + alpha - 1, a2 - 1) *
           binom(a2 + beta - 1, a2 - 1);
}

}  // namespace mgf
