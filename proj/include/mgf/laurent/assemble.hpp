#pragma once

#include "mgf/decomposition/conjecture.hpp"
#include "mgf/laurent/theorem1.hpp"

namespace mgf {

enum class BottomForm {
    reduced,      // odd-zeta pairs
    double_zeta,  // unreduced depth-two symbols
};

// Full Laurent polynomial of the constant mode of C_{a1,a2,a3} in u = 4 pi tau2.
inline LaurentPolynomial laurent(const Triple& t, BottomForm bottom = BottomForm::reduced) {
    require_laurent_triple(t);
    const int w = t.weight();
    LaurentPolynomial p(Variable::u, w);
    p.add(w, SymbolicConstant(coeff_top(t) * Rational(parity_sign(w))));
    for (auto& [j, c] : kl_parts(t).zeta) p.add(w - 2 * j - 1, SymbolicConstant::zeta(2 * j + 1) * c);
    p.add(2 - w, bottom == BottomForm::reduced ? c_bottom_reduced(t).value() : coeff_bottom(t));
    return p;
}

}  // namespace mgf
