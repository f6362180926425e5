// Prints exact Laurent polynomials for a few triples and compares each with
// the numerically integrated constant mode at one value of tau2.
#include "mgf/mgf.hpp"

#include <cmath>
#include <cstdio>

int main() {
    using namespace mgf;
    const double tau2 = 1.5;
    for (Triple t : {Triple{1, 1, 1}, Triple{2, 1, 1}, Triple{2, 2, 1}, Triple{3, 1, 1}}) {
        const LaurentPolynomial p = laurent(t);
        std::printf("%s = %s\n", t.index().str().c_str(), render(convert_variable(p, Variable::y)).c_str());
        const ConstantModeResult cm = constant_mode_num({t.a1, t.a2, t.a3}, tau2, 150);
        const double L = evaluate_laurent(p, Real(tau2, 128), 128).to_double();
        std::printf("  tau2 = %.2f: constant mode %.12f (+- %.1e), Laurent %.12f, difference %.2e\n", tau2, cm.value,
                    cm.error, L, cm.value - L);
    }
}
