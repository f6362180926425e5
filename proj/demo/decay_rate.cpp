// Measures how fast the constant mode of C_{2,1,1} approaches its Laurent
// polynomial, in units of 2 pi tau2.
#include "mgf/mgf.hpp"

#include <cmath>
#include <cstdio>

int main() {
    using namespace mgf;
    const Triple t{2, 1, 1};
    const LaurentPolynomial p = laurent(t);
    double prev_t = 0, prev_d = 0;
    for (double tau2 : {0.5, 0.6, 0.7, 0.8}) {
        const ConstantModeResult cm = constant_mode_num({2, 1, 1}, tau2, 200);
        const double d = cm.value - evaluate_laurent(p, Real(tau2, 128), 128).to_double();
        std::printf("tau2 = %.2f  remainder %.6e (+- %.1e)", tau2, d, cm.error);
        if (prev_t > 0) {
            // Remove the algebraic prefactor tau2^-2 before taking the log slope.
            const double r = std::log((prev_d * prev_t * prev_t) / (d * tau2 * tau2)) / (2 * M_PI * (tau2 - prev_t));
            std::printf("  rate %.3f", r);
        }
        std::printf("\n");
        prev_t = tau2;
        prev_d = d;
    }
}
