#include "mgf/algebra/rewrite.hpp"
#include "mgf/decomposition/conjecture.hpp"
#include "mgf/decomposition/lemma.hpp"
#include "mgf/numerics/zeta.hpp"

#include <gtest/gtest.h>

using namespace mgf;

namespace {
SymbolicConstant z(int n) { return SymbolicConstant::zeta(n); }
SymbolicConstant zz(int a, int b) { return SymbolicConstant::zeta(a, b); }
}  // namespace

TEST(PhiCoeff, FirstValues) {
    EXPECT_EQ(phi_coeff(0), Rational(1));
    EXPECT_EQ(phi_coeff(1), Rational(-1));
    EXPECT_EQ(phi_coeff(2), Rational(3));
    EXPECT_THROW(phi_coeff(-1), std::domain_error);
}

TEST(PhiCoeff, GenocchiForm) {
    // phi_l = 2 (4^(l+1) - 1) B_{2l+2}
    for (long l = 0; l <= 20; ++l) {
        Rational g = Rational(2) * (pow(Rational(4), l + 1) - Rational(1)) * bernoulli(2 * l + 2);
        EXPECT_EQ(phi_coeff(l), g) << l;
        EXPECT_TRUE(phi_coeff(l).is_integer());
    }
}

TEST(STValues, Definitions) {
    EXPECT_EQ(S_value(2, 0), zz(3, 1));
    EXPECT_EQ(T_value(2, 1), zz(3, 3) + zz(2, 4) * Rational(3, 2));
    EXPECT_THROW(T_value(2, 0), std::domain_error);
    EXPECT_THROW(S_value(1, 2), std::domain_error);
}

TEST(STValues, Reductions) {
    EXPECT_EQ(S_reduce_N0(2), SymbolicConstant(ZetaMonomial::pi(4), Rational(1, 360)));
    EXPECT_EQ(T_reduce(2, 1), z(6) * Rational(21, 8) - zeta_product(3, 3));
    EXPECT_EQ(S_reduce(2, 0), euler_s1_reduce(3));
}

TEST(STValues, NumericAgreement) {
    const long prec = 160;
    ZetaValues zv(prec);
    const Real tol(1e-30, prec);
    for (long M = 2; M <= 6; ++M)
        for (long N = 1; M + N <= 6; ++N) {
            EXPECT_LT(abs(zv.evaluate(S_value(M, N) + T_value(M, N)) - zv.evaluate(S_plus_T(M, N))), tol)
                << M << "," << N;
            EXPECT_LT(abs(zv.evaluate(T_value(M, N)) - zv.evaluate(T_reduce(M, N))), tol) << M << "," << N;
            EXPECT_LT(abs(zv.evaluate(S_value(M, N)) - zv.evaluate(S_reduce(M, N))), tol) << M << "," << N;
        }
    for (long M = 2; M <= 8; ++M)
        EXPECT_LT(abs(zv.evaluate(S_value(M, 0)) - zv.evaluate(S_reduce_N0(M))), tol) << M;
}

TEST(STValues, ReducedFormsAreSingleZetaProducts) {
    for (long M = 2; M <= 7; ++M)
        for (long N = 0; M + N <= 8; ++N) {
            const SymbolicConstant s = S_reduce(M, N);
            for (auto& [m, c] : s.terms()) EXPECT_FALSE(m.has_double()) << M << "," << N;
        }
}

TEST(ZAlpha, Values) {
    EXPECT_EQ(Z_alpha(0, {1, 1, 1}), 2);
    EXPECT_EQ(Z_alpha(0, {2, 1, 1}), 6);
    EXPECT_THROW(Z_alpha(-1, {1, 1, 1}), std::domain_error);
    EXPECT_EQ(Z_alpha(5, {2, 1, 1}), 0);
}

TEST(XValue, VanishesOnSamples) {
    EXPECT_TRUE(X_value(1, {2, 1, 1}).is_zero());
    EXPECT_TRUE(X_value(1, {2, 3, 2}).is_zero());
    for (Triple t : {Triple{5, 2, 3}, Triple{7, 1, 4}, Triple{6, 6, 6}})
        for (int n = 1; n < t.a1; ++n) {
            EXPECT_TRUE(X_value(n, t).is_zero()) << t.index().str() << " n=" << n;
            EXPECT_TRUE(X_value_second_form(n, t).is_zero());
        }
    EXPECT_THROW(X_value(0, {2, 1, 1}), std::domain_error);
    EXPECT_THROW(X_value(2, {2, 1, 1}), std::domain_error);
}

TEST(XValue, FaultIsDetected) {
    EXPECT_FALSE(X_value(1, {3, 1, 1}, XFault::flip_leading_euler).is_zero());
}

TEST(Gamma, KnownRawValues) {
    auto raw = [](Triple t) { return gamma_coeffs(t).raw; };
    EXPECT_EQ(raw({2, 1, 1}), (std::vector<Rational>{Rational(-8), Rational(0)}));
    EXPECT_EQ(raw({3, 1, 1}), (std::vector<Rational>{Rational(0), Rational(-64), Rational(0)}));
    EXPECT_EQ(raw({3, 2, 1}), (std::vector<Rational>{Rational(800), Rational(-136), Rational(-800), Rational(0)}));
    EXPECT_EQ(raw({4, 1, 1}), (std::vector<Rational>{Rational(0), Rational(-8), Rational(-240), Rational(0)}));
    EXPECT_EQ(raw({2, 2, 2}), (std::vector<Rational>{Rational(480), Rational(480), Rational(-480), Rational(0)}));
}

TEST(Gamma, FoldedValues) {
    using F = std::map<DoubleIndex, Rational>;
    EXPECT_EQ(gamma_coeffs({4, 1, 1}).folded, (F{{{5, 5}, Rational(-4)}, {{3, 7}, Rational(-120)}}));
    EXPECT_EQ(gamma_coeffs({3, 2, 1}).folded, (F{{{5, 5}, Rational(-68)}}));
    EXPECT_EQ(gamma_coeffs({2, 2, 2}).value(), zeta_product(5, 5, Rational(240)));
}

TEST(Gamma, IntegralAndMatchesReduction) {
    for (int a1 = 1; a1 <= 8; ++a1)
        for (int a2 = 1; a1 + a2 <= 9; ++a2)
            for (int a3 = 1; a1 + a2 + a3 <= 10; ++a3) {
                Triple t{a1, a2, a3};
                if (t.weight() < 4) continue;
                OddPairDecomposition g = gamma_coeffs(t);
                ASSERT_TRUE(g.integral()) << t.index().str();
                EXPECT_EQ(g.value(), c_bottom_reduced(t).value()) << t.index().str();
            }
}

TEST(Gamma, PrintedFormDisagrees) {
    EXPECT_NE(gamma_raw({2, 1, 1}, GammaFormula::printed), gamma_raw({2, 1, 1}));
}

TEST(BottomCoefficient, NumericMatchesReducedForm) {
    const long prec = 160;
    ZetaValues zv(prec);
    const Real tol(1e-30, prec);
    for (int a1 = 1; a1 <= 8; ++a1)
        for (int a2 = 1; a1 + a2 <= 9; ++a2)
            for (int a3 = 1; a1 + a2 + a3 <= 10; ++a3) {
                Triple t{a1, a2, a3};
                Real lhs = zv.evaluate(coeff_bottom(t));
                Real rhs = zv.evaluate(c_bottom_reduced_symbolic(t));
                EXPECT_LT(abs(lhs - rhs), tol * max(Real(1L, prec), abs(lhs))) << t.index().str();
            }
}

TEST(BottomCoefficient, ZetaOneSlotIsGuarded) {
    std::vector<Rational> raw = {Rational(0), Rational(2)};
    EXPECT_THROW(detail::fold_gamma(raw, 4), ZetaOneError);
}
