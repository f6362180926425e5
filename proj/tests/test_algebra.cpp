#include "mgf/algebra/laurent_polynomial.hpp"
#include "mgf/algebra/rewrite.hpp"
#include "mgf/algebra/symbolic.hpp"
#include "mgf/numerics/zeta.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mgf;

namespace {

SymbolicConstant pi(int p, Rational c = Rational(1)) { return SymbolicConstant(ZetaMonomial::pi(p), c); }
SymbolicConstant z(int n) { return SymbolicConstant::zeta(n); }
SymbolicConstant zz(int a, int b) { return SymbolicConstant::zeta(a, b); }

// Random admissible constant of mixed weight.
SymbolicConstant random_constant(std::mt19937& rng) {
    std::uniform_int_distribution<int> odd(1, 5), pw(0, 3), num(-9, 9), den(1, 6), kind(0, 3);
    SymbolicConstant c;
    for (int i = 0; i < 3; ++i) {
        Rational r(num(rng), den(rng));
        switch (kind(rng)) {
        case 0: c += SymbolicConstant(r); break;
        case 1: c += z(2 * odd(rng) + 1) * r; break;
        case 2: c += pi(2 * pw(rng), r); break;
        default: c += zz(2 + pw(rng), 1 + pw(rng)) * r; break;
        }
    }
    return c;
}

}  // namespace

TEST(ZetaMonomial, RejectsZetaOne) {
    EXPECT_THROW(ZetaMonomial::odd_zeta(1), ZetaOneError);
    EXPECT_THROW(ZetaMonomial::double_zeta(1, 3), ZetaOneError);
    EXPECT_THROW(SymbolicConstant::zeta(1), ZetaOneError);
    EXPECT_THROW(ZetaMonomial::odd_zeta(4), std::domain_error);
    EXPECT_THROW(ZetaMonomial::double_zeta(2, 0), std::domain_error);
}

TEST(ZetaMonomial, CanonicalOrderAndWeight) {
    ZetaMonomial a(2, {7, 3}, {{4, 1}, {2, 3}});
    EXPECT_EQ(a.odd_factors(), (std::vector<int>{3, 7}));
    EXPECT_EQ(a.double_factors().front(), (DoubleIndex{2, 3}));
    EXPECT_EQ(a.weight(), 2 + 10 + 5 + 5);
    ZetaMonomial b = ZetaMonomial::odd_zeta(5) * ZetaMonomial::pi(4);
    EXPECT_EQ((a * b).weight(), a.weight() + b.weight());
    EXPECT_EQ(b * a, a * b);
}

TEST(SymbolicConstant, EvenZetaIsStoredAsPiPower) {
    EXPECT_EQ(z(2), pi(2, Rational(1, 6)));
    EXPECT_EQ(z(4), pi(4, Rational(1, 90)));
    EXPECT_TRUE(z(3).coefficient(ZetaMonomial::odd_zeta(3)) == Rational(1));
    EXPECT_EQ((z(2) * z(2)).pi_part(4), Rational(1, 36));
}

TEST(SymbolicConstant, NoZeroCoefficientsStored) {
    SymbolicConstant c = z(3) - z(3);
    EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(c.size(), 0u);
    EXPECT_EQ((z(5) * Rational(0)).size(), 0u);
}

TEST(SymbolicConstant, RingAxiomsRandomised) {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        SymbolicConstant a = random_constant(rng), b = random_constant(rng), c = random_constant(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(SymbolicConstant, Homogeneity) {
    int w = 0;
    EXPECT_TRUE((z(3) * z(5) + pi(8)).homogeneous(&w));
    EXPECT_EQ(w, 8);
    EXPECT_FALSE((z(3) + pi(4)).homogeneous());
}

TEST(Rewrite, ReflectionEqualArguments) {
    // 2 zeta(2,2) = zeta(2)^2 - zeta(4).
    RewriteRule r = stuffle_reflect(2, 2);
    EXPECT_EQ(r.apply(zz(2, 2)), pi(4, Rational(1, 120)));
}

TEST(Rewrite, ReflectionDistinctArguments) {
    RewriteRule r = stuffle_reflect(3, 2);
    EXPECT_EQ(r.target, (DoubleIndex{2, 3}));
    EXPECT_EQ(r.apply(zz(3, 2) + zz(2, 3)), zeta_product(2, 3) - z(5));
    EXPECT_THROW(stuffle_reflect(1, 4), ZetaOneError);
}

TEST(Rewrite, EulerSOne) {
    EXPECT_EQ(euler_s1_reduce(2), z(3));
    EXPECT_EQ(euler_s1_reduce(3), pi(4, Rational(1, 360)));
    EXPECT_EQ(euler_s1_reduce(5), pi(6, Rational(1, 1260)) - zeta_product(3, 3, Rational(1, 2)));
    EXPECT_EQ(euler_s1_rule(4).apply(zz(4, 1) * z(3)), euler_s1_reduce(4) * z(3));
}

TEST(Rewrite, SubstituteRepeatedFactor) {
    SymbolicConstant c(ZetaMonomial(0, {3}, {{2, 2}, {2, 2}}), Rational(3));
    SymbolicConstant got = substitute(c, {2, 2}, pi(4, Rational(1, 120)));
    EXPECT_EQ(got, z(3) * pi(8, Rational(3, 14400)));
}

TEST(Rewrite, RulesPreserveNumericValue) {
    const long prec = 160;
    ZetaValues zv(prec);
    const Real tol = ulp_scale(prec - 16, prec);
    for (int s = 2; s <= 8; ++s)
        for (int t = 2; t <= 8; ++t) {
            SymbolicConstant before = zz(s, t) + zz(t, s) * Rational(3) + z(3);
            SymbolicConstant after = stuffle_reflect(std::min(s, t), std::max(s, t)).apply(before);
            if (s == t) after = stuffle_reflect(s, s).apply(after);
            EXPECT_LT(abs(zv.evaluate(before) - zv.evaluate(after)), tol) << s << "," << t;
        }
    for (int s = 2; s <= 9; ++s) EXPECT_LT(abs(zv.pair(s, 1) - zv.evaluate(euler_s1_reduce(s))), tol) << s;
}

TEST(Laurent, ConvertUToY) {
    LaurentPolynomial p(Variable::u, 4);
    p.add(4, SymbolicConstant(Rational(1, 1814400)));
    LaurentPolynomial y = convert_variable(p, Variable::y);
    EXPECT_EQ(y.coefficient(4), SymbolicConstant(Rational(2, 14175)));
    EXPECT_EQ(convert_variable(y, Variable::u), p);
}

TEST(Laurent, ConvertToTau2AbsorbsPi) {
    LaurentPolynomial p(Variable::y, 3);
    p.add(3, SymbolicConstant(Rational(2, 945)));
    p.add(-2, z(5) * Rational(3, 4));
    LaurentPolynomial t = convert_variable(p, Variable::tau2);
    EXPECT_EQ(t.coefficient(3), pi(3, Rational(2, 945)));
    EXPECT_EQ(t.coefficient(-2), SymbolicConstant(ZetaMonomial(-2, {5}, {}), Rational(3, 4)));
    EXPECT_EQ(convert_variable(convert_variable(t, Variable::u), Variable::y), p);
}

TEST(Laurent, ZeroPolynomial) {
    LaurentPolynomial p(Variable::u, 5);
    EXPECT_TRUE(convert_variable(p, Variable::y).is_zero());
    EXPECT_EQ(render(p), "0");
}

TEST(Laurent, RenderText) {
    LaurentPolynomial p(Variable::y, 4);
    p.add(4, SymbolicConstant(Rational(2, 14175)));
    p.add(1, z(3) * Rational(1, 45));
    p.add(-2, zeta_product(3, 3, Rational(-1, 4)));
    p.add(0, z(3) - pi(4, Rational(1, 90)));
    EXPECT_EQ(render(p), "2/14175 y^4 + 1/45 zeta(3) y + (zeta(3) - 1/90 pi^4) - 1/4 zeta(3)^2 y^-2");
    EXPECT_EQ(render(p, Format::latex),
              "\\frac{2}{14175} y^{4} + \\frac{1}{45} \\zeta(3) y + \\left(\\zeta(3) - \\frac{1}{90} \\pi^{4}\\right) - "
              "\\frac{1}{4} \\zeta(3)^{2} y^{-2}");
}

TEST(Laurent, JsonRoundTripAndSchema) {
    LaurentPolynomial p(Variable::tau2, 4);
    p.add(4, pi(4, Rational(2, 14175)));
    p.add(-2, zz(5, 1) * Rational(72) + SymbolicConstant(Rational(-3, 7)));
    nlohmann::json j = to_json(p);
    EXPECT_EQ(j.at("w"), 4);
    EXPECT_EQ(j.at("variable"), "tau2");
    const auto& t = j.at("terms");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].at("power"), 4);
    EXPECT_EQ(t[1].at("coeff").at("rational"), "-3/7");
    EXPECT_EQ(t[1].at("coeff").at("monomials")[0].at("double")[0], nlohmann::json::array({5, 1}));
    EXPECT_EQ(t[1].at("coeff").at("monomials")[0].at("coeff"), "72");
    EXPECT_EQ(laurent_from_json(nlohmann::json::parse(j.dump())), p);
}

TEST(Laurent, ParseTags) {
    EXPECT_EQ(parse_variable("u"), Variable::u);
    EXPECT_EQ(parse_variable("tau2"), Variable::tau2);
    EXPECT_THROW(parse_variable("x"), std::invalid_argument);
    EXPECT_EQ(parse_format("latex"), Format::latex);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}
