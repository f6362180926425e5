// One line per acceptance criterion: "A<k> PASS|FAIL <detail> (<seconds> s)".
// Exit status is nonzero when any criterion fails.

#include "mgf/mgf.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mgf;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

SymbolicConstant q(long p, long d = 1) { return SymbolicConstant(Rational(p, d)); }
SymbolicConstant z(int n) { return SymbolicConstant::zeta(n); }

LaurentPolynomial in_y(int w, std::initializer_list<std::pair<int, SymbolicConstant>> terms) {
    LaurentPolynomial p(Variable::y, w);
    for (auto& [k, c] : terms) p.add(k, c);
    return p;
}

std::string sci(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2e", x);
    return b;
}

Outcome a1_tables() {
    struct Row {
        Triple t;
        LaurentPolynomial expect;
    };
    const std::vector<Row> rows = {
        {{2, 1, 1}, in_y(4, {{4, q(2, 14175)}, {1, z(3) * Rational(1, 45)}, {-1, z(5) * Rational(5, 12)},
                             {-2, zeta_product(3, 3, Rational(-1, 4))}, {-3, z(7) * Rational(9, 16)}})},
        {{3, 1, 1}, in_y(5, {{5, q(2, 155925)}, {2, z(3) * Rational(2, 945)}, {0, z(5) * Rational(-1, 180)},
                             {-2, z(7) * Rational(7, 16)}, {-3, zeta_product(3, 5, Rational(-1, 2))},
                             {-4, z(9) * Rational(43, 64)}})},
        {{4, 1, 1}, in_y(6, {{6, q(808, 638512875)}, {3, z(3) * Rational(1, 4725)}, {1, z(5) * Rational(-1, 1890)},
                             {-1, z(7) * Rational(1, 720)}, {-3, z(9) * Rational(23, 64)},
                             {-4, (zeta_product(5, 5) + zeta_product(3, 7, Rational(30))) * Rational(-1, 64)},
                             {-5, z(11) * Rational(167, 256)}})},
        {{3, 2, 1}, in_y(6, {{6, q(43, 58046625)}, {1, z(5) * Rational(1, 630)}, {-1, z(7) * Rational(1, 144)},
                             {-3, z(9) * Rational(7, 64)}, {-4, zeta_product(5, 5, Rational(-17, 64))},
                             {-5, z(11) * Rational(99, 256)}})},
        {{2, 2, 2}, in_y(6, {{6, q(38, 91216125)}, {-1, z(7) * Rational(1, 24)}, {-3, z(9) * Rational(-7, 16)},
                             {-4, zeta_product(5, 5, Rational(15, 16))}, {-5, z(11) * Rational(-81, 128)}})},
    };
    int bad = 0;
    std::string which;
    for (auto& r : rows)
        if (convert_variable(laurent(r.t), Variable::y) != r.expect) {
            ++bad;
            which += " " + r.t.index().str();
        }
    LaurentPolynomial e3 = eisenstein_laurent(3);
    e3.add(0, z(3));
    if (convert_variable(laurent({1, 1, 1}), Variable::y) != e3) {
        ++bad;
        which += " C_{1,1,1}";
    }
    return {bad == 0, std::to_string(rows.size() + 1 - bad) + "/" + std::to_string(rows.size() + 1) +
                          " tables exact" + (bad ? ", mismatch:" + which : "")};
}

Outcome a2_bottom() {
    const bool c111 = c_bottom_reduced_symbolic({1, 1, 1}).is_zero();
    const bool c211 = c_bottom_reduced({2, 1, 1}).value() == zeta_product(3, 3, Rational(-4));
    const bool c311 = c_bottom_reduced({3, 1, 1}).value() == zeta_product(3, 5, Rational(-32));
    return {c111 && c211 && c311, std::string("c(1,1,1)=0 ") + (c111 ? "ok" : "bad") + ", c(2,1,1)=-4 zeta(3)^2 " +
                                      (c211 ? "ok" : "bad") + ", c(3,1,1)=-32 zeta(3) zeta(5) " + (c311 ? "ok" : "bad")};
}

Outcome a3_sweep() {
    SweepConfig c;
    c.max_a1 = 12;
    c.max_a23 = 12;
    c.jobs = 1;
    SweepSummary s = run_sweep(c, [](const SweepRecord&) {});
    return {s.nonzero.empty() && s.evaluated == s.cells,
            std::to_string(s.cells) + " cells, " + std::to_string(s.nonzero.size()) + " nonzero"};
}

Outcome a4_numeric_triples() {
    const long prec = 160;
    ZetaValues zv(prec);
    const Real tol(1e-30, prec);
    int n = 0, bad = 0;
    double worst = 0;
    for (int a1 = 1; a1 <= 8; ++a1)
        for (int a2 = 1; a1 + a2 <= 9; ++a2)
            for (int a3 = 1; a1 + a2 + a3 <= 10; ++a3) {
                Triple t{a1, a2, a3};
                ++n;
                Real lhs = zv.evaluate(coeff_bottom(t));
                Real rhs = zv.evaluate(c_bottom_reduced_symbolic(t));
                Real d = abs(lhs - rhs) / max(Real(1L, prec), abs(lhs));
                worst = std::max(worst, d.to_double());
                if (!(d < tol)) ++bad;
                if (t.weight() >= 4 && !gamma_coeffs(t).integral()) ++bad;
            }
    return {bad == 0, std::to_string(n) + " ordered triples, worst relative gap " + sci(worst) + " (160-bit)"};
}

Outcome a5_identities() {
    const ModulusPoint tau(1.0 / 3, 1.0);
    EvalOptions opt;
    opt.cutoff = 150;
    opt.cutoff_four = 60;
    bool ok = true;
    std::string d;
    for (const char* name : {"id1", "id2a", "id2b", "id3"}) {
        IdentityReport r = verify_identity(identity_spec(name), tau, opt);
        ok = ok && r.status == VerifyStatus::pass;
        d += std::string(d.empty() ? "" : ", ") + name + " " + sci(std::fabs(r.difference)) + "/" + sci(r.tolerance);
    }
    return {ok, d};
}

Outcome a6_eisenstein() {
    const ModulusPoint tau(0, 1);
    Estimate e = eisenstein_num(3, tau, 20, 128);
    LatticeSumResult lat = lattice_C(std::vector<int>{2, 1}, tau, 300);
    const double diff = std::fabs(e.value.to_double() - lat.value);
    return {diff <= 1e-6, "E_3(i) = " + e.value.str(18) + ", |series - lattice| = " + sci(diff)};
}

Outcome a7_phi() {
    const long prec = 256;
    bool ok = true;
    double worst_id = 0, worst_res = 0;
    for (double yd : {1.0, 3.0, 10.0}) {
        const Real y(yd, prec);
        Real d = abs(phi_sm(2, 0, y) + 4 * phi_sm(2, 1, y) + 4 * phi_sm(2, 2, y) - exp(-y) / (y * y));
        worst_id = std::max(worst_id, d.to_double());
        ok = ok && d < Real(1e-20, prec);
    }
    for (int s = 2; s <= 4; ++s)
        for (int m = 0; m <= 4; ++m) {
            double r = std::fabs(phi_sm_residual(s, m, Real(2.0, prec), Real(1e-4, prec)).to_double());
            worst_res = std::max(worst_res, r);
            ok = ok && r < 1e-8;
        }
    return {ok, "identity gap " + sci(worst_id) + ", worst ODE residual " + sci(worst_res)};
}

Outcome a8_closure() {
    const double tau2 = 1.5;
    ConstantModeResult cm = constant_mode_num({2, 1, 1}, tau2, 200);
    const Real t2(tau2, 128);
    const double L = evaluate_laurent(laurent({2, 1, 1}), t2, 128).to_double();
    const double E = exp_part_C211(t2, 10, 128).value.to_double();
    const double gap = std::fabs(cm.value - L - E);
    return {cm.converged && gap <= 1e-6,
            "|mode - Laurent - exp| = " + sci(gap) + " (" + std::to_string(cm.nodes) + " nodes)"};
}

Outcome a9_laplace() {
    const ModulusPoint tau(0, 1);
    bool ok = true;
    std::string d;
    for (LaplaceCheck c : {LaplaceCheck::c111, LaplaceCheck::c211, LaplaceCheck::c221}) {
        LaplaceStudy s = laplace_study(laplace_spec(c), tau, {1.0 / 32, 1.0 / 64, 1.0 / 128}, EvalOptions{});
        const double fin = std::fabs(s.residuals.back().value);
        ok = ok && fin < 1e-3 && std::fabs(s.observed_order - 2) < 0.5;
        std::ostringstream o;
        o << (d.empty() ? "" : ", ") << "residual " << sci(fin) << " order " << std::round(s.observed_order * 100) / 100;
        d += o.str();
    }
    return {ok, d};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"A1", a1_tables}, {"A2", a2_bottom}, {"A3", a3_sweep}, {"A4", a4_numeric_triples}, {"A5", a5_identities},
        {"A6", a6_eisenstein}, {"A7", a7_phi}, {"A8", a8_closure}, {"A9", a9_laplace},
    };
    int failed = 0;
    for (auto& [id, f] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (id == "A1" && sec >= 1.0) {
            o.pass = false;
            o.detail += ", over the 1 s budget";
        }
        failed += !o.pass;
        char t[32];
        std::snprintf(t, sizeof t, "%.2f", sec);
        std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail << " (" << t << " s)" << std::endl;
    }
    return failed ? 1 : 0;
}
