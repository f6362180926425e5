#pragma once

#include "mgf/numerics/eisenstein.hpp"
#include "mgf/numerics/lattice.hpp"
#include "mgf/numerics/zeta.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace mgf {

// A double-precision value with an absolute error bound.
struct NumValue {
    double value = 0;
    double error = 0;
    bool converged = true;
};

// E_w(tau) in double precision, with enough Fourier modes for ~1e-16.
inline NumValue eisenstein_value(int w, const ModulusPoint& tau, long prec = 128) {
    const int K = int(std::ceil(40.0 / (2 * M_PI * tau.tau2))) + w;
    Estimate e = eisenstein_num(w, tau, K, prec);
    return {e.value.to_double(), e.error.to_double() + 1e-16 * std::fabs(e.value.to_double()), e.converged};
}

// One summand of a linear relation between lattice sums, Eisenstein series
// and zeta values.
struct Term {
    enum class Kind { lattice, eisenstein, eisenstein_product, zeta };
    Kind kind;
    std::vector<int> args;  // lattice exponents, Eisenstein weights or the zeta argument
    double coef;
    bool differentiate = true;  // used by laplace checks only

    std::string str() const {
        std::ostringstream o;
        auto list = [&] {
            for (std::size_t i = 0; i < args.size(); ++i) o << (i ? "," : "") << args[i];
        };
        o << coef << "*";
        switch (kind) {
        case Kind::lattice: o << "C_{"; list(); o << "}"; break;
        case Kind::eisenstein: o << "E_" << args[0]; break;
        case Kind::eisenstein_product: o << "E_" << args[0] << "*E_" << args[1]; break;
        case Kind::zeta: o << "zeta(" << args[0] << ")"; break;
        }
        return o.str();
    }
};

inline Term lattice_term(std::vector<int> a, double c) { return {Term::Kind::lattice, std::move(a), c}; }
inline Term eisenstein_term(int w, double c) { return {Term::Kind::eisenstein, {w}, c}; }
inline Term eisenstein_product_term(int w1, int w2, double c) { return {Term::Kind::eisenstein_product, {w1, w2}, c}; }
inline Term zeta_term(int n, double c) { return {Term::Kind::zeta, {n}, c}; }

struct EvalOptions {
    int cutoff = 150;       // for two- and three-edge sums
    int cutoff_four = 60;   // for four-edge sums
    long prec = 128;
    double lattice_tolerance = 1e-6;
};

inline NumValue evaluate_term(const Term& t, const ModulusPoint& tau, const EvalOptions& opt) {
    switch (t.kind) {
    case Term::Kind::lattice: {
        LatticeOptions lo;
        lo.tolerance = opt.lattice_tolerance;
        LatticeSumResult r = lattice_C(t.args, tau, t.args.size() == 4 ? opt.cutoff_four : opt.cutoff, lo);
        return {r.value, r.error, r.status == SumStatus::converged};
    }
    case Term::Kind::eisenstein: return eisenstein_value(t.args[0], tau, opt.prec);
    case Term::Kind::eisenstein_product: {
        NumValue a = eisenstein_value(t.args[0], tau, opt.prec), b = eisenstein_value(t.args[1], tau, opt.prec);
        return {a.value * b.value, std::fabs(a.value) * b.error + std::fabs(b.value) * a.error + a.error * b.error,
                a.converged && b.converged};
    }
    case Term::Kind::zeta: return {zeta_num(long(t.args[0]), opt.prec).to_double(), 1e-16, true};
    }
    return {};
}

inline NumValue evaluate_terms(const std::vector<Term>& terms, const ModulusPoint& tau, const EvalOptions& opt) {
    NumValue s;
    for (const Term& t : terms) {
        NumValue v = evaluate_term(t, tau, opt);
        s.value += t.coef * v.value;
        s.error += std::fabs(t.coef) * v.error;
        s.converged = s.converged && v.converged;
    }
    return s;
}

// k = 0 Fourier coefficient of a three-edge sum: trapezoid rule over tau1 on
// 2^k nodes, doubling until two successive values agree within `tolerance`.
// C(-tau1) = C(tau1), so only nodes in [0, 1/2] are evaluated.
struct ConstantModeResult {
    double value = 0;
    double error = 0;
    int nodes = 0;
    int cutoff = 0;
    bool converged = false;
};

inline ConstantModeResult constant_mode_num(const std::vector<int>& a, double tau2, int cutoff,
                                            double tolerance = 1e-8, int max_nodes = 64) {
    if (a.size() != 3) throw std::domain_error("constant_mode_num needs three exponents");
    std::map<int, LatticeSumResult> cache;  // key: node index on the finest grid
    const int finest = max_nodes;
    auto at = [&](int j) -> const LatticeSumResult& {  // tau1 = j / finest, j in [0, finest/2]
        auto it = cache.find(j);
        if (it == cache.end()) it = cache.emplace(j, lattice_C(a, ModulusPoint(double(j) / finest, tau2), cutoff)).first;
        return it->second;
    };
    ConstantModeResult r;
    r.cutoff = cutoff;
    double prev = 0;
    for (int M = 2; M <= max_nodes; M *= 2) {
        const int stride = finest / M;
        double s = 0, err = 0;
        for (int i = 0; i < M; ++i) {
            int j = i * stride;
            if (j > finest / 2) j = finest - j;
            const LatticeSumResult& v = at(j);
            s += v.value;
            err = std::max(err, v.error);
        }
        s /= M;
        if (M > 2 && std::fabs(s - prev) <= tolerance) {
            r.value = s;
            r.error = err + std::fabs(s - prev);
            r.nodes = M;
            r.converged = true;
            return r;
        }
        prev = s;
        r.value = s;
        r.error = err + 1.0;
        r.nodes = M;
    }
    return r;
}

// Operator identities checked by finite differences.
enum class LaplaceCheck { c111, c211, c221, c220, eisenstein };

struct LaplaceSpec {
    std::string name;
    std::vector<Term> lhs;  // (Delta - shift) applied to terms with differentiate = true
    double shift = 0;
};

inline LaplaceSpec laplace_spec(LaplaceCheck c, int w = 3) {
    switch (c) {
    case LaplaceCheck::c111:
        return {"Delta C_{1,1,1} - 6 E_3", {lattice_term({1, 1, 1}, 1), {Term::Kind::eisenstein, {3}, -6, false}}, 0};
    case LaplaceCheck::c211:
        return {"(Delta - 2) C_{2,1,1} - 9 E_4 + E_2^2",
                {lattice_term({2, 1, 1}, 1), {Term::Kind::eisenstein, {4}, -9, false},
                 {Term::Kind::eisenstein_product, {2, 2}, 1, false}},
                2};
    case LaplaceCheck::c221:
        return {"Delta C_{2,2,1} - 8 E_5", {lattice_term({2, 2, 1}, 1), {Term::Kind::eisenstein, {5}, -8, false}}, 0};
    case LaplaceCheck::c220:
        return {"C_{2,2,0} - E_2^2 + E_4",
                {{Term::Kind::lattice, {2, 2, 0}, 1, false}, {Term::Kind::eisenstein_product, {2, 2}, -1, false},
                 {Term::Kind::eisenstein, {4}, 1, false}},
                0};
    case LaplaceCheck::eisenstein:
        if (w < 2) throw std::domain_error("eisenstein laplace check needs w >= 2");
        return {"Delta E_" + std::to_string(w) + " - " + std::to_string(w * (w - 1)) + " E_" + std::to_string(w),
                {eisenstein_term(w, 1)}, double(w * (w - 1))};
    }
    throw std::domain_error("unknown laplace check");
}

inline bool laplace_needs_derivative(const LaplaceSpec& s) {
    for (auto& t : s.lhs)
        if (t.differentiate) return true;
    return false;
}

// Residual with Delta = tau2^2 (d1^2 + d2^2) replaced by the five-point stencil.
inline NumValue laplace_residual(const LaplaceSpec& spec, const ModulusPoint& tau, double h, const EvalOptions& opt) {
    NumValue r;
    for (const Term& t : spec.lhs) {
        NumValue c = evaluate_term(t, tau, opt);
        r.converged = r.converged && c.converged;
        if (!t.differentiate) {
            r.value += t.coef * c.value;
            r.error += std::fabs(t.coef) * c.error;
            continue;
        }
        const ModulusPoint pts[4] = {{tau.tau1 + h, tau.tau2}, {tau.tau1 - h, tau.tau2},
                                     {tau.tau1, tau.tau2 + h}, {tau.tau1, tau.tau2 - h}};
        double nb = 0, nerr = 0;
        for (const auto& p : pts) {
            NumValue v = evaluate_term(t, p, opt);
            nb += v.value;
            nerr += v.error;
            r.converged = r.converged && v.converged;
        }
        const double t22 = tau.tau2 * tau.tau2;
        const double lap = t22 * (nb - 4 * c.value) / (h * h);
        r.value += t.coef * (lap - spec.shift * c.value);
        // Truncation errors of nearby lattice sums are strongly correlated; the
        // bound below treats them as independent and is therefore pessimistic.
        r.error += std::fabs(t.coef) * (t22 * (nerr + 4 * c.error) / (h * h) + std::fabs(spec.shift) * c.error);
    }
    return r;
}

// h-refinement study: residuals at each step, Richardson value from the two
// finest steps, and the observed order from three successive steps.
struct LaplaceStudy {
    std::string name;
    std::vector<double> steps;
    std::vector<NumValue> residuals;
    double extrapolated = 0;
    double observed_order = 0;  // NaN when the differences are below noise
};

inline LaplaceStudy laplace_study(const LaplaceSpec& spec, const ModulusPoint& tau, std::vector<double> steps,
                                  const EvalOptions& opt) {
    LaplaceStudy s;
    s.name = spec.name;
    if (!laplace_needs_derivative(spec)) steps = {0.0};
    s.steps = steps;
    for (double h : steps) s.residuals.push_back(laplace_residual(spec, tau, h, opt));
    const std::size_t n = s.residuals.size();
    s.extrapolated = s.residuals.back().value;
    s.observed_order = std::nan("");
    if (n >= 2) {
        const double r1 = s.residuals[n - 2].value, r2 = s.residuals[n - 1].value;
        const double q = steps[n - 2] / steps[n - 1];
        s.extrapolated = (q * q * r2 - r1) / (q * q - 1);
    }
    if (n >= 3) {
        const double d1 = s.residuals[n - 3].value - s.residuals[n - 2].value;
        const double d2 = s.residuals[n - 2].value - s.residuals[n - 1].value;
        if (d1 != 0 && d2 != 0) s.observed_order = std::log(std::fabs(d1 / d2)) / std::log(steps[n - 3] / steps[n - 2]);
    }
    return s;
}

// Named identities among the functions above, written as LHS - RHS = 0.
struct IdentitySpec {
    std::string name;
    std::string text;
    std::vector<Term> terms;
    double tolerance;
};

inline const std::vector<IdentitySpec>& identity_table() {
    static const std::vector<IdentitySpec> t = {
        {"id1", "C_{1,1,1} = E_3 + zeta(3)",
         {lattice_term({1, 1, 1}, 1), eisenstein_term(3, -1), zeta_term(3, -1)}, 1e-5},
        {"id2a", "30 C_{2,2,1} = 12 E_5 + zeta(5)",
         {lattice_term({2, 2, 1}, 30), eisenstein_term(5, -12), zeta_term(5, -1)}, 1e-5},
        {"id2b", "252 C_{3,3,1} + 252 C_{3,2,2} = 108 E_7 + zeta(7)",
         {lattice_term({3, 3, 1}, 252), lattice_term({3, 2, 2}, 252), eisenstein_term(7, -108), zeta_term(7, -1)},
         1e-5},
        {"id2c", "2160 C_{4,4,1} + 4320 C_{4,3,2} + 960 C_{3,3,3} = 960 E_9 + zeta(9)",
         {lattice_term({4, 4, 1}, 2160), lattice_term({4, 3, 2}, 4320), lattice_term({3, 3, 3}, 960),
          eisenstein_term(9, -960), zeta_term(9, -1)},
         1e-5},
        {"id3", "C_{1,1,1,1} = 24 C_{2,1,1} - 18 E_4 + 3 E_2^2",
         {lattice_term({1, 1, 1, 1}, 1), lattice_term({2, 1, 1}, -24), eisenstein_term(4, 18),
          eisenstein_product_term(2, 2, -3)},
         1e-4},
    };
    return t;
}

inline const IdentitySpec& identity_spec(const std::string& name) {
    for (auto& s : identity_table())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown identity '" + name + "' (expected id1, id2a, id2b, id2c or id3)");
}

enum class VerifyStatus { pass, unconverged, violation };

struct IdentityReport {
    std::string name;
    double difference = 0;  // LHS - RHS
    double budget = 0;      // sum of |coef| * error over all terms
    double tolerance = 0;
    VerifyStatus status = VerifyStatus::pass;
};

// Pass: |difference| <= tolerance with a budget below tolerance. A budget above
// tolerance is reported as unconverged; a certified mismatch as a violation.
inline IdentityReport verify_identity(const IdentitySpec& spec, const ModulusPoint& tau, const EvalOptions& opt,
                                      double tolerance = -1) {
    IdentityReport r;
    r.name = spec.name;
    r.tolerance = tolerance > 0 ? tolerance : spec.tolerance;
    EvalOptions o = opt;
    o.lattice_tolerance = r.tolerance;
    NumValue v = evaluate_terms(spec.terms, tau, o);
    r.difference = v.value;
    r.budget = v.error;
    if (std::fabs(r.difference) > r.tolerance + r.budget) r.status = VerifyStatus::violation;
    else if (r.budget > r.tolerance || !v.converged || std::fabs(r.difference) > r.tolerance)
        r.status = VerifyStatus::unconverged;
    return r;
}

inline const char* to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::pass: return "PASS";
    case VerifyStatus::unconverged: return "UNCONVERGED";
    case VerifyStatus::violation: return "FAIL";
    }
    return "?";
}

}  // namespace mgf
