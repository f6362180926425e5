#include "mgf/cli/cli.hpp"

#include "mgf/mgf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace mgf::cli {

namespace {

using nlohmann::json;

struct Globals {
    long prec = 256;
    int cutoff = 150;
    int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
    std::string format = "text";
    std::string var = "y";
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string sci(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return buf;
}

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

int digits_for(long prec) { return int(std::min(40L, std::max(6L, long(prec * 0.30103) - 4))); }

ModulusPoint parse_tau(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("tau must be given as 'tau1,tau2', got '" + s + "'");
    double t1, t2;
    try {
        std::size_t p1, p2;
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        t1 = std::stod(a, &p1);
        t2 = std::stod(b, &p2);
        if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw UsageError("cannot parse tau '" + s + "'");
    }
    if (!(t2 > 0)) throw UsageError("tau2 must be positive");
    return {t1, t2};
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + item + "'");
        }
    }
    if (v.empty()) throw UsageError("empty list");
    return v;
}

std::string tau_str(const ModulusPoint& t) { return fixed(t.tau1) + "+" + fixed(t.tau2) + "i"; }

Format output_format(const Globals& g) {
    try {
        return parse_format(g.format);
    } catch (const std::exception&) {
        throw UsageError("unknown format '" + g.format + "' (expected text, json or latex)");
    }
}

Triple make_triple(const std::vector<int>& a) {
    if (a.size() != 3) throw UsageError("expected three exponents a1 a2 a3");
    Triple t{a[0], a[1], a[2]};
    try {
        require_laurent_triple(t);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    return t;
}

std::string status_word(int code) {
    switch (code) {
    case ok: return "PASS";
    case unconverged: return "UNCONVERGED";
    case violation: return "FAIL";
    default: return "ERROR";
    }
}

// --- laurent -----------------------------------------------------------------

int cmd_laurent(const Globals& g, const std::vector<int>& a, const std::string& bottom, std::ostream& out) {
    const Triple t = make_triple(a);
    Variable v;
    try {
        v = parse_variable(g.var);
    } catch (const std::exception&) {
        throw UsageError("unknown variable '" + g.var + "' (expected u, y or tau2)");
    }
    BottomForm bf;
    if (bottom == "reduced") bf = BottomForm::reduced;
    else if (bottom == "double-zeta") bf = BottomForm::double_zeta;
    else throw UsageError("unknown bottom form '" + bottom + "' (expected reduced or double-zeta)");
    const LaurentPolynomial p = convert_variable(laurent(t, bf), v);
    switch (output_format(g)) {
    case Format::json: out << to_json(p).dump() << "\n"; break;
    case Format::latex: out << render(p, Format::latex) << "\n"; break;
    case Format::text:
        out << "# " << t.index().str() << ": Laurent polynomial of the constant mode in " << to_string(v)
            << " (route: residue sum, bottom " << bottom << ", exact rational)\n";
        out << render(p, Format::text) << "\n";
        break;
    }
    return ok;
}

// --- gamma -------------------------------------------------------------------

int cmd_gamma(const Globals& g, const std::vector<int>& a, std::ostream& out) {
    const Triple t = make_triple(a);
    const int w = t.weight();
    const OddPairDecomposition d = gamma_coeffs(t);
    const OddPairDecomposition r = c_bottom_reduced(t);
    const bool agree = d.value() == r.value();
    const bool integral = d.integral();
    const int code = (agree && integral) ? ok : violation;
    if (output_format(g) == Format::json) {
        json j = {{"index", {t.a1, t.a2, t.a3}}, {"weight", 2 * w - 2}, {"raw", json::array()},
                  {"folded", json::array()}, {"integral", integral}, {"agrees_with_reduction", agree}};
        for (auto& x : d.raw) j["raw"].push_back(x.str());
        for (auto& [st, c] : d.folded) j["folded"].push_back({{"s", st.first}, {"t", st.second}, {"coeff", c.str()}});
        out << j.dump() << "\n";
        return code;
    }
    out << "# " << t.index().str() << ": c_{" << 2 - w << "} = sum_k (1/2) gamma_k zeta(2k+1) zeta(" << 2 * w - 3
        << "-2k), k = 1.." << w - 2 << " (route: closed formula, exact rational)\n";
    for (std::size_t k = 0; k < d.raw.size(); ++k) out << "gamma_" << k + 1 << " = " << d.raw[k].str() << "\n";
    out << "folded:";
    if (d.folded.empty()) out << " 0";
    for (auto& [st, c] : d.folded) out << " (" << st.first << "," << st.second << "): " << c.str() << ";";
    out << "\n";
    out << "value: " << render(d.value()) << "\n";
    out << "integral: " << (integral ? "yes" : "no") << "\n";
    out << "reduction route agrees: " << (agree ? "yes" : "no") << " (lemma reduction gives "
        << render(r.value()) << ")\n";
    return code;
}

// --- check-xn ----------------------------------------------------------------

int cmd_check_xn(const Globals& g, int max_a1, int max_a23, std::size_t every, bool resume, bool no_checkpoint,
                 long fault, std::ostream& out, std::ostream& err) {
    if (max_a1 < 1 || max_a23 < 1) throw UsageError("sweep bounds must be >= 1");
    SweepConfig c;
    c.max_a1 = max_a1;
    c.max_a23 = max_a23;
    c.jobs = g.jobs;
    c.checkpoint_every = every;
    if (!no_checkpoint) c.checkpoint = default_checkpoint_path(max_a1, max_a23);
    else if (resume) throw UsageError("--resume needs a checkpoint");
    c.resume = resume;
    if (fault >= 0) c.fault_cell = std::size_t(fault);
    const SweepSummary s = run_sweep(c, [&](const SweepRecord& r) { out << to_json(r).dump() << "\n"; });
    const int code = s.nonzero.empty() ? ok : violation;
    if (output_format(g) == Format::json) {
        out << json{{"summary",
                     {{"cells", s.cells}, {"evaluated", s.evaluated}, {"resumed_from", s.resumed_from},
                      {"nonzero", s.nonzero.size()}, {"max_a1", max_a1}, {"max_a23", max_a23}}}}
                   .dump()
            << "\n";
    } else {
        err << "# check-xn: " << s.cells << " cells (2 <= a1 <= " << max_a1 << ", 1 <= a2,a3 <= " << max_a23
            << ", 1 <= n < a1), " << s.evaluated << " evaluated from cell " << s.resumed_from << ", "
            << s.nonzero.size() << " nonzero (route: exact rational sums, jobs " << g.jobs << ")\n";
        for (auto& r : s.nonzero)
            err << "# nonzero: a = (" << r.cell.a.a1 << "," << r.cell.a.a2 << "," << r.cell.a.a3 << ") n = " << r.cell.n
                << " X = " << r.x.str() << "\n";
    }
    return code;
}

// --- eval --------------------------------------------------------------------

int cmd_eval(const Globals& g, const std::vector<int>& a, const std::string& tau_s, double tau2, const std::string& compare,
             double tol, std::ostream& out) {
    const bool json_out = output_format(g) == Format::json;
    if (!tau_s.empty()) {
        const ModulusPoint tau = parse_tau(tau_s);
        if (a.size() < 2 || a.size() > 4) throw UsageError("eval needs two to four exponents");
        for (int x : a)
            if (x < 0) throw UsageError("exponents must be >= 0");
        LatticeOptions lo;
        lo.tolerance = tol;
        LatticeSumResult r;
        try {
            r = lattice_C(a, tau, g.cutoff, lo);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        const int code = r.status == SumStatus::converged ? ok : unconverged;
        std::string name = "C_{";
        for (std::size_t i = 0; i < a.size(); ++i) name += (i ? "," : "") + std::to_string(a[i]);
        name += "}";
        if (json_out) {
            out << json{{"command", "eval"}, {"function", name}, {"tau", {tau.tau1, tau.tau2}}, {"value", r.value},
                        {"error", r.error}, {"raw", r.raw}, {"cutoff", r.cutoff}, {"levels", r.levels},
                        {"precision_bits", r.precision_bits}, {"route", "fft box sum + tail fit"},
                        {"status", status_word(code)}}
                       .dump()
                << "\n";
        } else {
            out << name << "(" << tau_str(tau) << ") = " << fixed(r.value) << " +- " << sci(r.error)
                << " (route: FFT box sum + tail fit, cutoff " << r.cutoff << ", " << r.levels.size()
                << " levels, 53-bit)\n";
            out << "status: " << status_word(code) << " (tolerance " << sci(tol) << ")\n";
        }
        return code;
    }
    if (!(tau2 > 0)) throw UsageError("eval needs --tau or a positive --tau2");
    const Triple t = make_triple(a);
    if (compare != "none" && compare != "laurent" && compare != "laurent+exp")
        throw UsageError("unknown comparison '" + compare + "' (expected none, laurent or laurent+exp)");
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    const bool is211 = sorted == std::vector<int>{1, 1, 2};
    if (compare == "laurent+exp" && !is211)
        throw UsageError("laurent+exp comparison is available for C_{2,1,1} only");
    const ConstantModeResult cm = constant_mode_num(a, tau2, g.cutoff, tol * 1e-2);
    const double L = evaluate_laurent(laurent(t), Real(tau2, g.prec), g.prec).to_double();
    const double D = cm.value - L;
    double E = 0, target = 0, allowed = tol;
    int code = cm.converged && cm.error <= tol ? ok : unconverged;
    if (compare == "laurent+exp") {
        E = exp_part_C211(Real(tau2, g.prec), 40, g.prec).value.to_double();
        target = E;
    } else if (compare == "laurent") {
        allowed = 10 * std::exp(-4 * M_PI * tau2) * std::pow(tau2, t.weight());
    }
    if (compare != "none" && std::fabs(D - target) > allowed + cm.error) code = violation;
    if (json_out) {
        json j = {{"command", "eval"}, {"function", t.index().str()}, {"tau2", tau2}, {"constant_mode", cm.value},
                  {"error", cm.error}, {"nodes", cm.nodes}, {"cutoff", cm.cutoff}, {"laurent", L},
                  {"difference", D}, {"compare", compare}, {"precision_bits", g.prec},
                  {"route", "trapezoid over tau1 of fft box sums"}, {"status", status_word(code)}};
        if (compare == "laurent+exp") j["exp_part"] = E;
        if (compare == "laurent") j["bound"] = allowed;
        out << j.dump() << "\n";
        return code;
    }
    out << "constant mode " << t.index().str() << "(tau2 = " << fixed(tau2) << ") = " << fixed(cm.value) << " +- "
        << sci(cm.error) << " (route: trapezoid over tau1, " << cm.nodes << " nodes, FFT box sums cutoff " << cm.cutoff
        << ", 53-bit)\n";
    out << "Laurent polynomial = " << fixed(L) << " (route: exact coefficients, " << g.prec << "-bit evaluation)\n";
    out << "difference = " << sci(D, 6) << "\n";
    if (compare == "laurent+exp") {
        out << "exponential part = " << sci(E, 6) << " (route: decaying series, 40 terms, " << g.prec << "-bit)\n";
        out << "mismatch = " << sci(D - E) << ", tolerance " << sci(tol) << "\n";
    } else if (compare == "laurent") {
        out << "bound 10 exp(-4 pi tau2) tau2^w = " << sci(allowed) << "\n";
    }
    if (compare != "none") out << "status: " << status_word(code) << "\n";
    return code;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& id, const std::string& tau_s, int cutoff4, double tol,
               std::ostream& out) {
    const IdentitySpec* spec;
    try {
        spec = &identity_spec(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const ModulusPoint tau = parse_tau(tau_s);
    EvalOptions o;
    o.cutoff = g.cutoff;
    o.cutoff_four = cutoff4;
    o.prec = g.prec;
    const IdentityReport r = verify_identity(*spec, tau, o, tol);
    const int code = r.status == VerifyStatus::pass ? ok : r.status == VerifyStatus::unconverged ? unconverged : violation;
    if (output_format(g) == Format::json) {
        out << json{{"command", "verify"}, {"identity", r.name}, {"relation", spec->text}, {"tau", {tau.tau1, tau.tau2}},
                    {"difference", r.difference}, {"budget", r.budget}, {"tolerance", r.tolerance},
                    {"cutoff", g.cutoff}, {"cutoff_four", cutoff4}, {"precision_bits", g.prec},
                    {"route", "fft box sums + fourier series"}, {"status", to_string(r.status)}}
                       .dump()
            << "\n";
        return code;
    }
    out << to_string(r.status) << " " << r.name << ": " << spec->text << " at tau = " << tau_str(tau) << "\n";
    out << "  |LHS - RHS| = " << sci(std::fabs(r.difference)) << ", error budget " << sci(r.budget) << ", tolerance "
        << sci(r.tolerance) << "\n";
    out << "  (route: FFT box sums with tail fit, cutoff " << g.cutoff << " (four edges: " << cutoff4
        << "), 53-bit; Eisenstein series by Fourier modes, " << g.prec << "-bit)\n";
    return code;
}

// --- laplace -----------------------------------------------------------------

int cmd_laplace(const Globals& g, const std::string& check, const std::string& tau_s, const std::string& steps_s,
                double tol, std::ostream& out) {
    LaplaceSpec spec;
    if (check == "c111") spec = laplace_spec(LaplaceCheck::c111);
    else if (check == "c211") spec = laplace_spec(LaplaceCheck::c211);
    else if (check == "c221") spec = laplace_spec(LaplaceCheck::c221);
    else if (check == "c220") spec = laplace_spec(LaplaceCheck::c220);
    else if (check.size() > 1 && check[0] == 'E') {
        int w;
        try {
            w = std::stoi(check.substr(1));
        } catch (const std::exception&) {
            throw UsageError("cannot parse Eisenstein weight in '" + check + "'");
        }
        if (w < 2) throw UsageError("Eisenstein weight must be >= 2");
        spec = laplace_spec(LaplaceCheck::eisenstein, w);
    } else {
        throw UsageError("unknown check '" + check + "' (expected c111, c211, c221, c220 or E<w>)");
    }
    const ModulusPoint tau = parse_tau(tau_s);
    std::vector<double> steps = parse_list(steps_s);
    for (double h : steps)
        if (!(h > 0) || h >= tau.tau2) throw UsageError("steps must lie in (0, tau2)");
    EvalOptions o;
    o.cutoff = g.cutoff;
    o.prec = g.prec;
    o.lattice_tolerance = tol;
    const LaplaceStudy s = laplace_study(spec, tau, steps, o);
    const bool deriv = laplace_needs_derivative(spec);
    const double finest = s.residuals.back().value;
    bool good = std::fabs(finest) <= tol && std::fabs(s.extrapolated) <= tol;
    if (deriv && s.steps.size() >= 3) good = good && std::fabs(s.observed_order - 2) <= 0.5;
    const int code = good ? ok : violation;
    if (output_format(g) == Format::json) {
        json j = {{"command", "laplace"}, {"check", s.name}, {"tau", {tau.tau1, tau.tau2}}, {"steps", s.steps},
                  {"residuals", json::array()}, {"extrapolated", s.extrapolated}, {"tolerance", tol},
                  {"cutoff", g.cutoff}, {"route", "five-point stencil on fft box sums"}, {"status", status_word(code)}};
        for (auto& r : s.residuals) j["residuals"].push_back(r.value);
        j["observed_order"] = std::isnan(s.observed_order) ? json(nullptr) : json(s.observed_order);
        out << j.dump() << "\n";
        return code;
    }
    out << status_word(code) << " " << s.name << " at tau = " << tau_str(tau) << "\n";
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        out << "  ";
        if (deriv) out << "h = " << fixed(s.steps[i]) << ": ";
        out << "residual " << sci(s.residuals[i].value) << "\n";
    }
    if (deriv) {
        out << "  extrapolated " << sci(s.extrapolated);
        if (!std::isnan(s.observed_order)) out << ", observed order " << fixed(std::round(s.observed_order * 100) / 100);
        out << "\n";
    }
    out << "  tolerance " << sci(tol) << " (route: five-point stencil, FFT box sums cutoff " << g.cutoff
        << ", 53-bit)\n";
    return code;
}

// --- eisenstein --------------------------------------------------------------

int cmd_eisenstein(const Globals& g, int w, const std::string& tau_s, int terms, bool compare, double tol,
                   std::ostream& out) {
    if (w < 2) throw UsageError("weight must be >= 2");
    if (terms < 1) throw UsageError("terms must be >= 1");
    const ModulusPoint tau = parse_tau(tau_s);
    const Estimate e = eisenstein_num(w, tau, terms, g.prec);
    int code = e.converged ? ok : unconverged;
    LatticeSumResult lat;
    double diff = 0;
    if (compare) {
        LatticeOptions lo;
        lo.tolerance = tol;
        lat = lattice_C(std::vector<int>{w - 1, 1}, tau, g.cutoff, lo);
        diff = e.value.to_double() - lat.value;
        if (lat.status != SumStatus::converged) code = unconverged;
        if (std::fabs(diff) > tol + lat.error + e.error.to_double()) code = violation;
    }
    if (output_format(g) == Format::json) {
        json j = {{"command", "eisenstein"}, {"w", w}, {"tau", {tau.tau1, tau.tau2}},
                  {"value", e.value.str(digits_for(g.prec))}, {"error", e.error.to_double()}, {"terms", terms},
                  {"precision_bits", g.prec}, {"route", "fourier series"}, {"status", status_word(code)}};
        if (compare)
            j["lattice"] = {{"value", lat.value}, {"error", lat.error}, {"cutoff", lat.cutoff}, {"difference", diff}};
        out << j.dump() << "\n";
        return code;
    }
    out << "E_" << w << "(" << tau_str(tau) << ") = " << e.value.str(digits_for(g.prec)) << " +- " << sci(e.error.to_double())
        << " (route: Fourier series, " << terms << " modes, " << g.prec << "-bit)\n";
    if (compare) {
        out << "C_{" << w - 1 << ",1}(" << tau_str(tau) << ") = " << fixed(lat.value) << " +- " << sci(lat.error)
            << " (route: FFT box sum + tail fit, cutoff " << lat.cutoff << ", 53-bit)\n";
        out << "difference = " << sci(diff) << ", tolerance " << sci(tol) << "\n";
        out << "status: " << status_word(code) << "\n";
    }
    return code;
}

// --- phi ---------------------------------------------------------------------

int cmd_phi(const Globals& g, int s, int m, double y, double h, double tol, std::ostream& out) {
    if (s < 1) throw UsageError("s must be >= 1");
    if (m < 0) throw UsageError("m must be >= 0");
    if (!(y > 0)) throw UsageError("y must be positive");
    if (!(h > 0) || h >= y) throw UsageError("step must lie in (0, y)");
    const Real Y(y, g.prec);
    const Real v = phi_sm(s, m, Y);
    const Real res = phi_sm_residual(s, m, Y, Real(h, g.prec));
    const int code = std::fabs(res.to_double()) <= tol ? ok : violation;
    if (output_format(g) == Format::json) {
        out << json{{"command", "phi"}, {"s", s}, {"m", m}, {"y", y}, {"value", v.str(digits_for(g.prec))},
                    {"residual", res.to_double()}, {"step", h}, {"tolerance", tol}, {"precision_bits", g.prec},
                    {"route", "incomplete gamma: quadrature seed + recursion"}, {"status", status_word(code)}}
                       .dump()
            << "\n";
        return code;
    }
    out << "phi_{" << s << "," << m << "}(" << fixed(y) << ") = " << v.str(digits_for(g.prec))
        << " (route: incomplete gamma by quadrature seed + recursion, " << g.prec << "-bit)\n";
    out << "ODE residual (central differences, h = " << sci(h) << ") = " << sci(res.to_double()) << ", tolerance "
        << sci(tol) << ": " << status_word(code) << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric tools for two-loop modular graph functions", "mgf"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--prec", g.prec, "working precision in bits")->capture_default_str()->check(CLI::Range(32L, 100000L));
    app.add_option("--cutoff", g.cutoff, "lattice box cutoff N")->capture_default_str()->check(CLI::Range(4, 4000));
    app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format: text|json|latex")->capture_default_str();
    app.add_option("--var", g.var, "Laurent variable: u|y|tau2")->capture_default_str();

    std::map<std::string, std::function<int()>> actions;

    std::vector<int> la;
    std::string bottom = "reduced";
    auto* sl = app.add_subcommand("laurent", "exact Laurent polynomial of the constant mode of C_{a1,a2,a3}");
    sl->add_option("exponents", la, "a1 a2 a3")->required()->expected(3);
    sl->add_option("--bottom", bottom, "bottom coefficient form: reduced|double-zeta")->capture_default_str();
    actions["laurent"] = [&] { return cmd_laurent(g, la, bottom, out); };

    std::vector<int> ga;
    auto* sg = app.add_subcommand("gamma", "odd-zeta-pair coefficients of the bottom Laurent coefficient");
    sg->add_option("exponents", ga, "a1 a2 a3")->required()->expected(3);
    actions["gamma"] = [&] { return cmd_gamma(g, ga, out); };

    int max_a1 = 12, max_a23 = 12;
    std::size_t every = 10000;
    bool resume = false, no_ckpt = false;
    long fault = -1;
    auto* sx = app.add_subcommand("check-xn", "exact sweep of X_n(a1,a2,a3) over a grid (JSON lines)");
    sx->add_option("--max-a1", max_a1, "largest a1")->capture_default_str();
    sx->add_option("--max-a23", max_a23, "largest a2 and a3")->capture_default_str();
    sx->add_option("--checkpoint-every", every, "cells per checkpoint block")->capture_default_str()->check(CLI::PositiveNumber);
    sx->add_flag("--resume", resume, "continue from the checkpoint in $MGF_CHECKPOINT_DIR (default .)");
    sx->add_flag("--no-checkpoint", no_ckpt, "do not write a checkpoint file");
    sx->add_option("--inject-fault", fault, "self-test: corrupt the cell with this grid index")->capture_default_str();
    actions["check-xn"] = [&] { return cmd_check_xn(g, max_a1, max_a23, every, resume, no_ckpt, fault, out, err); };

    std::vector<int> ea;
    std::string etau, compare = "none";
    double etau2 = 0, etol = 1e-6;
    auto* se = app.add_subcommand("eval", "lattice value at --tau, or constant mode at --tau2");
    se->add_option("exponents", ea, "two to four exponents")->required()->expected(2, 4);
    se->add_option("--tau", etau, "modulus as tau1,tau2");
    se->add_option("--tau2", etau2, "imaginary part for the constant mode");
    se->add_option("--compare", compare, "none|laurent|laurent+exp")->capture_default_str();
    se->add_option("--tol", etol, "tolerance")->capture_default_str();
    actions["eval"] = [&] { return cmd_eval(g, ea, etau, etau2, compare, etol, out); };

    std::string vid, vtau = "0,1";
    int cutoff4 = 60;
    double vtol = -1;
    auto* sv = app.add_subcommand("verify", "numeric check of a named identity (id1 id2a id2b id2c id3)");
    sv->add_option("identity", vid, "identity name")->required();
    sv->add_option("--tau", vtau, "modulus as tau1,tau2")->capture_default_str();
    sv->add_option("--cutoff4", cutoff4, "cutoff for four-edge sums")->capture_default_str()->check(CLI::Range(4, 400));
    sv->add_option("--tol", vtol, "tolerance (default: 1e-5, 1e-4 for id3)");
    actions["verify"] = [&] { return cmd_verify(g, vid, vtau, cutoff4, vtol, out); };

    std::string lcheck, ltau = "0,1", lsteps = "0.03125,0.015625,0.0078125";
    double ltol = 1e-3;
    auto* sp = app.add_subcommand("laplace", "finite-difference Laplace check (c111 c211 c221 c220 E<w>)");
    sp->add_option("check", lcheck, "check name")->required();
    sp->add_option("--tau", ltau, "modulus as tau1,tau2")->capture_default_str();
    sp->add_option("--steps", lsteps, "comma-separated finite-difference steps")->capture_default_str();
    sp->add_option("--tol", ltol, "tolerance")->capture_default_str();
    actions["laplace"] = [&] { return cmd_laplace(g, lcheck, ltau, lsteps, ltol, out); };

    int ew = 0, terms = 20;
    std::string ztau = "0,1";
    bool zcompare = false;
    double ztol = 1e-6;
    auto* sz = app.add_subcommand("eisenstein", "non-holomorphic Eisenstein series E_w from its Fourier modes");
    sz->add_option("w", ew, "weight")->required();
    sz->add_option("--tau", ztau, "modulus as tau1,tau2")->capture_default_str();
    sz->add_option("--terms", terms, "Fourier modes")->capture_default_str();
    sz->add_flag("--compare-lattice", zcompare, "compare with the two-edge lattice sum at --cutoff");
    sz->add_option("--tol", ztol, "tolerance for the comparison")->capture_default_str();
    actions["eisenstein"] = [&] { return cmd_eisenstein(g, ew, ztau, terms, zcompare, ztol, out); };

    int ps = 0, pm = 0;
    double py = 0, ph = 1e-4, ptol = 1e-8;
    auto* sf = app.add_subcommand("phi", "decaying solution phi_{s,m}(y) and its ODE residual");
    sf->add_option("s", ps, "s >= 1")->required();
    sf->add_option("m", pm, "m >= 0")->required();
    sf->add_option("y", py, "y > 0")->required();
    sf->add_option("--step", ph, "finite-difference step")->capture_default_str();
    sf->add_option("--tol", ptol, "residual tolerance")->capture_default_str();
    actions["phi"] = [&] { return cmd_phi(g, ps, pm, py, ph, ptol, out); };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e, out, err);
        return c == 0 ? ok : usage;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return actions.at(name)();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const SymbolicGuardError& e) {
        err << "guard: " << e.what() << "\n";
        return guard;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mgf::cli
