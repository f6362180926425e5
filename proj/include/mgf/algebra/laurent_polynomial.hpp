#pragma once

#include "mgf/algebra/symbolic.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mgf {

// u = 4y, y = pi*tau2.
enum class Variable { u, y, tau2 };

inline std::string to_string(Variable v) {
    switch (v) {
        case Variable::u: return "u";
        case Variable::y: return "y";
        case Variable::tau2: return "tau2";
    }
    return "?";
}

inline Variable parse_variable(const std::string& s) {
    if (s == "u") return Variable::u;
    if (s == "y") return Variable::y;
    if (s == "tau2") return Variable::tau2;
    throw std::invalid_argument("unknown variable '" + s + "' (expected u, y or tau2)");
}

class LaurentPolynomial {
public:
    using Coeffs = std::map<int, SymbolicConstant, std::greater<int>>;

    explicit LaurentPolynomial(Variable v = Variable::u, int weight = 0) : var_(v), w_(weight) {}

    Variable variable() const { return var_; }
    int weight() const { return w_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    SymbolicConstant coefficient(int p) const {
        auto it = c_.find(p);
        return it == c_.end() ? SymbolicConstant() : it->second;
    }

    LaurentPolynomial& add(int p, const SymbolicConstant& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = c_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
        return *this;
    }

    int max_power() const { return c_.empty() ? 0 : c_.begin()->first; }
    int min_power() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    Variable var_;
    int w_;
    Coeffs c_;
};

namespace detail {

// Coefficient of u^p equals coefficient of v^p times this factor.
inline SymbolicConstant to_u_factor(Variable v, int p) {
    Rational s = pow(Rational(4), -p);
    switch (v) {
        case Variable::u: return SymbolicConstant(1);
        case Variable::y: return SymbolicConstant(s);
        case Variable::tau2: return SymbolicConstant(ZetaMonomial::pi(-p), s);
    }
    return {};
}

inline SymbolicConstant from_u_factor(Variable v, int p) {
    Rational s = pow(Rational(4), p);
    switch (v) {
        case Variable::u: return SymbolicConstant(1);
        case Variable::y: return SymbolicConstant(s);
        case Variable::tau2: return SymbolicConstant(ZetaMonomial::pi(p), s);
    }
    return {};
}

}  // namespace detail

inline LaurentPolynomial convert_variable(const LaurentPolynomial& p, Variable target) {
    LaurentPolynomial out(target, p.weight());
    for (auto& [k, c] : p.coeffs())
        out.add(k, c * detail::to_u_factor(p.variable(), k) * detail::from_u_factor(target, k));
    return out;
}

// ---------------------------------------------------------------- rendering

enum class Format { text, latex, json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "latex") return Format::latex;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, latex or json)");
}

namespace detail {

inline std::string pow_suffix(int e, bool latex) {
    if (e == 1) return "";
    return latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

inline std::string monomial_body(const ZetaMonomial& m, bool latex) {
    std::vector<std::string> parts;
    if (m.pi_power() != 0) parts.push_back((latex ? "\\pi" : "pi") + pow_suffix(m.pi_power(), latex));
    const std::string z = latex ? "\\zeta" : "zeta";
    auto& odd = m.odd_factors();
    for (std::size_t i = 0; i < odd.size();) {
        std::size_t j = i;
        while (j < odd.size() && odd[j] == odd[i]) ++j;
        parts.push_back(z + "(" + std::to_string(odd[i]) + ")" + pow_suffix(int(j - i), latex));
        i = j;
    }
    auto& dbl = m.double_factors();
    for (std::size_t i = 0; i < dbl.size();) {
        std::size_t j = i;
        while (j < dbl.size() && dbl[j] == dbl[i]) ++j;
        parts.push_back(z + "(" + std::to_string(dbl[i].first) + "," + std::to_string(dbl[i].second) + ")" +
                        pow_suffix(int(j - i), latex));
        i = j;
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
    return s;
}

inline std::string abs_rational(const Rational& r, bool latex) {
    Rational a = abs(r);
    if (!latex || a.is_integer()) return a.str();
    return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

// Signed term list; first term carries a leading '-' only.
inline std::string constant_body(const SymbolicConstant& c, bool latex) {
    if (c.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, coef] : c.terms()) {
        bool neg = coef.sign() < 0;
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        bool unit = abs(coef) == Rational(1);
        if (m.is_one()) s += abs_rational(coef, latex);
        else if (unit) s += monomial_body(m, latex);
        else s += abs_rational(coef, latex) + " " + monomial_body(m, latex);
    }
    return s;
}

inline std::string variable_name(Variable v, bool latex) {
    if (v == Variable::tau2) return latex ? "\\tau_2" : "tau2";
    return to_string(v);
}

}  // namespace detail

inline std::string render(const SymbolicConstant& c, Format f = Format::text) {
    return detail::constant_body(c, f == Format::latex);
}

inline nlohmann::json to_json(const SymbolicConstant& c) {
    nlohmann::json mons = nlohmann::json::array();
    for (auto& [m, coef] : c.terms()) {
        if (m.is_one()) continue;
        nlohmann::json dbl = nlohmann::json::array();
        for (auto& d : m.double_factors()) dbl.push_back({d.first, d.second});
        mons.push_back({{"odd", m.odd_factors()}, {"pi_pow", m.pi_power()}, {"double", dbl}, {"coeff", coef.str()}});
    }
    return {{"rational", c.rational_part().str()}, {"monomials", mons}};
}

inline SymbolicConstant symbolic_from_json(const nlohmann::json& j) {
    SymbolicConstant c(Rational::parse(j.at("rational").get<std::string>()));
    for (auto& m : j.at("monomials")) {
        std::vector<DoubleIndex> dbl;
        for (auto& d : m.at("double")) dbl.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
        ZetaMonomial mono(m.at("pi_pow").get<int>(), m.at("odd").get<std::vector<int>>(), dbl);
        c.add(mono, Rational::parse(m.at("coeff").get<std::string>()));
    }
    return c;
}

inline nlohmann::json to_json(const LaurentPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [k, c] : p.coeffs()) terms.push_back({{"power", k}, {"coeff", to_json(c)}});
    return {{"w", p.weight()}, {"variable", to_string(p.variable())}, {"terms", terms}};
}

inline LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
    LaurentPolynomial p(parse_variable(j.at("variable").get<std::string>()), j.at("w").get<int>());
    for (auto& t : j.at("terms")) p.add(t.at("power").get<int>(), symbolic_from_json(t.at("coeff")));
    return p;
}

inline std::string render(const LaurentPolynomial& p, Format f = Format::text) {
    if (f == Format::json) return to_json(p).dump();
    if (p.is_zero()) return "0";
    const bool latex = f == Format::latex;
    const std::string var = detail::variable_name(p.variable(), latex);
    std::string s;
    bool first = true;
    for (auto& [k, c] : p.coeffs()) {
        std::string power = k == 0 ? "" : (k == 1 ? var : var + (latex ? "^{" + std::to_string(k) + "}"
                                                                        : "^" + std::to_string(k)));
        std::string body;
        bool neg = false;
        if (c.size() == 1) {
            auto& [m, coef] = *c.terms().begin();
            neg = coef.sign() < 0;
            SymbolicConstant mag(m, abs(coef));
            body = detail::constant_body(mag, latex);
            if (k != 0 && m.is_one() && abs(coef) == Rational(1)) body.clear();
        } else {
            body = (latex ? "\\left(" : "(") + detail::constant_body(c, latex) + (latex ? "\\right)" : ")");
        }
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        s += body;
        if (!power.empty()) s += (body.empty() ? "" : " ") + power;
    }
    return s;
}

}  // namespace mgf
