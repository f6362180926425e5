#pragma once

#include "mgf/exact/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace mgf {

constexpr long kDefaultPrecision = 256;

// RAII MPFR value. Binary operations produce a result at the larger of the
// two operand precisions; everything rounds to nearest.
class Real {
public:
    explicit Real(long prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(double d, long prec) : Real(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(long n, long prec) : Real(prec) { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n, long prec) : Real(long(n), prec) {}
    Real(const Integer& z, long prec) : Real(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    Real(const Rational& q, long prec) : Real(prec) { mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN); }
    Real(const std::string& s, long prec) : Real(prec) { mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long precision() const { return long(mpfr_get_prec(v_)); }
    Real with_precision(long prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Scientific notation with `digits` significant digits.
    std::string str(int digits = 20) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
        std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
        int n = mpfr_snprintf(nullptr, 0, fmt.c_str(), v_);
        std::string s(std::size_t(n) + 1, '\0');
        mpfr_snprintf(s.data(), s.size(), fmt.c_str(), v_);
        s.resize(std::size_t(n));
        return s;
    }

    static Real pi(long prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator+(Real a, long b) { return a += b; }
    friend Real operator-(Real a, long b) { return a -= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }
    friend Real operator*(long b, Real a) { return a *= b; }
    friend Real operator+(long b, Real a) { return a += b; }
    friend Real operator-(long b, Real a) {
        mpfr_si_sub(a.v_, b, a.v_, MPFR_RNDN);
        return a;
    }
    friend Real operator/(long b, Real a) {
        mpfr_si_div(a.v_, b, a.v_, MPFR_RNDN);
        return a;
    }
    friend Real operator-(Real a) {
        mpfr_neg(a.v_, a.v_, MPFR_RNDN);
        return a;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
        int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

private:
    void widen(const Real& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }
    mpfr_t v_;
};

namespace detail {
template <class F>
Real unary(const Real& x, F f) {
    Real r(x.precision());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary(x, mpfr_abs); }
inline Real sqrt(const Real& x) { return detail::unary(x, mpfr_sqrt); }
inline Real exp(const Real& x) { return detail::unary(x, mpfr_exp); }
inline Real log(const Real& x) { return detail::unary(x, mpfr_log); }
inline Real sin(const Real& x) { return detail::unary(x, mpfr_sin); }
inline Real cos(const Real& x) { return detail::unary(x, mpfr_cos); }
inline Real sinh(const Real& x) { return detail::unary(x, mpfr_sinh); }
inline Real cosh(const Real& x) { return detail::unary(x, mpfr_cosh); }
inline Real tanh(const Real& x) { return detail::unary(x, mpfr_tanh); }

inline Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}
inline Real pow(long base, const Real& y) {
    Real r(y.precision());
    mpfr_ui_pow(r.get(), static_cast<unsigned long>(base), y.get(), MPFR_RNDN);
    return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// 2^e at the given precision.
inline Real pow2(long e, long prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

// 2^(-bits): the granularity used as a rounding allowance.
inline Real ulp_scale(long bits, long prec) { return pow2(-bits, prec); }

// |a - b| <= tol.
inline bool approx_equal(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

// A value with an explicit absolute error bound.
struct Estimate {
    Real value;
    Real error;
    bool converged = true;
};

}  // namespace mgf
