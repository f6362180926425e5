#pragma once

#include "mgf/exact/graph_index.hpp"
#include "mgf/numerics/real.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgf {

struct ModulusPoint {
    double tau1 = 0.0;
    double tau2 = 1.0;

    ModulusPoint() = default;
    ModulusPoint(double t1, double t2) : tau1(t1), tau2(t2) {
        if (!(t2 > 0)) throw std::domain_error("tau2 must be positive");
    }
    double y() const { return M_PI * tau2; }
    double q_abs() const { return std::exp(-2 * M_PI * tau2); }

    ModulusPoint translate() const { return {tau1 + 1.0, tau2}; }
    ModulusPoint invert() const {
        double n = tau1 * tau1 + tau2 * tau2;
        return {-tau1 / n, tau2 / n};
    }
};

enum class SumStatus { converged, unconverged };

struct LatticeSumResult {
    double value = 0;          // extrapolated to N -> infinity
    double raw = 0;            // plain box sum at the requested cutoff
    int cutoff = 0;
    double tail_estimate = 0;  // |extrapolated - raw|
    double error = 0;          // extrapolation uncertainty + rounding
    SumStatus status = SumStatus::converged;
    std::vector<int> levels;   // cutoffs used by the fit
    int precision_bits = 53;
};

namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// f(m,n) = tau2 / (pi |m + n tau|^2) raised to `power` on the (2N+1)^2 box;
// the origin is excluded (set to zero) for every power, including zero.
inline std::vector<double> edge_grid(int N, const ModulusPoint& tau, int power) {
    const int S = 2 * N + 1;
    std::vector<double> g(std::size_t(S) * S);
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < S; ++j) {
            const double m = i - N, n = j - N;
            double v = 0;
            if (m != 0 || n != 0) {
                const double re = m + n * tau.tau1, im = n * tau.tau2;
                const double f = tau.tau2 / (M_PI * (re * re + im * im));
                v = 1;
                for (int p = 0; p < power; ++p) v *= f;
            }
            g[std::size_t(i) * S + j] = v;
        }
    return g;
}

// Full linear 2D convolution of two S x S grids, result (2S-1)^2, via real FFT.
class Convolver {
public:
    explicit Convolver(int S) : S_(S), P_(2 * S - 1) {
        const int half = P_ / 2 + 1;
        in_ = fftw_alloc_real(std::size_t(P_) * P_);
        out_ = fftw_alloc_complex(std::size_t(P_) * half);
        acc_ = fftw_alloc_complex(std::size_t(P_) * half);
        std::lock_guard lock(fftw_planner_mutex());
        fwd_ = fftw_plan_dft_r2c_2d(P_, P_, in_, out_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_2d(P_, P_, acc_, in_, FFTW_ESTIMATE);
    }
    ~Convolver() {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
        fftw_free(acc_);
    }
    Convolver(const Convolver&) = delete;
    Convolver& operator=(const Convolver&) = delete;

    std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
        const int half = P_ / 2 + 1;
        const std::size_t nc = std::size_t(P_) * half;
        load(a);
        fftw_execute(fwd_);
        std::memcpy(acc_, out_, nc * sizeof(fftw_complex));
        load(b);
        fftw_execute(fwd_);
        for (std::size_t i = 0; i < nc; ++i) {
            const double re = acc_[i][0] * out_[i][0] - acc_[i][1] * out_[i][1];
            const double im = acc_[i][0] * out_[i][1] + acc_[i][1] * out_[i][0];
            acc_[i][0] = re;
            acc_[i][1] = im;
        }
        fftw_execute(bwd_);
        const double scale = 1.0 / (double(P_) * P_);
        std::vector<double> r(std::size_t(P_) * P_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = in_[i] * scale;
        return r;
    }

    int result_size() const { return P_; }

private:
    void load(const std::vector<double>& g) {
        std::fill(in_, in_ + std::size_t(P_) * P_, 0.0);
        for (int i = 0; i < S_; ++i)
            for (int j = 0; j < S_; ++j) in_[std::size_t(i) * P_ + j] = g[std::size_t(i) * S_ + j];
    }

    int S_, P_;
    double* in_;
    fftw_complex* out_;
    fftw_complex* acc_;
    fftw_plan fwd_, bwd_;
};

// Compensated sum of products; order is fixed so results are reproducible.
inline double dot(const double* a, const double* b, std::size_t n, std::ptrdiff_t bstride = 1) {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (long double)a[i] * b[std::ptrdiff_t(i) * bstride];
    return double(s);
}

}  // namespace detail

// Plain truncated sum: every momentum p_r (including the one fixed by
// momentum conservation) ranges over the box |m|,|n| <= N, origin excluded.
// Exponents may be zero; a zero exponent still excludes p_r = 0.
inline double lattice_box_sum(const std::vector<int>& a, int N, const ModulusPoint& tau) {
    const std::size_t l = a.size();
    if (l < 2 || l > 4) throw std::domain_error("lattice sums support 2 to 4 edges");
    const int S = 2 * N + 1;
    std::vector<std::vector<double>> F;
    for (int ar : a) F.push_back(detail::edge_grid(N, tau, ar));
    // reversed grid index: p -> -p
    auto rev = [&](const std::vector<double>& g) {
        std::vector<double> r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) r[g.size() - 1 - i] = g[i];
        return r;
    };
    if (l == 2) return detail::dot(F[0].data(), rev(F[1]).data(), F[0].size());
    detail::Convolver conv(S);
    const int P = conv.result_size();  // index q + 2N
    if (l == 3) {
        std::vector<double> c = conv.convolve(F[1], F[2]);
        // sum_{p1} F1(p1) c(-p1), with -p1 inside the box
        long double s = 0;
        for (int i = 0; i < S; ++i)
            for (int j = 0; j < S; ++j) {
                const int qi = 2 * N - (i - N), qj = 2 * N - (j - N);
                s += (long double)F[0][std::size_t(i) * S + j] * c[std::size_t(qi) * P + qj];
            }
        return double(s);
    }
    std::vector<double> c1 = conv.convolve(F[0], F[1]);
    std::vector<double> c2 = conv.convolve(F[2], F[3]);
    return detail::dot(c1.data(), rev(c2).data(), c1.size());
}

// Brute-force reference for small cutoffs (O(S^(2(l-1)))).
inline double lattice_direct_sum(const std::vector<int>& a, int N, const ModulusPoint& tau) {
    const std::size_t l = a.size();
    if (l < 2 || l > 4) throw std::domain_error("lattice sums support 2 to 4 edges");
    auto f = [&](int m, int n, int power) -> long double {
        if (m == 0 && n == 0) return 0;
        if (std::abs(m) > N || std::abs(n) > N) return 0;
        const long double re = m + n * (long double)tau.tau1, im = n * (long double)tau.tau2;
        const long double v = tau.tau2 / (M_PI * (re * re + im * im));
        long double r = 1;
        for (int p = 0; p < power; ++p) r *= v;
        return r;
    };
    long double s = 0;
    if (l == 2) {
        for (int m = -N; m <= N; ++m)
            for (int n = -N; n <= N; ++n) s += f(m, n, a[0]) * f(-m, -n, a[1]);
    } else if (l == 3) {
        for (int m1 = -N; m1 <= N; ++m1)
            for (int n1 = -N; n1 <= N; ++n1) {
                long double f1 = f(m1, n1, a[0]);
                if (f1 == 0) continue;
                for (int m2 = -N; m2 <= N; ++m2)
                    for (int n2 = -N; n2 <= N; ++n2) s += f1 * f(m2, n2, a[1]) * f(-m1 - m2, -n1 - n2, a[2]);
            }
    } else {
        for (int m1 = -N; m1 <= N; ++m1)
            for (int n1 = -N; n1 <= N; ++n1) {
                long double f1 = f(m1, n1, a[0]);
                if (f1 == 0) continue;
                for (int m2 = -N; m2 <= N; ++m2)
                    for (int n2 = -N; n2 <= N; ++n2) {
                        long double f2 = f(m2, n2, a[1]);
                        if (f2 == 0) continue;
                        for (int m3 = -N; m3 <= N; ++m3)
                            for (int n3 = -N; n3 <= N; ++n3)
                                s += f1 * f2 * f(m3, n3, a[2]) * f(-m1 - m2 - m3, -n1 - n2 - n3, a[3]);
                    }
            }
    }
    return double(s);
}

// Leading power p and log order J of the truncation error sum_j log^j N / N^p.
// The power comes from the configuration where the edges not pinned to small
// momentum all run to the box boundary.
struct TailModel {
    int power = 0;
    int log_order = 0;
};

inline TailModel tail_model(const std::vector<int>& a) {
    const int w = std::accumulate(a.begin(), a.end(), 0);
    const std::size_t l = a.size();
    if (l == 2) return {2 * w - 2, 0};
    if (l == 3) return {2 * (w - *std::max_element(a.begin(), a.end())) - 2, 1};
    int p = 1 << 20;
    for (std::size_t r = 0; r < l; ++r) {
        p = std::min(p, 2 * (w - a[r]) - 4);
        for (std::size_t s = r + 1; s < l; ++s) p = std::min(p, 2 * (w - a[r] - a[s]) - 2);
    }
    return {p, 2};
}

namespace detail {

// Solves A x = b (small, dense) by Gaussian elimination with partial pivoting.
inline std::vector<long double> solve(std::vector<std::vector<long double>> A, std::vector<long double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            long double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        long double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

// Constant term of the fit vals(N) = c + sum_j log^j N (d_j N^-p + e_j N^-(p+1)).
inline long double fit_constant(const std::vector<int>& Ns, const std::vector<double>& vals, int p, int J,
                                bool second_power) {
    std::vector<std::vector<long double>> A;
    std::vector<long double> b;
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        const long double N = Ns[i], L = std::log(N);
        std::vector<long double> row{1.0L};
        for (int j = J; j >= 0; --j) row.push_back(std::pow(L, j) * std::pow(N, -p) * std::pow((long double)Ns[0], p));
        if (second_power)
            for (int j = J; j >= 0; --j)
                row.push_back(std::pow(L, j) * std::pow(N, -p - 1) * std::pow((long double)Ns[0], p + 1));
        A.push_back(row);
        b.push_back(vals[i]);
    }
    return solve(A, b)[0];
}

}  // namespace detail

struct LatticeOptions {
    double tolerance = 1e-6;  // required bound on |error|
    bool extrapolate = true;
};

// Lattice sum of C_{a1..al}(tau) with tail extrapolation in the cutoff.
inline LatticeSumResult lattice_C(const std::vector<int>& a, const ModulusPoint& tau, int cutoff,
                                  const LatticeOptions& opt = {}) {
    if (cutoff < 4) throw std::domain_error("lattice_C needs cutoff >= 4");
    if (a.size() < 2 || a.size() > 4) throw std::domain_error("lattice sums support 2 to 4 edges");
    for (int x : a)
        if (x < 0) throw std::domain_error("lattice exponents must be >= 0");
    const int w = std::accumulate(a.begin(), a.end(), 0);
    if (a.size() >= 3 && w < 3) throw std::domain_error("lattice_C needs weight >= 3");
    if (a.size() == 2 && w < 2) throw std::domain_error("lattice_C needs weight >= 2");

    LatticeSumResult r;
    r.cutoff = cutoff;
    const TailModel tm = tail_model(a);
    const int nb = 2 * (tm.log_order + 1);  // basis size without the constant
    std::vector<int> Ns;
    for (int i = 0; i <= nb; ++i) {
        int n = int(std::lround(cutoff * std::pow(0.4, double(i) / nb)));
        if (!Ns.empty() && n >= Ns.back()) n = Ns.back() - 1;
        Ns.push_back(std::max(n, 2));
    }
    std::vector<double> vals;
    for (int n : (opt.extrapolate ? Ns : std::vector<int>{cutoff})) vals.push_back(lattice_box_sum(a, n, tau));
    r.raw = vals[0];
    const double rounding = 1e-14 * std::max(1.0, std::fabs(r.raw)) * std::sqrt(double(cutoff));
    if (!opt.extrapolate) {
        r.value = r.raw;
        r.levels = {cutoff};
        r.error = std::pow(double(cutoff), -tm.power) * std::pow(std::log(double(cutoff)) + 1, tm.log_order) * 10 +
                  rounding;
        r.tail_estimate = r.error;
    } else {
        r.levels = Ns;
        const long double full = detail::fit_constant(Ns, vals, tm.power, tm.log_order, true);
        std::vector<int> Nl(Ns.begin(), Ns.begin() + tm.log_order + 2);
        std::vector<double> vl(vals.begin(), vals.begin() + tm.log_order + 2);
        const long double lower = detail::fit_constant(Nl, vl, tm.power, tm.log_order, false);
        r.value = double(full);
        r.tail_estimate = std::fabs(r.value - r.raw);
        r.error = double(std::fabs(full - lower)) + rounding;
    }
    r.status = r.error <= opt.tolerance ? SumStatus::converged : SumStatus::unconverged;
    return r;
}

inline LatticeSumResult lattice_C(const GraphIndex& g, const ModulusPoint& tau, int cutoff,
                                  const LatticeOptions& opt = {}) {
    return lattice_C(g.exponents(), tau, cutoff, opt);
}

}  // namespace mgf
