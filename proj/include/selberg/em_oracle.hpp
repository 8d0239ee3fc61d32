#ifndef SELBERG_EM_ORACLE_HPP
#define SELBERG_EM_ORACLE_HPP

#include <algorithm>

#include "selberg/common.hpp"
#include "selberg/log_gamma.hpp"

namespace selberg {
namespace oracle {

// Euler-Maclaurin Hurwitz zeta(s, a), 0 < a <= 1.  The shifted-term count
// must grow with |Im s| (N >~ t/(2 pi)) or the Bernoulli tail diverges;
// N(t) = ceil(0.8 t) + 30 keeps the last correction term negligible and is
// asserted below.
inline cplx hurwitz_zeta(cplx s, double a) {
    static constexpr double B2J[] = {
        1.0 / 6,          -1.0 / 30,        1.0 / 42,        -1.0 / 30,
        5.0 / 66,         -691.0 / 2730,    7.0 / 6,         -3617.0 / 510,
        43867.0 / 798,    -174611.0 / 330,  854513.0 / 138,  -236364091.0 / 2730,
    };
    const double t = std::abs(std::imag(s));
    const int n_terms = static_cast<int>(std::ceil(0.8 * t)) + 30;
    cplx sum(0.0, 0.0);
    for (int k = 0; k < n_terms; ++k) sum += std::exp(-s * std::log(k + a));
    const double na = n_terms + a;
    const cplx na_ms = std::exp(-s * std::log(na));
    sum += na * na_ms / (s - 1.0) + 0.5 * na_ms;
    cplx poch = s;              // (s)_{2j-1} running product
    double factorial = 1.0;     // (2j)!
    cplx last(0.0, 0.0);
    for (int j = 1; j <= 12; ++j) {
        factorial *= (2.0 * j) * (2.0 * j - 1.0);
        last = B2J[j - 1] / factorial * poch * std::exp((-s - (2.0 * j - 1.0)) * std::log(na));
        sum += last;
        poch *= (s + (2.0 * j - 1.0)) * (s + (2.0 * j + 0.0));
    }
    if (std::abs(last) > 1e-12 * (1.0 + std::abs(sum)))
        throw tolerance_error("hurwitz_zeta: Euler-Maclaurin tail not converged");
    return sum;
}

inline cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

// L(s, chi) for a character given by period m and values chi(1..m):
//   L = m^{-s} sum_a chi(a) zeta(s, a/m).
inline cplx dirichlet_l(cplx s, int m, const std::vector<int>& chi_values) {
    cplx sum(0.0, 0.0);
    for (int a = 1; a <= m; ++a) {
        int c = chi_values[static_cast<std::size_t>(a - 1)];
        if (c != 0) sum += static_cast<double>(c) * hurwitz_zeta(s, static_cast<double>(a) / m);
    }
    return std::exp(-s * std::log(static_cast<double>(m))) * sum;
}

// Factor Hardy functions with explicit theta phases (independent of the
// library's gamma machinery):
//   theta_zeta(t) = Im logGamma(1/4 + it/2) - (t/2) log pi
//   theta_chi3(t) = Im logGamma(3/4 + it/2) + (t/2) log(3/pi)
inline double z_zeta(double t) {
    double theta = std::imag(log_gamma(cplx(0.25, 0.5 * t))) - 0.5 * t * std::log(PI);
    return std::real(std::exp(cplx(0.0, theta)) * riemann_zeta(cplx(0.5, t)));
}

inline double z_chi3(double t) {
    double theta = std::imag(log_gamma(cplx(0.75, 0.5 * t))) + 0.5 * t * std::log(3.0 / PI);
    return std::real(std::exp(cplx(0.0, theta)) * dirichlet_l(cplx(0.5, t), 3, {1, -1, 0}));
}

// Sign-change zeros of a real function on [lo, hi]: fixed-step scan plus
// bisection.  Factor zeros are well separated (gaps > 1), so step 0.1 is
// ample; bisection runs to width <= width_tol.
template <typename Fn>
std::vector<double> scan_zeros(Fn&& f, double lo, double hi, double step = 0.1,
                               double width_tol = 1e-10) {
    std::vector<double> zeros;
    double t0 = lo, f0 = f(t0);
    while (t0 < hi) {
        double t1 = std::min(t0 + step, hi);
        double f1 = f(t1);
        if (f0 == 0.0) zeros.push_back(t0);
        if (f0 * f1 < 0.0) {
            double a = t0, b = t1, fa = f0;
            while (b - a > width_tol) {
                double m = 0.5 * (a + b);
                double fm = f(m);
                if (fa * fm <= 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            zeros.push_back(0.5 * (a + b));
        }
        t0 = t1;
        f0 = f1;
    }
    return zeros;
}

// Union of the factor zeros of zeta(s) L(s, chi_-3) on (lo, hi), sorted --
// the degree-1 oracle for the zero-location acceptance check.
inline std::vector<double> zeta_chi3_zero_union(double lo, double hi) {
    auto zz = scan_zeros([](double t) { return z_zeta(t); }, std::max(lo, 2.0), hi);
    auto zl = scan_zeros([](double t) { return z_chi3(t); }, std::max(lo, 2.0), hi);
    std::vector<double> all;
    all.reserve(zz.size() + zl.size());
    all.insert(all.end(), zz.begin(), zz.end());
    all.insert(all.end(), zl.begin(), zl.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace oracle
}  // namespace selberg

#endif
