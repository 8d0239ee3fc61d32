#ifndef SELBERG_COEFFICIENTS_HPP
#define SELBERG_COEFFICIENTS_HPP

#include <cstdint>

#include "selberg/characters.hpp"
#include "selberg/common.hpp"
#include "selberg/log_gamma.hpp"

namespace selberg {

// Laurent data of F at s = 1: F(s) = c_m2/(s-1)^2 + c_m1/(s-1) + O(1).
// pole_order 0 means entire.
struct PolarData {
    int pole_order = 0;
    cplx c_m1{0.0, 0.0};
    cplx c_m2{0.0, 0.0};
};

// Finite table of Dirichlet coefficients a(1..N).
class CoefficientSeries {
  public:
    CoefficientSeries(std::vector<cplx> values, bool multiplicative, PolarData polar = {})
        : a_(std::move(values)), multiplicative_(multiplicative), polar_(polar) {
        if (a_.size() < 2 || a_[1] != cplx(1.0, 0.0))
            throw std::invalid_argument("coefficient series requires a(1) = 1");
    }

    std::size_t length() const { return a_.size() - 1; }
    const cplx& operator()(std::size_t n) const {
        if (n < 1 || n > length())
            throw resource_error("coefficient table too short: n = " + std::to_string(n));
        return a_[n];
    }
    const std::vector<cplx>& raw() const { return a_; }  // 1-based, a_[0] unused
    bool multiplicative() const { return multiplicative_; }
    const PolarData& polar() const { return polar_; }

  private:
    std::vector<cplx> a_;
    bool multiplicative_;
    PolarData polar_;
};

// L(1, chi) for a non-principal real character by the digamma formula
// L(1,chi) = -(1/m) sum_{a=1..m-1} chi(a) psi(a/m).
inline double dirichlet_l1(const RealCharacter& chi) {
    if (chi.principal()) throw std::invalid_argument("L(1) diverges for the trivial character");
    const std::int64_t m = std::llabs(chi.discriminant());
    double sum = 0.0;
    for (std::int64_t a = 1; a < m; ++a) {
        int c = chi(a);
        if (c != 0) sum += c * digamma(static_cast<double>(a) / static_cast<double>(m));
    }
    return -sum / static_cast<double>(m);
}

namespace detail {

// Multiplicative fill from prime-power values: smallest-prime-factor sieve,
// a(n) = a(p^e) * a(n / p^e) with p^e || n.
template <typename PrimePowerFn>
std::vector<cplx> multiplicative_sieve(std::size_t n_max, PrimePowerFn&& app) {
    std::vector<std::uint32_t> spf(n_max + 1, 0);
    for (std::size_t i = 2; i <= n_max; ++i) {
        if (spf[i] == 0)
            for (std::size_t m = i; m <= n_max; m += i)
                if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(i);
    }
    std::vector<cplx> a(n_max + 1, cplx(0.0, 0.0));
    a[1] = 1.0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        std::size_t p = spf[n];
        std::size_t q = p, rest = n / p;
        int e = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
            ++e;
        }
        a[n] = (rest == 1) ? app(p, e) : a[q] * a[rest];
    }
    return a;
}

}  // namespace detail

// Coefficients of L(s,chi1)L(s,chi2):  a(n) = sum_{de=n} chi1(d) chi2(e).
// Polar data: two principal factors -> zeta^2 (double pole, c_m2 = 1,
// c_m1 = 2*EulerGamma); one principal -> simple pole with residue
// L(1, other); none -> entire.
inline CoefficientSeries coefficients_dirichlet_product(std::int64_t modulus1, int index1,
                                                        std::int64_t modulus2, int index2,
                                                        std::size_t n_max) {
    RealCharacter chi1(modulus1, index1), chi2(modulus2, index2);
    auto app = [&](std::size_t p, int e) {
        cplx sum(0.0, 0.0);
        // sum_{j=0..e} chi1(p^j) chi2(p^{e-j}); real characters, so powers
        // of the p-values.
        double c1 = static_cast<double>(chi1(static_cast<std::int64_t>(p)));
        double c2 = static_cast<double>(chi2(static_cast<std::int64_t>(p)));
        double pj = 1.0;
        for (int j = 0; j <= e; ++j) {
            double pk = 1.0;
            for (int k = 0; k < e - j; ++k) pk *= c2;
            sum += pj * pk;
            pj *= c1;
        }
        return sum;
    };
    auto values = detail::multiplicative_sieve(n_max, app);
    PolarData polar;
    if (chi1.principal() && chi2.principal()) {
        polar.pole_order = 2;
        polar.c_m2 = 1.0;
        polar.c_m1 = 2.0 * EULER_GAMMA;
    } else if (chi1.principal()) {
        polar.pole_order = 1;
        polar.c_m1 = dirichlet_l1(chi2);
    } else if (chi2.principal()) {
        polar.pole_order = 1;
        polar.c_m1 = dirichlet_l1(chi1);
    }
    return CoefficientSeries(std::move(values), true, polar);
}

// Dedekind zeta of the quadratic field with fundamental discriminant D:
// a(n) = sum_{d|n} chi_D(d);  simple pole with residue L(1, chi_D).
inline CoefficientSeries coefficients_dedekind_quadratic(std::int64_t d, std::size_t n_max) {
    if (!is_fundamental_discriminant(d) || d == 1)
        throw std::invalid_argument("coefficients_dedekind_quadratic: " + std::to_string(d) +
                                    " is not a fundamental discriminant of a quadratic field");
    auto app = [&](std::size_t p, int e) {
        int c = kronecker(d, static_cast<std::int64_t>(p));
        // 1 + c + c^2 + ... + c^e
        if (c == 0) return cplx(1.0, 0.0);
        if (c == 1) return cplx(static_cast<double>(e + 1), 0.0);
        return cplx((e % 2 == 0) ? 1.0 : 0.0, 0.0);
    };
    auto values = detail::multiplicative_sieve(n_max, app);
    PolarData polar;
    polar.pole_order = 1;
    polar.c_m1 = dirichlet_l1(RealCharacter::from_discriminant(d));
    return CoefficientSeries(std::move(values), true, polar);
}

// Constant-one coefficients (a degree-1 zeta factor): simple pole, residue 1.
inline CoefficientSeries coefficients_ones(std::size_t n_max) {
    std::vector<cplx> values(n_max + 1, cplx(1.0, 0.0));
    values[0] = 0.0;
    PolarData polar;
    polar.pole_order = 1;
    polar.c_m1 = 1.0;
    return CoefficientSeries(std::move(values), true, polar);
}

// Coefficients of a single real Dirichlet L-function: a(n) = chi(n).
inline CoefficientSeries coefficients_character(std::int64_t modulus, int index,
                                                std::size_t n_max) {
    RealCharacter chi(modulus, index);
    std::vector<cplx> values(n_max + 1, cplx(0.0, 0.0));
    for (std::size_t n = 1; n <= n_max; ++n)
        values[n] = static_cast<double>(chi(static_cast<std::int64_t>(n)));
    PolarData polar;
    if (chi.principal()) {
        polar.pole_order = 1;
        polar.c_m1 = 1.0;
    }
    return CoefficientSeries(std::move(values), true, polar);
}

// Truncated local Euler factor  sum_{m=0..M} a(p^m) p^{-ms}.
inline cplx euler_factor(const CoefficientSeries& series, std::uint64_t p, cplx s, int m_order) {
    if (p < 2) throw std::invalid_argument("euler_factor: p must be prime");
    cplx sum(1.0, 0.0);
    double log_p = std::log(static_cast<double>(p));
    std::uint64_t pm = 1;
    for (int m = 1; m <= m_order; ++m) {
        if (pm > series.length() / p)
            throw resource_error("euler_factor: table does not cover p^M");
        pm *= p;
        sum += series(pm) * std::exp(-s * (static_cast<double>(m) * log_p));
    }
    return sum;
}

}  // namespace selberg

#endif
