#ifndef SELBERG_LOG_GAMMA_HPP
#define SELBERG_LOG_GAMMA_HPP

#include "selberg/common.hpp"

namespace selberg {

namespace detail {

// Stirling series coefficients B_{2n} / (2n(2n-1)).
inline constexpr double STIRLING_C[] = {
    1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
};

inline constexpr double LOG_SQRT_TWO_PI = 0.91893853320467274178032973640562;

}  // namespace detail

// Log Gamma: on the right half-plane the analytic continuation along the
// real axis (continuous there, not Log of Gamma); accuracy ~1e-14 relative.
// Recurrence shifts the argument right until Stirling's series converges.
// Left of the axis the reflection formula extends it; the branch is not
// tracked across the left-plane pole lattice -- callers only exponentiate
// such values, which is branch-free.
inline cplx log_gamma(cplx z) {
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("log_gamma: pole at 0");
    if (std::real(z) < 0.0) {
        if (std::imag(z) == 0.0 && std::real(z) == std::floor(std::real(z)))
            throw std::domain_error("log_gamma: pole at a non-positive integer");
        // log sin(pi z) without overflow: peel off the dominant exponential.
        const cplx ipz = cplx(0.0, PI) * z;
        cplx log_sin;
        const double log2 = 0.69314718055994530941723212145818;
        if (std::imag(z) >= 0.0)
            log_sin = cplx(-log2, 0.5 * PI) - ipz + std::log(1.0 - std::exp(2.0 * ipz));
        else
            log_sin = cplx(-log2, -0.5 * PI) + ipz + std::log(1.0 - std::exp(-2.0 * ipz));
        return std::log(PI) - log_sin - log_gamma(1.0 - z);
    }
    cplx shift(0.0, 0.0);
    while (std::real(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const cplx zinv = 1.0 / z;
    const cplx zinv2 = zinv * zinv;
    cplx series(0.0, 0.0);
    cplx pw = zinv;
    for (double c : detail::STIRLING_C) {
        series += c * pw;
        pw *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + detail::LOG_SQRT_TWO_PI + series - shift;
}

// Digamma psi(z) for Re z > 0 (same shift-then-Stirling scheme).
inline cplx digamma(cplx z) {
    if (std::real(z) <= 0.0)
        throw std::domain_error("digamma: argument must have positive real part");
    cplx shift(0.0, 0.0);
    while (std::real(z) < 15.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    static constexpr double C[] = {
        1.0 / 12.0,  -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const cplx zinv2 = 1.0 / (z * z);
    cplx series(0.0, 0.0);
    cplx pw = zinv2;
    for (double c : C) {
        series += c * pw;
        pw *= zinv2;
    }
    return std::log(z) - 0.5 / z - series - shift;
}

inline double digamma(double x) { return std::real(digamma(cplx(x, 0.0))); }

}  // namespace selberg

#endif
