#ifndef SELBERG_GAMMA_DELTA_HPP
#define SELBERG_GAMMA_DELTA_HPP

#include <functional>

#include "selberg/invariants.hpp"
#include "selberg/log_gamma.hpp"

namespace selberg {

namespace detail {

inline void check_pole_distance(cplx arg) {
    // Gamma poles at 0, -1, -2, ...; our arguments stay in Re >= 0, so only
    // proximity to 0 (or a negative-real approach) can occur.
    double re = std::real(arg), im = std::abs(std::imag(arg));
    if (re <= 0.0 && im < 1e-8 && std::abs(re - std::round(re)) < 1e-8)
        throw std::domain_error("gamma factor: argument within 1e-8 of a pole");
}

}  // namespace detail

// log gamma(s) = s log Q + sum log Gamma(lambda_j s + mu_j), termwise
// principal; continuous along vertical lines with all arguments in the
// right half-plane.
inline cplx log_gamma_factor(const GammaFactorSpec& spec, cplx s) {
    cplx acc = s * std::log(spec.q_scale);
    for (const auto& [lambda, mu] : spec.factors) {
        cplx arg = lambda * s + mu;
        detail::check_pole_distance(arg);
        acc += log_gamma(arg);
    }
    return acc;
}

// log gamma-bar(w) = conj(log gamma(conj(w))).
inline cplx log_gamma_factor_bar(const GammaFactorSpec& spec, cplx w) {
    return std::conj(log_gamma_factor(spec, std::conj(w)));
}

// log Delta_F(s) = log omega + log gamma-bar(1-s) - log gamma(s), termwise
// continuous determination.
inline cplx log_delta(const GammaFactorSpec& spec, cplx s) {
    return std::log(spec.omega) + log_gamma_factor_bar(spec, 1.0 - s) - log_gamma_factor(spec, s);
}

// Delta_F(s) = omega gamma-bar(1-s) / gamma(s); |Delta| = 1 on Re s = 1/2.
inline cplx delta(const GammaFactorSpec& spec, cplx s) { return std::exp(log_delta(spec, s)); }

// Stirling main term for Delta_F (the paper's asymptotic expansion):
//   Delta_F(s) = omega1 (Q1 t^{d/2})^{1-2sigma-2it} t^{-i Im xi} e^{i d t},
// returned without the 1 + O(1/t) factor.  Requires t = Im s >= 2.
inline cplx delta_asymptotic(const SelbergInvariants& inv, cplx s) {
    const double sigma = std::real(s), t = std::imag(s);
    if (t < 2.0) throw std::domain_error("delta_asymptotic: requires Im s >= 2");
    const cplx i_unit(0.0, 1.0);
    const double log_scale = std::log(inv.q1) + 0.5 * inv.degree * std::log(t);
    cplx log_main = (cplx(1.0 - 2.0 * sigma, 0.0) - 2.0 * i_unit * t) * log_scale -
                    i_unit * std::imag(inv.xi) * std::log(t) + i_unit * inv.degree * t;
    return inv.omega1 * std::exp(log_main);
}

// Stirling main term for Gamma(sigma + it), t >= 2:
//   (2 pi)^{1/2} t^{sigma+it-1/2} e^{-pi t/2 + (pi/2) i (sigma - 1/2) - it}.
inline cplx stirling_gamma(double sigma, double t) {
    if (t < 2.0) throw std::domain_error("stirling_gamma: requires t >= 2");
    const cplx i_unit(0.0, 1.0);
    cplx log_main = 0.5 * std::log(TWO_PI) + (cplx(sigma - 0.5, 0.0) + i_unit * t) * std::log(t) -
                    0.5 * PI * t + 0.5 * PI * i_unit * (sigma - 0.5) - i_unit * t;
    return std::exp(log_main);
}

// Continuous phase theta_F(t): exp(i theta) = Delta^{-1/2}(1/2 + it) up to
// the fixed branch sign.  The termwise-principal determination is already
// continuous in t (all Gamma arguments stay in the right half-plane), so the
// state only has to watch the step-size contract.
struct ThetaState {
    double t = 0.0;
    double theta = 0.0;
    double branch_offset = 0.0;
    bool primed = false;
};

inline double theta_value(const GammaFactorSpec& spec, double t, double branch_offset = 0.0) {
    return -0.5 * std::imag(log_delta(spec, cplx(0.5, t))) + branch_offset;
}

inline ThetaState theta_phase(const GammaFactorSpec& spec, double t, ThetaState state) {
    double theta = theta_value(spec, t, state.branch_offset);
    if (state.primed && std::abs(theta - state.theta) >= PI)
        throw tolerance_error("theta_phase: phase jump >= pi; scan step too large");
    state.t = t;
    state.theta = theta;
    state.primed = true;
    return state;
}

// Growth diagnostic for the convexity estimate: reports
// |Delta^{-1/2}(s) F(s)| / (Q1^{1/2} t^{1/2 + eps}) over a sigma/t grid.
// The F evaluator is injected to keep this header independent of the AFE.
struct GrowthCell {
    double sigma = 0.0, t = 0.0;
    double value = 0.0;  // |Delta^{-1/2} F|
    double ratio = 0.0;  // value / (Q1^{1/2} t^{1/2+eps})
};

inline std::vector<GrowthCell> growth_diagnostic(
    const GammaFactorSpec& spec, const SelbergInvariants& inv,
    const std::vector<double>& sigma_grid, const std::vector<double>& t_grid,
    const std::function<cplx(cplx)>& f_eval, double eps = 0.1) {
    std::vector<GrowthCell> cells;
    cells.reserve(sigma_grid.size() * t_grid.size());
    for (double sigma : sigma_grid)
        for (double t : t_grid) {
            cplx s(sigma, t);
            cplx mod = std::exp(-0.5 * log_delta(spec, s));
            double v = std::abs(mod * f_eval(s));
            GrowthCell cell;
            cell.sigma = sigma;
            cell.t = t;
            cell.value = v;
            cell.ratio = v / (std::sqrt(inv.q1) * std::pow(t, 0.5 + eps));
            cells.push_back(cell);
        }
    return cells;
}

}  // namespace selberg

#endif
