#ifndef SELBERG_OSC_INTEGRAL_HPP
#define SELBERG_OSC_INTEGRAL_HPP

#include <array>
#include <string>

#include "selberg/common.hpp"
#include "selberg/thresholds.hpp"

namespace selberg {

// J(alpha, beta; T, T') = int_T^{T'} t^alpha (t/(e beta))^{it} dt.
// Phase phi(t) = t log(t/(e beta)), phi'(t) = log(t/beta): stationary at t = beta.
struct OscIntegralSpec {
    double alpha = 0.0;
    double beta = 1.0;
    double T = 2.0;
    double T_prime = 4.0;

    void validate() const {
        if (!(alpha >= 0.0)) throw std::invalid_argument("OscIntegralSpec: alpha must be >= 0");
        if (!(beta > 0.0)) throw std::invalid_argument("OscIntegralSpec: beta must be positive");
        if (!(T > 0.0) || !(T <= T_prime) || !(T_prime <= 2.0 * T + 1e-12))
            throw std::invalid_argument("OscIntegralSpec: need 0 < T <= T' <= 2T");
    }
};

enum class OscRegime { beta_below_T, stationary, beta_above_Tprime, boundary };

inline const char* to_string(OscRegime regime) {
    switch (regime) {
        case OscRegime::beta_below_T: return "beta_below_T";
        case OscRegime::stationary: return "stationary";
        case OscRegime::beta_above_Tprime: return "beta_above_Tprime";
        case OscRegime::boundary: return "boundary";
    }
    return "unknown";
}

// Boundary bands |beta - T| < 1 and |beta - T'| < 1 fall outside the
// regime case split; only the universal bound applies there.
inline OscRegime classify_regime(const OscIntegralSpec& spec) {
    spec.validate();
    if (std::abs(spec.beta - spec.T) < 1.0 || std::abs(spec.beta - spec.T_prime) < 1.0)
        return OscRegime::boundary;
    if (spec.beta < spec.T) return OscRegime::beta_below_T;
    if (spec.beta > spec.T_prime) return OscRegime::beta_above_Tprime;
    return OscRegime::stationary;
}

inline cplx stationary_main_term(const OscIntegralSpec& spec) {
    spec.validate();
    if (!(spec.T < spec.beta && spec.beta < spec.T_prime))
        throw std::invalid_argument("stationary_main_term: requires T < beta < T'");
    return std::sqrt(TWO_PI) * std::pow(spec.beta, spec.alpha + 0.5) *
           std::exp(cplx(0.0, 0.25 * PI - spec.beta));
}

namespace detail {

// Gauss-Legendre 24-point rule on [-1, 1] (symmetric half shown; mirrored below).
inline constexpr std::array<std::array<double, 2>, 12> GL24_HALF = {{
    {6.40568928626056300e-02, 1.27938195346752215e-01},
    {1.91118867473616311e-01, 1.25837456346828303e-01},
    {3.15042679696163397e-01, 1.21670472927803419e-01},
    {4.33793507626045127e-01, 1.15505668053725613e-01},
    {5.45421471388839563e-01, 1.07444270115965607e-01},
    {6.48093651936975546e-01, 9.76186521041140648e-02},
    {7.40124191578554358e-01, 8.61901615319532882e-02},
    {8.20001985973902947e-01, 7.33464814110804109e-02},
    {8.86415527004400960e-01, 5.92985849154367417e-02},
    {9.38274552002732798e-01, 4.42774388174195510e-02},
    {9.74728555971309474e-01, 2.85313886289337432e-02},
    {9.95187219997021311e-01, 1.23412297999870909e-02},
}};

// One pass over [T, T'] with panel widths pi / max(|log(t/beta)|, 0.1),
// shrunk by `halve`; GL-24 inside each panel.  The width cap keeps the
// phase change per panel near pi away from the stationary point.
inline cplx osc_pass(const OscIntegralSpec& spec, int halve, std::size_t& panels) {
    KahanSum<double> re, im;
    double t0 = spec.T;
    const double log_e_beta = std::log(spec.beta) + 1.0;
    while (t0 < spec.T_prime) {
        double dphi = std::abs(std::log(t0 / spec.beta));
        double width = PI / std::max(dphi, 0.1) / static_cast<double>(halve);
        double t1 = std::min(t0 + width, spec.T_prime);
        double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
        cplx panel{0.0, 0.0};
        for (const auto& [node, weight] : GL24_HALF) {
            for (double sign : {-1.0, 1.0}) {
                double t = mid + sign * half * node;
                double phase = t * (std::log(t) - log_e_beta);
                panel += weight * std::pow(t, spec.alpha) * std::exp(cplx(0.0, phase));
            }
        }
        re.add(half * std::real(panel));
        im.add(half * std::imag(panel));
        ++panels;
        t0 = t1;
    }
    return {re.value(), im.value()};
}

}  // namespace detail

struct OscQuadrature {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

inline OscQuadrature osc_quadrature_full(const OscIntegralSpec& spec, double tol) {
    spec.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("osc_quadrature: tol must be positive");
    OscQuadrature result;
    if (spec.T == spec.T_prime) return result;
    cplx prev = detail::osc_pass(spec, 1, result.panels);
    for (int halve = 2; halve <= 128; halve *= 2) {
        cplx cur = detail::osc_pass(spec, halve, result.panels);
        double diff = std::abs(cur - prev);
        if (diff < tol) {
            result.value = cur;
            result.error_estimate = diff;
            return result;
        }
        prev = cur;
    }
    throw tolerance_error("osc_quadrature: tolerance not reached within panel budget");
}

inline cplx osc_quadrature(const OscIntegralSpec& spec, double tol) {
    return osc_quadrature_full(spec, tol).value;
}

// Frozen fitted constants for the Lemma-1 bounds (one-time calibration run;
// see data/thresholds.json for the mirrored values).
struct Lemma1Constants {
    double regime_below = thresholds::LEMMA1_REGIME_BELOW;
    double regime_above = thresholds::LEMMA1_REGIME_ABOVE;
    double stationary_err = thresholds::LEMMA1_STATIONARY_ERR;
    double universal = thresholds::LEMMA1_UNIVERSAL;
};

struct OscIntegralResult {
    OscIntegralSpec spec;
    cplx value{0.0, 0.0};
    OscRegime regime = OscRegime::boundary;
    bool has_main_term = false;
    cplx main_term{0.0, 0.0};
    double bound = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

// Evaluate J, classify the regime, and attach the applicable fitted bound:
// the regime bound where the case split applies, the stationary error bound
// on |J - main| in the stationary regime, the universal bound on the bands.
inline OscIntegralResult osc_integral(const OscIntegralSpec& spec, double tol,
                                      const Lemma1Constants& constants = {}) {
    OscIntegralResult result;
    result.spec = spec;
    result.regime = classify_regime(spec);
    OscQuadrature quad = osc_quadrature_full(spec, tol);
    result.value = quad.value;
    result.error_estimate = quad.error_estimate;
    result.panels = quad.panels;
    const double t_alpha = std::pow(spec.T, spec.alpha);
    switch (result.regime) {
        case OscRegime::beta_below_T:
            result.bound = constants.regime_below * t_alpha / std::log(spec.T / spec.beta);
            break;
        case OscRegime::beta_above_Tprime:
            result.bound = constants.regime_above * t_alpha / std::log(spec.beta / spec.T_prime);
            break;
        case OscRegime::stationary:
            result.has_main_term = true;
            result.main_term = stationary_main_term(spec);
            result.bound = constants.stationary_err * std::pow(spec.T, spec.alpha + 0.4);
            break;
        case OscRegime::boundary:
            result.bound = constants.universal * std::pow(spec.T, spec.alpha + 0.5);
            break;
    }
    return result;
}

struct RegimeSweepRow {
    OscIntegralSpec spec;
    double abs_j = 0.0;
    double denominator = 1.0;  // bound denominator: log(T/beta), log(beta/T'), or 1
    double ratio = 0.0;        // |J| * denominator / T^alpha (or /T^(alpha+1/2) universal)
};

struct Lemma1Report {
    // Per regime: rows grouped by T slice, the constant fitted on the
    // smallest-T slice, and the sup ratio over each later slice.
    struct RegimeBlock {
        OscRegime regime;
        double alpha = 0.0;
        std::vector<double> t_slices;
        std::vector<double> sup_ratios;  // aligned with t_slices
        double fitted_constant = 0.0;    // sup over the smallest slice
        bool stable = false;             // later sups <= 2 * fitted
    };
    std::vector<RegimeBlock> blocks;
    std::vector<RegimeSweepRow> rows;
    bool all_stable = true;
};

// Sweep the three Lemma-1 regimes over T slices, fit each constant on the
// smallest slice, and check factor-2 stability at larger T.  beta fractions
// avoid the boundary bands except in the universal sweep, which includes
// them.  points_per_regime = 0 keeps the frozen calibration fractions; a
// positive value replaces each set with that many equispaced fractions over
// the same span (below [0.10, 0.85], above [2.2, 8.0], universal [0.5, 3.0]).
inline Lemma1Report verify_lemma1(const std::vector<double>& t_slices,
                                  const std::vector<double>& alphas, double tol_scale = 1e-7,
                                  std::size_t points_per_regime = 0) {
    if (t_slices.size() < 2) throw std::invalid_argument("verify_lemma1: need at least 2 T slices");
    Lemma1Report report;
    std::vector<double> below_fracs = {0.10, 0.22, 0.34, 0.47, 0.60, 0.72, 0.85};
    std::vector<double> above_fracs = {2.2, 2.8, 3.6, 4.6, 6.0, 8.0};
    std::vector<double> universal_fracs = {0.5, 0.99, 1.0, 1.2, 1.5, 1.8, 2.0, 2.01, 3.0};
    if (points_per_regime == 1)
        throw std::invalid_argument("verify_lemma1: points_per_regime must be 0 or >= 2");
    if (points_per_regime > 1) {
        auto equispaced = [&](double lo, double hi) {
            std::vector<double> fracs(points_per_regime);
            for (std::size_t i = 0; i < points_per_regime; ++i)
                fracs[i] = lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(points_per_regime - 1);
            return fracs;
        };
        below_fracs = equispaced(0.10, 0.85);
        above_fracs = equispaced(2.2, 8.0);
        universal_fracs = equispaced(0.5, 3.0);
    }

    auto sweep = [&](OscRegime regime, double alpha, const std::vector<double>& fracs) {
        Lemma1Report::RegimeBlock block;
        block.regime = regime;
        block.alpha = alpha;
        for (double T : t_slices) {
            double sup = 0.0;
            for (double frac : fracs) {
                OscIntegralSpec spec{alpha, frac * T, T, 2.0 * T};
                if (regime != OscRegime::boundary && classify_regime(spec) != regime) continue;
                cplx j = osc_quadrature(spec, tol_scale * std::pow(T, alpha));
                RegimeSweepRow row;
                row.spec = spec;
                row.abs_j = std::abs(j);
                switch (regime) {
                    case OscRegime::beta_below_T:
                        row.denominator = std::log(spec.T / spec.beta);
                        row.ratio = row.abs_j * row.denominator / std::pow(T, alpha);
                        break;
                    case OscRegime::beta_above_Tprime:
                        row.denominator = std::log(spec.beta / spec.T_prime);
                        row.ratio = row.abs_j * row.denominator / std::pow(T, alpha);
                        break;
                    default:
                        row.denominator = 1.0;
                        row.ratio = row.abs_j / std::pow(T, alpha + 0.5);
                        break;
                }
                sup = std::max(sup, row.ratio);
                report.rows.push_back(row);
            }
            block.t_slices.push_back(T);
            block.sup_ratios.push_back(sup);
        }
        block.fitted_constant = block.sup_ratios.front();
        block.stable = true;
        for (double sup : block.sup_ratios)
            if (sup > thresholds::LEMMA1_STABILITY_FACTOR * block.fitted_constant)
                block.stable = false;
        report.all_stable = report.all_stable && block.stable;
        report.blocks.push_back(block);
    };

    for (double alpha : alphas) {
        sweep(OscRegime::beta_below_T, alpha, below_fracs);
        sweep(OscRegime::beta_above_Tprime, alpha, above_fracs);
        sweep(OscRegime::boundary, alpha, universal_fracs);  // universal bound incl. bands
    }
    return report;
}

}  // namespace selberg

#endif
