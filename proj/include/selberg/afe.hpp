#ifndef SELBERG_AFE_HPP
#define SELBERG_AFE_HPP

#include "selberg/coefficients.hpp"
#include "selberg/gamma_delta.hpp"

namespace selberg {

// Balanced approximate functional equation with Gaussian smoothing:
//
//   F(s) = sum_n a(n) n^{-s} V(s,n) + Delta_F(s) sum_n conj(a(n)) n^{s-1} Vt(s,n)
//          - (R1 + R0) / gamma(s),
//
//   V(s,n)  = (1/2pi i) int_(c) [gamma(s+z)/gamma(s)] e^{z^2/4A} n^{-z} dz/z,
//   Vt(s,n) = same with gamma-bar(1-s+z)/gamma-bar(1-s),
//
// an identity for every A > 0 (shift the contour, apply the functional
// equation on the mirror line; R1, R0 collect the residues from the pole of
// F at 1 and its mirror at 0).  The weights are ~1 for n well below the
// balance point X = Q1 t^{d/2} and die off super-polynomially above it, so
// a modest table yields near machine-precision values -- a sharp cutoff's
// Theta(t^{-1/2}) truncation error would swamp the zero-location and
// realness tolerances.
struct AfePolicy {
    double gaussian_a = 2.5;    // A in e^{z^2/4A}
    double contour_re = 1.25;   // Re z on the integration line
    double node_step = 0.25;    // trapezoid step in Im z
    double y_max = 28.0;        // contour truncation; see note below
    double tail_cut = 34.0;     // drop terms once A log^2(n/X) exceeds this
    std::size_t cutoff_override = 0;  // 0: balanced cutoff
};

// The gamma ratio grows like e^{(pi/2)|y|} in the direction that shifts the
// argument toward the real axis, so the integrand only starts decaying past
// the crossover |y| = 2 pi A ~ 15.7; y_max must sit well beyond it.  28
// leaves e^{(pi/2) y - y^2/4A} ~ 1e-15 at the cut, 23 ~ 1e-8.  The fast
// policy tolerates ~1e-7 relative weight error (step 0.4 aliases at
// e^{-2 pi c/h} ~ 3e-9, tail cut 22 truncates at e^{-22}) for roughly half
// the work per evaluation; bulk consumers -- quadrature over [T, 2T], long
// sign-change scans -- sit orders of magnitude above that floor.
inline AfePolicy afe_fast_policy() {
    AfePolicy p;
    p.node_step = 0.4;
    p.y_max = 23.0;
    p.tail_cut = 22.0;
    return p;
}

struct FEvaluation {
    cplx value{0.0, 0.0};
    int cutoff = 0;               // ceil of the balance point X
    std::size_t terms_used = 0;   // length of the summed Dirichlet tail
    double error_estimate = 0.0;
};

inline FEvaluation evaluate_f(const GammaFactorSpec& spec, const SelbergInvariants& inv,
                              const CoefficientSeries& series, cplx s,
                              const AfePolicy& policy = {}) {
    const double sigma = std::real(s), t = std::imag(s);
    if (t < 2.0) throw std::domain_error("evaluate_f: requires Im s >= 2");

    const double a_gauss = policy.gaussian_a;
    const double c = std::max(policy.contour_re, 1.0 - sigma + 0.25);
    const double h = policy.node_step;
    const int half_nodes = static_cast<int>(std::floor(policy.y_max / h));
    const int n_nodes = 2 * half_nodes + 1;

    const cplx lg_s = log_gamma_factor(spec, s);
    const cplx lgbar_1ms = log_gamma_factor_bar(spec, 1.0 - s);
    const cplx log_delta_s = std::log(spec.omega) + lgbar_1ms - lg_s;

    // Node weights H_k (first sum) and Ht_k (mirror sum).
    std::vector<cplx> wt1(static_cast<std::size_t>(n_nodes)), wt2(static_cast<std::size_t>(n_nodes));
    const double quad_scale = h / TWO_PI;
    for (int k = 0; k < n_nodes; ++k) {
        const cplx z(c, (k - half_nodes) * h);
        const cplx gauss = z * z / (4.0 * a_gauss);
        wt1[static_cast<std::size_t>(k)] =
            quad_scale * std::exp(log_gamma_factor(spec, s + z) - lg_s + gauss) / z;
        wt2[static_cast<std::size_t>(k)] =
            quad_scale * std::exp(log_gamma_factor_bar(spec, 1.0 - s + z) - lgbar_1ms + gauss) / z;
    }

    const double x_balance = (policy.cutoff_override > 0)
                                 ? static_cast<double>(policy.cutoff_override)
                                 : inv.q1 * std::pow(t, 0.5 * inv.degree);

    cplx sum1(0.0, 0.0), sum2(0.0, 0.0);
    double l1_first = 0.0, l1_second = 0.0;
    std::size_t terms = 0, small_run = 0;
    const double y0 = -half_nodes * h;
    for (std::size_t n = 1;; ++n) {
        const double log_n = std::log(static_cast<double>(n));
        const double log_ratio = log_n - std::log(x_balance);
        // Stop once the a-priori Gaussian bound is past the cut AND the
        // last few computed terms were negligible -- at small t the weight
        // transition is wider than the large-t bound suggests.  The node
        // quadrature has an aliasing floor of e^{-2 pi c / node_step}, so the
        // per-term smallness threshold cannot sit below that; 1e-13 of the
        // accumulated mass keeps the stopping residual under the error
        // estimate.  The 4x cut is an unconditional backstop.
        const bool past_cut =
            log_ratio > 0.0 && a_gauss * log_ratio * log_ratio > policy.tail_cut;
        if (past_cut && (small_run >= 5 ||
                         a_gauss * log_ratio * log_ratio > 4.0 * policy.tail_cut))
            break;
        if (n > series.length())
            throw resource_error("evaluate_f: coefficient table too short (need ~" +
                                 std::to_string(static_cast<std::size_t>(
                                     x_balance * std::exp(std::sqrt(policy.tail_cut / a_gauss)))) +
                                 " terms)");
        // n^{-z_k} along the node line via a rotation recurrence.
        cplx cur = std::exp(cplx(-c * log_n, -y0 * log_n));
        const cplx rot = std::exp(cplx(0.0, -h * log_n));
        cplx v(0.0, 0.0), vt(0.0, 0.0);
        for (int k = 0; k < n_nodes; ++k) {
            v += wt1[static_cast<std::size_t>(k)] * cur;
            vt += wt2[static_cast<std::size_t>(k)] * cur;
            cur *= rot;
        }
        const cplx an = series(n);
        const cplx term1 = an * std::exp(-s * log_n) * v;
        const cplx term2 = std::conj(an) * std::exp((s - 1.0) * log_n) * vt;
        sum1 += term1;
        sum2 += term2;
        l1_first += std::abs(term1);
        l1_second += std::abs(term2);
        ++terms;
        const double small = 1e-13 * (1.0 + l1_first + l1_second);
        if (std::abs(term1) + std::abs(term2) <= small)
            ++small_run;
        else
            small_run = 0;
    }

    cplx pole_part(0.0, 0.0);
    const PolarData& polar = series.polar();
    if (polar.pole_order > 0) {
        const cplx gamma_1 = std::exp(log_gamma_factor(spec, cplx(1.0, 0.0)));
        cplx dlog_gamma_1 = std::log(spec.q_scale);
        for (const auto& [lambda, mu] : spec.factors) dlog_gamma_1 += lambda * digamma(lambda + mu);
        const cplx lam_m1 = gamma_1 * polar.c_m1 + gamma_1 * dlog_gamma_1 * polar.c_m2;
        const cplx lam_m2 = gamma_1 * polar.c_m2;
        const double a4 = 1.0 / (4.0 * a_gauss);
        // Each residue term carries e^{w^2/4A} / Gamma_F(s); the first factor
        // underflows and the second overflows at large t, so the exponents
        // must combine before exponentiation or 0 * inf poisons the value.
        auto smooth = [&](cplx w) { return std::exp(w * w * a4 - lg_s) / w; };
        auto smooth_prime = [&](cplx w) {
            return std::exp(w * w * a4 - lg_s) * (2.0 * a4 * w * w - 1.0) / (w * w);
        };
        cplx residues = lam_m1 * smooth(1.0 - s) - spec.omega * std::conj(lam_m1) * smooth(-s);
        if (polar.pole_order > 1)
            residues += lam_m2 * smooth_prime(1.0 - s) +
                        spec.omega * std::conj(lam_m2) * smooth_prime(-s);
        pole_part = -residues;
    }

    FEvaluation out;
    const cplx delta_s = std::exp(log_delta_s);
    out.value = sum1 + delta_s * sum2 + pole_part;
    out.cutoff = static_cast<int>(std::ceil(x_balance));
    out.terms_used = terms;
    out.error_estimate = 1e-11 * (1.0 + l1_first + std::abs(delta_s) * l1_second);
    return out;
}

}  // namespace selberg

#endif
