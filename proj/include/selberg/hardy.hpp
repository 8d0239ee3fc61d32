#ifndef SELBERG_HARDY_HPP
#define SELBERG_HARDY_HPP

#include <atomic>
#include <mutex>
#include <thread>

#include "selberg/afe.hpp"
#include "selberg/thresholds.hpp"

namespace selberg {

struct ZSample {
    double t = 0.0;
    double z = 0.0;
    cplx f_value{0.0, 0.0};
    double theta = 0.0;
    int cutoff = 0;
    double imag_residual = 0.0;
    bool accepted = true;
};

// Z_F(t) = Delta_F(1/2+it)^{-1/2} F(1/2+it) = Re(e^{i theta} F), theta from
// the continuous termwise determination (branch offset 0).
inline ZSample hardy_z(const GammaFactorSpec& spec, const SelbergInvariants& inv,
                       const CoefficientSeries& series, double t,
                       const AfePolicy& policy = {}) {
    FEvaluation fe = evaluate_f(spec, inv, series, cplx(0.5, t), policy);
    ZSample sample;
    sample.t = t;
    sample.theta = theta_value(spec, t);
    cplx rotated = std::exp(cplx(0.0, sample.theta)) * fe.value;
    sample.z = std::real(rotated);
    sample.f_value = fe.value;
    sample.cutoff = fe.cutoff;
    sample.imag_residual = std::abs(std::imag(rotated));
    sample.accepted =
        sample.imag_residual <= thresholds::Z_RESIDUAL_TOL * (1.0 + std::abs(sample.z));
    return sample;
}

// Evaluations at distinct t are pure, so a grid may fan out over worker
// threads; results are assembled by index, keeping the output deterministic.
inline std::vector<ZSample> hardy_z_grid(const GammaFactorSpec& spec,
                                         const SelbergInvariants& inv,
                                         const CoefficientSeries& series,
                                         const std::vector<double>& t_grid,
                                         std::size_t workers = 1,
                                         const AfePolicy& policy = {}) {
    std::vector<ZSample> out(t_grid.size());
    if (workers <= 1 || t_grid.size() < 2) {
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            out[i] = hardy_z(spec, inv, series, t_grid[i], policy);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    auto drain = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < t_grid.size();) {
            try {
                out[i] = hardy_z(spec, inv, series, t_grid[i], policy);
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_lock);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers, t_grid.size()); ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

struct SignChange {
    double t_left = 0.0, t_right = 0.0;
    double refined_zero = 0.0;
    double refinement_width = 0.0;
};

struct ScanResult {
    std::vector<SignChange> zeros;
    std::size_t samples = 0;
    std::size_t rejected_samples = 0;   // residual-tolerance failures, reported not hidden
    double t_start = 0.0;               // after the t >= 2 clamp
};

// Zero-density step heuristic: ~(d/2pi) log(Q1 t^{d/2}) zeros per unit t,
// so pi / (log(Q1 t^{d/2}) + 1) keeps the expected count per step below 1/2.
struct StepPolicy {
    double refine_factor = 1.0;  // divide the heuristic step by this
    double max_step = 1.0;
    double bisection_width = 1e-9;
};

inline double density_step(const SelbergInvariants& inv, double t, const StepPolicy& policy) {
    double log_x = std::log(std::max(inv.q1 * std::pow(std::max(t, 2.0), 0.5 * inv.degree), 1.0));
    return std::min(policy.max_step, PI / (log_x + 1.0)) / policy.refine_factor;
}

namespace detail {

template <typename ZFn>
SignChange bisect_zero(ZFn&& zf, double a, double b, double fa, double width_tol,
                       std::size_t& eval_count) {
    SignChange change;
    change.t_left = a;
    change.t_right = b;
    while (b - a > width_tol) {
        double mid = 0.5 * (a + b);
        double fm = zf(mid);
        ++eval_count;
        if (fa * fm <= 0.0)
            b = mid;
        else {
            a = mid;
            fa = fm;
        }
    }
    change.refined_zero = 0.5 * (a + b);
    change.refinement_width = b - a;
    return change;
}

}  // namespace detail

// Scan [t_lo, t_hi] for sign changes of Z_F; each change is refined by
// bisection.  Evaluation starts at max(t_lo, 2) -- the AFE and the
// asymptotic machinery need t bounded away from 0.  When two refined zeros
// land within three local steps, the bracket between them is re-scanned at
// an eighth of the step as a cluster safeguard.
inline ScanResult scan_sign_changes(const GammaFactorSpec& spec, const SelbergInvariants& inv,
                                    const CoefficientSeries& series, double t_lo, double t_hi,
                                    const StepPolicy& step_policy = {},
                                    const AfePolicy& afe_policy = {}) {
    ScanResult result;
    result.t_start = std::max(t_lo, 2.0);
    if (t_hi <= result.t_start) return result;

    auto zf = [&](double t) { return hardy_z(spec, inv, series, t, afe_policy).z; };

    std::vector<std::pair<double, double>> pending;  // brackets with sign change
    double t0 = result.t_start;
    ZSample s0 = hardy_z(spec, inv, series, t0, afe_policy);
    ++result.samples;
    if (!s0.accepted) ++result.rejected_samples;
    while (t0 < t_hi) {
        double step = density_step(inv, t0, step_policy);
        double t1 = std::min(t0 + step, t_hi);
        ZSample s1 = hardy_z(spec, inv, series, t1, afe_policy);
        ++result.samples;
        if (!s1.accepted) ++result.rejected_samples;
        if (s0.z * s1.z < 0.0) pending.emplace_back(t0, t1);
        t0 = t1;
        s0 = s1;
    }
    for (const auto& [a, b] : pending) {
        ++result.samples;
        result.zeros.push_back(
            detail::bisect_zero(zf, a, b, zf(a), step_policy.bisection_width, result.samples));
    }

    // Cluster safeguard: refine between close neighbours at step/8.
    std::vector<SignChange> extra;
    for (std::size_t i = 0; i + 1 < result.zeros.size(); ++i) {
        double za = result.zeros[i].refined_zero, zb = result.zeros[i + 1].refined_zero;
        double local = density_step(inv, za, step_policy);
        if (zb - za < 3.0 * local && zb - za > 4.0 * step_policy.bisection_width) {
            double fine = local / 8.0;
            double u0 = za + 2.0 * step_policy.bisection_width;
            double f0 = zf(u0);
            while (u0 < zb - 2.0 * step_policy.bisection_width) {
                double u1 = std::min(u0 + fine, zb - 2.0 * step_policy.bisection_width);
                double f1 = zf(u1);
                ++result.samples;
                if (f0 * f1 < 0.0)
                    extra.push_back(detail::bisect_zero(zf, u0, u1, f0, step_policy.bisection_width,
                                                        result.samples));
                u0 = u1;
                f0 = f1;
                if (u1 >= zb - 2.0 * step_policy.bisection_width) break;
            }
        }
    }
    for (auto& e : extra) result.zeros.push_back(e);
    std::sort(result.zeros.begin(), result.zeros.end(),
              [](const SignChange& x, const SignChange& y) { return x.refined_zero < y.refined_zero; });
    return result;
}

struct HardyIntegralReport {
    double T = 0.0;
    double integral = 0.0;      // I = int_T^{2T} Z dt
    double integral_abs = 0.0;  // int_T^{2T} |Z| dt
    std::size_t samples = 0;
    double quadrature_error_estimate = 0.0;
};

// Composite Simpson on [T, 2T], step halved from the density heuristic until
// the error estimate converges.  Halving a stage reuses every sample already
// computed -- the coarse nodes are bit-for-bit a subset of the fine ones, so
// the total evaluation count equals the finest stage's node count.  The
// smooth integral converges at h^4 and takes the Richardson /15 estimate;
// |Z| has a kink at every zero, which degrades it to h^2, hence /3.
inline HardyIntegralReport hardy_integrals(const GammaFactorSpec& spec,
                                           const SelbergInvariants& inv,
                                           const CoefficientSeries& series, double T,
                                           double tol = 0.0,
                                           const AfePolicy& afe_policy = afe_fast_policy()) {
    if (T < 2.0) throw std::domain_error("hardy_integrals: requires T >= 2");
    if (tol <= 0.0) tol = thresholds::HARDY_INTEGRAL_TOL_SCALE * (1.0 + T);
    HardyIntegralReport report;
    report.T = T;

    StepPolicy sp;
    std::size_t intervals = static_cast<std::size_t>(
        std::ceil(T / std::min(density_step(inv, 2.0 * T, sp), 0.5)));
    if (intervals % 2 == 1) ++intervals;

    double h = T / static_cast<double>(intervals);
    std::vector<double> zs(intervals + 1);
    for (std::size_t k = 0; k < zs.size(); ++k) {
        zs[k] = hardy_z(spec, inv, series, T + h * static_cast<double>(k), afe_policy).z;
        ++report.samples;
    }

    auto simpson = [&](double& out_abs) {
        KahanSum<double> acc, acc_abs;
        for (std::size_t k = 0; k < zs.size(); ++k) {
            double w = (k == 0 || k + 1 == zs.size()) ? 1.0 : ((k % 2 == 1) ? 4.0 : 2.0);
            acc.add(w * zs[k]);
            acc_abs.add(w * std::abs(zs[k]));
        }
        out_abs = acc_abs.value() * h / 3.0;
        return acc.value() * h / 3.0;
    };

    double abs1 = 0.0, abs2 = 0.0;
    double i1 = simpson(abs1);
    for (int stage = 0; stage < 8; ++stage) {
        std::vector<double> fine(2 * zs.size() - 1);
        h *= 0.5;
        for (std::size_t j = 0; j < zs.size(); ++j) fine[2 * j] = zs[j];
        for (std::size_t k = 1; k < fine.size(); k += 2) {
            fine[k] = hardy_z(spec, inv, series, T + h * static_cast<double>(k), afe_policy).z;
            ++report.samples;
        }
        zs.swap(fine);
        double i2 = simpson(abs2);
        double err = std::abs(i2 - i1) / 15.0 + std::abs(abs2 - abs1) / 3.0;
        if (err < tol) {
            report.integral = i2 + (i2 - i1) / 15.0;
            report.integral_abs = abs2;
            report.quadrature_error_estimate = err;
            return report;
        }
        i1 = i2;
        abs1 = abs2;
    }
    throw tolerance_error("hardy_integrals: quadrature did not converge to tolerance");
}

}  // namespace selberg

#endif
