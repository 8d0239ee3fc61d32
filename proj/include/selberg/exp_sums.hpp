#ifndef SELBERG_EXP_SUMS_HPP
#define SELBERG_EXP_SUMS_HPP

#include <algorithm>
#include <string>

#include "selberg/coefficients.hpp"
#include "selberg/invariants.hpp"
#include "selberg/primes.hpp"
#include "selberg/thresholds.hpp"

namespace selberg {

// S(x) = sum_{n<=x} a(n) e^{2 pi i n alpha}, direct compensated accumulation.
inline cplx weyl_sum(const CoefficientSeries& series, double alpha, std::size_t x) {
    if (x > series.length()) throw resource_error("weyl_sum: table shorter than x");
    KahanSum<double> re, im;
    for (std::size_t n = 1; n <= x; ++n) {
        cplx term = series(n) * std::exp(cplx(0.0, TWO_PI * alpha * static_cast<double>(n)));
        re.add(std::real(term));
        im.add(std::imag(term));
    }
    return {re.value(), im.value()};
}

// The critical rotation of the zero experiment: alpha = 1/sqrt(q).
inline double critical_alpha(const SelbergInvariants& inv) {
    return 1.0 / std::sqrt(inv.conductor);
}

struct DecayProfile {
    double alpha = 0.0;
    std::vector<std::pair<std::size_t, double>> checkpoints;  // (x, |S(x)|/x)
};

inline std::vector<std::size_t> default_decay_checkpoints() {
    return {100, 1000, 10000, 100000, 1000000};
}

// One cumulative pass, recording |S(x)|/x at each checkpoint.
inline DecayProfile decay_profile(const CoefficientSeries& series, double alpha,
                                  std::vector<std::size_t> checkpoints = {}) {
    if (checkpoints.empty()) checkpoints = default_decay_checkpoints();
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end() ||
        checkpoints.front() == 0)
        throw std::invalid_argument("decay_profile: checkpoints must be strictly increasing");
    if (checkpoints.back() > series.length())
        throw resource_error("decay_profile: table shorter than largest checkpoint");
    DecayProfile profile;
    profile.alpha = alpha;
    KahanSum<double> re, im;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= checkpoints.back(); ++n) {
        cplx term = series(n) * std::exp(cplx(0.0, TWO_PI * alpha * static_cast<double>(n)));
        re.add(std::real(term));
        im.add(std::imag(term));
        if (n == checkpoints[next]) {
            double ratio = std::abs(cplx(re.value(), im.value())) / static_cast<double>(n);
            profile.checkpoints.emplace_back(n, ratio);
            ++next;
        }
    }
    return profile;
}

enum class ConditionKind { cond1, cond2, cond3, cond4, mean_square };

inline const char* to_string(ConditionKind kind) {
    switch (kind) {
        case ConditionKind::cond1: return "cond1";
        case ConditionKind::cond2: return "cond2";
        case ConditionKind::cond3: return "cond3";
        case ConditionKind::cond4: return "cond4";
        case ConditionKind::mean_square: return "mean_square";
    }
    return "unknown";
}

struct ConditionReport {
    ConditionKind which = ConditionKind::cond1;
    std::vector<std::pair<std::string, double>> stats;  // named scalars, fixed order
    std::vector<std::pair<double, double>> table;       // (x or t, value) rows
    bool pass = false;
    std::string criterion;  // the frozen threshold, spelled out
};

namespace detail {

inline void require_grid(const std::vector<std::size_t>& grid, std::size_t length,
                         std::size_t min_points, const char* who) {
    if (grid.size() < min_points)
        throw std::invalid_argument(std::string(who) + ": grid needs at least " +
                                    std::to_string(min_points) + " points");
    if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() == 0)
        throw std::invalid_argument(std::string(who) + ": grid must be increasing and positive");
    if (grid.back() > length)
        throw resource_error(std::string(who) + ": table shorter than largest grid point");
}

// Cumulative sums of term(n) sampled at the grid points, one pass.
template <typename TermFn>
std::vector<double> grid_partials(const std::vector<std::size_t>& grid, TermFn&& term) {
    std::vector<double> out;
    out.reserve(grid.size());
    KahanSum<double> acc;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= grid.back(); ++n) {
        acc.add(term(n));
        while (next < grid.size() && n == grid[next]) {
            out.push_back(acc.value());
            ++next;
        }
    }
    return out;
}

}  // namespace detail

// Default grids: log-spaced, frozen alongside the calibration run.
inline std::vector<std::size_t> log_grid(double e_lo, double e_hi, std::size_t points) {
    std::vector<std::size_t> grid;
    for (std::size_t k = 0; k < points; ++k) {
        double e = e_lo + (e_hi - e_lo) * static_cast<double>(k) / static_cast<double>(points - 1);
        grid.push_back(static_cast<std::size_t>(std::llround(std::pow(10.0, e))));
    }
    return grid;
}

// Condition 1: Sum_{p<=x} |a(p)|^2 log p / x -> 1 for unit-normalized data.
inline ConditionReport condition1_sum(const CoefficientSeries& series,
                                      const std::vector<std::size_t>& x_grid) {
    detail::require_grid(x_grid, series.length(), 1, "condition1_sum");
    ConditionReport report;
    report.which = ConditionKind::cond1;
    auto sieve = prime_sieve(x_grid.back());
    auto partials = detail::grid_partials(x_grid, [&](std::size_t n) {
        if (!sieve[n]) return 0.0;
        return std::norm(series(n)) * std::log(static_cast<double>(n));
    });
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        report.table.emplace_back(static_cast<double>(x_grid[i]),
                                  partials[i] / static_cast<double>(x_grid[i]));
    double last = report.table.back().second;
    report.stats.emplace_back("statistic_at_largest_x", last);
    report.pass = last >= thresholds::COND1_BAND_LO && last <= thresholds::COND1_BAND_HI;
    report.criterion = "statistic at largest x within [0.7, 1.3]";
    return report;
}

// Condition 2: min over p <= prime_cut, t in grid of the truncated Euler
// factor modulus at 1/2 + it.  m_order = -1 uses the deepest truncation the
// table supports per prime.
inline ConditionReport condition2_min(const CoefficientSeries& series,
                                      const std::vector<double>& t_grid, std::uint64_t prime_cut,
                                      int m_order) {
    if (t_grid.empty()) throw std::invalid_argument("condition2_min: empty t grid");
    ConditionReport report;
    report.which = ConditionKind::cond2;
    double c_min = 1.0;  // the empty product
    double p_min = 0.0, t_min = 0.0;
    for (std::uint32_t p : primes_up_to(prime_cut)) {
        int m_p = m_order;
        if (m_order < 0) {
            m_p = 0;
            std::uint64_t pm = 1;
            while (pm <= series.length() / p) {
                pm *= p;
                ++m_p;
            }
        }
        for (double t : t_grid) {
            double mod = std::abs(euler_factor(series, p, cplx(0.5, t), m_p));
            if (mod < c_min) {
                c_min = mod;
                p_min = static_cast<double>(p);
                t_min = t;
            }
        }
    }
    report.stats.emplace_back("c_F", c_min);
    report.stats.emplace_back("argmin_p", p_min);
    report.stats.emplace_back("argmin_t", t_min);
    report.pass = c_min > thresholds::COND2_MIN_FLOOR;
    report.criterion = "empirical c_F above 0.25";
    return report;
}

namespace detail {

struct LineFit {
    double slope = 0.0, intercept = 0.0, residual_norm = 0.0;
};

inline LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit fit;
    double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - fit.slope * x[i] - fit.intercept;
        rss += r * r;
    }
    fit.residual_norm = std::sqrt(rss);
    return fit;
}

}  // namespace detail

// Condition 3: fit Sum_{n<=x} |a(n)|^2 / n  against  A log x + B.
inline ConditionReport condition3_fit(const CoefficientSeries& series,
                                      const std::vector<std::size_t>& x_grid) {
    detail::require_grid(x_grid, series.length(), 3, "condition3_fit");
    ConditionReport report;
    report.which = ConditionKind::cond3;
    auto partials = detail::grid_partials(
        x_grid, [&](std::size_t n) { return std::norm(series(n)) / static_cast<double>(n); });
    std::vector<double> log_x;
    for (std::size_t x : x_grid) log_x.push_back(std::log(static_cast<double>(x)));
    auto fit = detail::least_squares_line(log_x, partials);
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        report.table.emplace_back(static_cast<double>(x_grid[i]), partials[i]);
    report.stats.emplace_back("A", fit.slope);
    report.stats.emplace_back("B", fit.intercept);
    report.stats.emplace_back("residual_norm", fit.residual_norm);
    report.pass = fit.slope > 0.0;
    report.criterion = "fitted A positive";
    return report;
}

// Mean-square boundedness: values of Sum_{n<=x} |a(n)|^2 / x over the grid;
// bounded if the largest-x value stays within factor 2 of the grid median.
inline ConditionReport mean_square_check(const CoefficientSeries& series,
                                         const std::vector<std::size_t>& x_grid) {
    detail::require_grid(x_grid, series.length(), 1, "mean_square_check");
    ConditionReport report;
    report.which = ConditionKind::mean_square;
    auto partials = detail::grid_partials(x_grid, [&](std::size_t n) { return std::norm(series(n)); });
    std::vector<double> values;
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        values.push_back(partials[i] / static_cast<double>(x_grid[i]));
        report.table.emplace_back(static_cast<double>(x_grid[i]), values.back());
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double median = (sorted.size() % 2 == 1)
                        ? sorted[sorted.size() / 2]
                        : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    report.stats.emplace_back("largest_x_value", values.back());
    report.stats.emplace_back("median", median);
    report.stats.emplace_back("max", sorted.back());
    report.pass = values.back() <= thresholds::MEAN_SQUARE_FACTOR * median;
    report.criterion = "largest-x value within factor 2 of the grid median";
    return report;
}

// Condition 4 (Selberg orthogonality): partial sums over primes of
// a(p) conj(a'(p)) / p; bounded oscillation across the grid.
inline ConditionReport selberg_orthogonality(const CoefficientSeries& series_a,
                                             const CoefficientSeries& series_b,
                                             const std::vector<std::size_t>& x_grid) {
    detail::require_grid(x_grid, std::min(series_a.length(), series_b.length()), 1,
                         "selberg_orthogonality");
    ConditionReport report;
    report.which = ConditionKind::cond4;
    auto sieve = prime_sieve(x_grid.back());
    KahanSum<double> re, im;
    std::vector<cplx> sums;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= x_grid.back(); ++n) {
        if (sieve[n]) {
            cplx term = series_a(n) * std::conj(series_b(n)) / static_cast<double>(n);
            re.add(std::real(term));
            im.add(std::imag(term));
        }
        while (next < x_grid.size() && n == x_grid[next]) {
            sums.emplace_back(re.value(), im.value());
            report.table.emplace_back(static_cast<double>(n), re.value());
            ++next;
        }
    }
    double oscillation = 0.0;
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i + 1; j < sums.size(); ++j)
            oscillation = std::max(oscillation, std::abs(sums[i] - sums[j]));
    report.stats.emplace_back("oscillation", oscillation);
    report.stats.emplace_back("last_partial_sum_re", std::real(sums.back()));
    report.pass = oscillation <= thresholds::ORTH_BAND;
    report.criterion = "partial-sum oscillation within 0.5 across the grid";
    return report;
}

}  // namespace selberg

#endif
