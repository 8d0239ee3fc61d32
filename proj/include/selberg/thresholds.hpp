#ifndef SELBERG_THRESHOLDS_HPP
#define SELBERG_THRESHOLDS_HPP

// Frozen pass/fail thresholds.  Calibrated once against independent oracles,
// then pinned; data/thresholds.json mirrors these values for external tools
// and a unit test keeps the two in sync.  Do not tune to make a check pass.

namespace selberg::thresholds {

// |Delta_F(1/2+it)| == 1 identity.
inline constexpr double MODULUS_IDENTITY_TOL = 1e-10;

// delta() vs delta_asymptotic(): t * relative deviation stays within a
// factor of this around its fitted value across the t-doubling grid.
inline constexpr double ASYM_DEVIATION_FACTOR = 2.0;

// Hardy-function realness: |Im(e^{i theta} F)| <= tol * (1 + |Z|).
inline constexpr double Z_RESIDUAL_TOL = 1e-6;

// Zero locations vs the independent per-factor oracle.
inline constexpr double ZERO_MATCH_TOL = 1e-6;

// hardy_integrals: Simpson refinement target, tol = scale * (1 + T).
inline constexpr double HARDY_INTEGRAL_TOL_SCALE = 1e-3;

// I_abs/T floor: stays above this fraction of its value at the smallest T.
inline constexpr double HARDY_IABS_FLOOR_FACTOR = 0.5;

// Lemma 1 fitted constants: per-regime sups over the 50-point calibration
// sweep (alpha in [0, 1], T over [100, 10^4]), rounded up with ~25% headroom.
inline constexpr double LEMMA1_REGIME_BELOW = 3.2;    // |J| <= C T^a / log(T/beta)
inline constexpr double LEMMA1_REGIME_ABOVE = 3.3;    // |J| <= C T^a / log(beta/T')
inline constexpr double LEMMA1_STATIONARY_ERR = 3.0;  // |J - main| <= C T^(a+2/5)
inline constexpr double LEMMA1_UNIVERSAL = 9.2;       // |J| <= C T^(a+1/2)

// Constants fitted on the smallest T slice must hold at larger T within
// this factor.
inline constexpr double LEMMA1_STABILITY_FACTOR = 2.0;

// Stationary-phase error exponent: log-log slope of |J - main| minus alpha,
// target band.
inline constexpr double STATIONARY_SLOPE_TARGET = 0.4;
inline constexpr double STATIONARY_SLOPE_TOL = 0.1;

// Lemma 2 decay: x=1e6 ratio must fall below this fraction of the x=1e3 one.
inline constexpr double DECAY_HALF_FACTOR = 0.5;

// Condition 1: Sum_{p<=x} |a(p)|^2 log p / x band at the largest grid point.
inline constexpr double COND1_BAND_LO = 0.7;
inline constexpr double COND1_BAND_HI = 1.3;

// Condition 2: empirical Euler-factor modulus floor on the critical line.
inline constexpr double COND2_MIN_FLOOR = 0.25;

// Condition 3: A-coefficient stability between shifted grids, in percent.
inline constexpr double COND3_DRIFT_PCT = 10.0;

// Mean square: largest-x value of Sum |a(n)|^2 / x within this factor of
// the grid median.
inline constexpr double MEAN_SQUARE_FACTOR = 2.0;

// Condition 4: oscillation band of the prime partial sums.
inline constexpr double ORTH_BAND = 0.5;

}  // namespace selberg::thresholds

#endif
