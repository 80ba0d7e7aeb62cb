//! Central tolerance constants.
//!
//! Every threshold used across the crate lives here so that the numerical
//! contracts are pinned in one place.

/// Tolerance for "parameter must be nonzero" checks. Below the resolution of
/// the double-precision series arithmetic.
pub const TAU_ZERO: f64 = 1e-14;

/// Default target relative tolerance for special-function evaluation.
pub const TAU_FN: f64 = 1e-12;

/// Default maximum number of series terms for special functions.
pub const N_MAX_TERMS: usize = 10_000;

/// Convergence tolerance for continued fractions (relative change between
/// successive convergents).
pub const TAU_CF: f64 = 1e-14;

/// Maximum continued-fraction depth.
pub const K_MAX_CF: usize = 10_000;

/// Tiny-value substitution guard for the modified forward (Lentz) recurrence.
pub const CF_GUARD: f64 = 1e-300;

/// Guard band around integers and half-integers for phase-parameter
/// admissibility. The equations only forbid exact values; numerics need a band.
pub const DELTA_NU: f64 = 1e-8;

/// Default absolute tolerance on the characteristic residual at a root.
pub const TAU_ROOT: f64 = 1e-10;

/// Relative tail bound for series summation: stop when the last included term
/// contributes less than this to the running sum.
pub const TAU_TAIL: f64 = 1e-16;

/// Relative ODE-residual bound that every built solution must meet.
pub const TAU_RES: f64 = 1e-8;

/// Crossover radius between the convergent and asymptotic regimes of the
/// irregular confluent hypergeometric function. The connection formula loses
/// about e^|y| * eps to cancellation while the truncated expansion floors at
/// about e^-|y|; the two error envelopes cross near 18.5.
pub const PSI_ASYMPTOTIC_RADIUS: f64 = 18.5;

/// Crossover radius for the modified Bessel function: below this the
/// ascending series are used, above it the large-argument expansion.
pub const BESSEL_ASYMPTOTIC_RADIUS: f64 = 14.0;

/// Two-sided coefficient windows never extend past this index on either side:
/// beyond it the minimal-solution coefficients underflow while the paired
/// basis functions overflow, so wider windows cannot improve an f64 sum.
pub const WINDOW_CAP_TWO_SIDED: i64 = 72;

/// Cap for one-sided (truncated) coefficient windows.
pub const WINDOW_CAP_ONE_SIDED: i64 = 80;

/// Finite-difference step factor for the verification oracles. With one
/// Richardson level this balances fourth-order truncation against the
/// evaluator noise floor (~1e-13 near internal zone seams of the special
/// functions) amplified by 1/h^2, flooring residuals near 5e-9.
pub const FD_STEP_FACTOR: f64 = 4e-3;
