//! Complex gamma, log-gamma and digamma.
//!
//! Lanczos approximation (g = 7, n = 9) with reflection for Re z < 1/2.
//! `ln_gamma` is exact only up to multiples of 2*pi*i across the reflection
//! branch; callers always exponentiate it (alone or in sums), where that
//! ambiguity cancels.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::TAU_ZERO;
use crate::util::{cr, is_nonpositive_integer};

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn lanczos_sum(z: Complex64) -> Complex64 {
    let mut sum = cr(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += cr(c) / (z + cr(i as f64));
    }
    sum
}

/// sin(pi z) with exact integer reduction: full relative accuracy near the
/// zeros, where the naive product pi*z loses it.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let w = z - cr(n);
    let s = (cr(PI) * w).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cos(pi z) with the same reduction as [`sin_pi`].
pub fn cos_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let w = z - cr(n);
    let c = (cr(PI) * w).cos();
    if (n as i64) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Principal gamma function.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z, TAU_ZERO) {
        return Err(Error::PoleError { z });
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection gamma(z) gamma(1-z) = pi / sin(pi z), assembled through
        // exp: the naive complex division overflows its norm_sqr once
        // |gamma(1-z)| passes ~1e154.
        (cr(PI.ln()) - ln_gamma_unchecked(cr(1.0) - z)).exp() / sin_pi(z)
    } else {
        // Single exp keeps t^(z-1/2) e^-t from overflowing before gamma does.
        let zm1 = z - cr(1.0);
        let t = zm1 + cr(LANCZOS_G + 0.5);
        cr((2.0 * PI).sqrt()) * ((zm1 + cr(0.5)) * t.ln() - t).exp() * lanczos_sum(zm1 + cr(1.0))
    }
}

/// Log-gamma, branch-consistent only modulo 2*pi*i (see module docs).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z, TAU_ZERO) {
        return Err(Error::PoleError { z });
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        cr(PI.ln()) - sin_pi(z).ln() - ln_gamma_unchecked(cr(1.0) - z)
    } else {
        let zm1 = z - cr(1.0);
        let t = zm1 + cr(LANCZOS_G + 0.5);
        cr((2.0 * PI).sqrt().ln()) + (zm1 + cr(0.5)) * t.ln() - t + lanczos_sum(zm1 + cr(1.0)).ln()
    }
}

/// 1/gamma(z); zero at the poles instead of an error. Assembled as
/// exp(-ln gamma) so huge gamma magnitudes underflow cleanly instead of
/// tripping the complex-division overflow.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z, TAU_ZERO) {
        Complex64::new(0.0, 0.0)
    } else {
        (-ln_gamma_unchecked(z)).exp()
    }
}

// Bernoulli terms B_{2n}/(2n) for the digamma asymptotic series.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Digamma function psi(z) = d/dz ln gamma(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z, TAU_ZERO) {
        return Err(Error::PoleError { z });
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    if z.re < 0.5 {
        // psi(z) = psi(1-z) - pi cot(pi z)
        acc -= cr(PI) * cos_pi(z) / sin_pi(z);
        z = cr(1.0) - z;
    }
    while z.re < 8.0 {
        acc -= 1.0 / z;
        z += cr(1.0);
    }
    let inv2 = 1.0 / (z * z);
    let mut asym = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for &c in DIGAMMA_ASYMP.iter() {
        asym -= cr(c) * p;
        p *= inv2;
    }
    Ok(acc + z.ln() - 0.5 / z + asym)
}
