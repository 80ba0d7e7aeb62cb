//! Gauss hypergeometric function F(a,b;c;y) for complex parameters and
//! argument, continued over the whole plane.
//!
//! Zones: Maclaurin series inside the disk, Pfaff y/(y-1), the 1-y and 1/y
//! linear transformations elsewhere, chosen by the smallest transformed
//! argument. Degenerate transformation cases (integer c-a-b or a-b) are
//! evaluated as the average of two parameter-perturbed calls, which cancels
//! the leading perturbation error.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specialfn::gamma::ln_gamma;
use crate::specialfn::FnEvalOptions;
use crate::tol::TAU_ZERO;
use crate::util::{c64, cr, dist_to_integer, is_nonpositive_integer, nearest_integer};

/// Evaluation zone of the hypergeometric continuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F21Zone {
    /// Maclaurin series in y.
    Direct,
    /// Pfaff transformation, argument y/(y-1).
    Pfaff,
    /// Linear transformation to argument 1-y.
    OneMinusY,
    /// Linear transformation to argument 1/y.
    Recip,
}

/// Zone with the smallest transformed series argument for this y. Callers
/// evaluating a function repeatedly in a small neighborhood can pin the zone
/// of a reference point so finite differences never straddle a seam.
pub fn select_zone(y: Complex64) -> Result<F21Zone> {
    let w_direct = y.norm();
    let w_pfaff = (y / (y - cr(1.0))).norm();
    let w_onemy = (cr(1.0) - y).norm();
    let w_recip = (1.0 / y).norm();
    let mut best = (w_direct, F21Zone::Direct);
    // Slight preference for cheaper zones on ties.
    for (w, zone) in [
        (w_pfaff * 1.0001, F21Zone::Pfaff),
        (w_onemy * 1.01, F21Zone::OneMinusY),
        (w_recip * 1.01, F21Zone::Recip),
    ] {
        if w < best.0 {
            best = (w, zone);
        }
    }
    if best.0 > 0.98 {
        return Err(Error::NoConvergence(format!(
            "hypergeometric argument y = {y} too close to the exceptional ring"
        )));
    }
    Ok(best.1)
}

/// Gauss hypergeometric F(a,b;c;y).
pub fn gauss_f(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    gauss_f_zoned(a, b, c, y, None, opts)
}

/// F(a,b;c;y) evaluated through a caller-pinned zone (or the automatic
/// choice when `zone` is None). The polynomial short-circuit is exact in any
/// zone and always taken first.
pub fn gauss_f_zoned(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    zone: Option<F21Zone>,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    opts.validate()?;
    if y.norm() == 0.0 {
        return Ok(cr(1.0));
    }

    // Polynomial short-circuit: a or b a non-positive integer.
    let na = nearest_integer(a, TAU_ZERO).filter(|&n| n <= 0);
    let nb = nearest_integer(b, TAU_ZERO).filter(|&n| n <= 0);
    if na.is_some() || nb.is_some() {
        let (deg, swap) = match (na, nb) {
            (Some(n), Some(m)) => {
                if -n <= -m {
                    (-n, false)
                } else {
                    (-m, true)
                }
            }
            (Some(n), None) => (-n, false),
            (None, Some(m)) => (-m, true),
            (None, None) => unreachable!(),
        };
        let (pa, pb) = if swap { (b, a) } else { (a, b) };
        return poly_2f1(pa, pb, c, y, deg as usize);
    }

    if is_nonpositive_integer(c, TAU_ZERO) {
        return Err(Error::UndefinedF { c });
    }

    let zone = match zone {
        Some(z) => z,
        None => select_zone(y)?,
    };
    match zone {
        F21Zone::Direct => series_2f1(a, b, c, y, opts),
        F21Zone::Pfaff => {
            let w = y / (y - cr(1.0));
            let f = series_2f1(a, c - b, c, w, opts)?;
            Ok((cr(1.0) - y).powc(-a) * f)
        }
        F21Zone::OneMinusY => eval_one_minus_y(a, b, c, y, opts),
        F21Zone::Recip => eval_recip(a, b, c, y, opts),
    }
}

/// Finite sum for the polynomial case a = -deg.
fn poly_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    deg: usize,
) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..deg {
        let kf = k as f64;
        let den = c + cr(kf);
        if den.norm() < TAU_ZERO {
            // (c)_k vanished before the numerator terminated.
            return Err(Error::UndefinedF { c });
        }
        term *= (a + cr(kf)) * (b + cr(kf)) / (den * cr(kf + 1.0)) * y;
        sum += term;
    }
    Ok(sum)
}

/// Maclaurin series, |y| < 1.
fn series_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    if is_nonpositive_integer(c, TAU_ZERO) {
        return Err(Error::UndefinedF { c });
    }
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..opts.max_terms {
        let kf = k as f64;
        term *= (a + cr(kf)) * (b + cr(kf)) / ((c + cr(kf)) * cr(kf + 1.0)) * y;
        sum += term;
        if term.norm() <= opts.tol * sum.norm() && k > 2 {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence(format!(
        "2F1 series did not converge for |y| = {}",
        y.norm()
    )))
}

// Perturbation used to sidestep degenerate (integer) transformation cases;
// the +eps/-eps average leaves an O(eps^2) error.
const DEGENERATE_EPS: f64 = 5e-6;
const DEGENERATE_BAND: f64 = 1e-5;

fn eval_one_minus_y(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    if dist_to_integer(c - a - b) < DEGENERATE_BAND {
        let eps = c64(0.0, DEGENERATE_EPS);
        let f1 = one_minus_y_core(a, b, c + eps, y, opts)?;
        let f2 = one_minus_y_core(a, b, c - eps, y, opts)?;
        return Ok(0.5 * (f1 + f2));
    }
    one_minus_y_core(a, b, c, y, opts)
}

fn one_minus_y_core(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    let omy = cr(1.0) - y;
    let g1 = gamma_ratio(&[c, c - a - b], &[c - a, c - b])?;
    let mut out = Complex64::new(0.0, 0.0);
    if g1.norm() > 0.0 {
        out += g1 * series_2f1(a, b, a + b - c + cr(1.0), omy, opts)?;
    }
    let g2 = gamma_ratio(&[c, a + b - c], &[a, b])?;
    if g2.norm() > 0.0 {
        out += omy.powc(c - a - b) * g2 * series_2f1(c - a, c - b, c - a - b + cr(1.0), omy, opts)?;
    }
    Ok(out)
}

fn eval_recip(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    if dist_to_integer(a - b) < DEGENERATE_BAND {
        let eps = c64(0.0, DEGENERATE_EPS);
        let f1 = recip_core(a + eps, b, c, y, opts)?;
        let f2 = recip_core(a - eps, b, c, y, opts)?;
        return Ok(0.5 * (f1 + f2));
    }
    recip_core(a, b, c, y, opts)
}

fn recip_core(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    let w = 1.0 / y;
    let g1 = gamma_ratio(&[c, b - a], &[b, c - a])?;
    let mut out = Complex64::new(0.0, 0.0);
    if g1.norm() > 0.0 {
        out += g1 * (-y).powc(-a) * series_2f1(a, cr(1.0) - c + a, cr(1.0) - b + a, w, opts)?;
    }
    let g2 = gamma_ratio(&[c, a - b], &[a, c - b])?;
    if g2.norm() > 0.0 {
        out += g2 * (-y).powc(-b) * series_2f1(b, cr(1.0) - c + b, cr(1.0) - a + b, w, opts)?;
    }
    Ok(out)
}

/// prod gamma(nums) / prod gamma(dens) via log-gamma differences. A pole in a
/// denominator makes the ratio zero; a pole in a numerator is an error (the
/// caller must have removed the degeneracy first).
fn gamma_ratio(nums: &[Complex64], dens: &[Complex64]) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &d in dens {
        match ln_gamma(d) {
            Ok(l) => acc -= l,
            Err(_) => return Ok(Complex64::new(0.0, 0.0)),
        }
    }
    for &n in nums {
        acc += ln_gamma(n)?;
    }
    Ok(acc.exp())
}
