//! Confluent hypergeometric functions: regular M(a,b;y) (Kummer) and
//! irregular Psi(a,b;y) (Tricomi).
//!
//! Psi routes: exact terminating series when a or a-b+1 is a non-positive
//! integer, the optimally truncated large-argument expansion beyond the
//! crossover radius, the two-Kummer connection formula for non-integer b,
//! and the logarithmic series for integer b.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specialfn::gamma::{digamma, ln_gamma, recip_gamma};
use crate::specialfn::FnEvalOptions;
use crate::tol::TAU_ZERO;
use crate::util::{cr, dist_to_integer, nearest_integer};

/// Kummer's regular confluent hypergeometric M(a,b;y).
pub fn kummer_m(
    a: Complex64,
    b: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    opts.validate()?;
    if y.norm() == 0.0 {
        return Ok(cr(1.0));
    }
    let na = nearest_integer(a, TAU_ZERO).filter(|&n| n <= 0);
    if let Some(nb) = nearest_integer(b, TAU_ZERO).filter(|&n| n <= 0) {
        match na {
            // Polynomial terminates before the (b)_k zero.
            Some(n) if -n < -nb => {}
            _ => return Err(Error::UndefinedF { c: b }),
        }
    }
    if let Some(n) = na {
        return m_series_finite(a, b, y, (-n) as usize);
    }
    if y.re < 0.0 {
        // Kummer transformation keeps the series argument in the stable
        // half-plane: M(a,b;y) = e^y M(b-a, b; -y).
        return Ok(y.exp() * m_series(b - a, b, -y, opts)?);
    }
    m_series(a, b, y, opts)
}

fn m_series_finite(a: Complex64, b: Complex64, y: Complex64, deg: usize) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..deg {
        let kf = k as f64;
        term *= (a + cr(kf)) / ((b + cr(kf)) * cr(kf + 1.0)) * y;
        sum += term;
    }
    Ok(sum)
}

fn m_series(a: Complex64, b: Complex64, y: Complex64, opts: &FnEvalOptions) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..opts.max_terms {
        let kf = k as f64;
        term *= (a + cr(kf)) / ((b + cr(kf)) * cr(kf + 1.0)) * y;
        sum += term;
        if term.norm() <= opts.tol * sum.norm() && k > 2 {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence(format!(
        "Kummer M series stalled at |y| = {}",
        y.norm()
    )))
}

/// Irregular confluent hypergeometric Psi(a,b;y), principal branch of y^-a.
///
/// Accuracy note: for arguments dominated by a large positive real part the
/// convergent and asymptotic regimes overlap poorly; in the band
/// 9 < Re y < 25 relative accuracy can degrade to ~1e-6. Imaginary-dominated
/// arguments (the series bases actually use those) do not suffer this.
pub fn psi_u(
    a: Complex64,
    b: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    opts.validate()?;
    if y.norm() == 0.0 {
        return Err(Error::BranchError("Psi requires y != 0".into()));
    }

    // Terminating 2F0 cases are exact for any argument.
    if let Some(n) = nearest_integer(a, TAU_ZERO).filter(|&n| n <= 0) {
        return psi_2f0_finite(a, b, y, (-n) as usize);
    }
    if let Some(n) = nearest_integer(a - b + cr(1.0), TAU_ZERO).filter(|&n| n <= 0) {
        return psi_2f0_finite(a, b, y, (-n) as usize);
    }

    if y.norm() >= opts.psi_asymptotic_radius {
        // Accept the truncated expansion when its floor beats the e^|y| eps
        // cancellation the connection formula would suffer at this radius.
        let need = 30.0 * (-0.95 * y.norm()).exp() + 1e-11;
        if let Ok(v) = psi_asymptotic(a, b, y, need) {
            return Ok(v);
        }
    }

    if dist_to_integer(b) >= 1e-6 {
        psi_connection(a, b, y, opts)
    } else {
        // Round b to its integer and use the logarithmic series; within the
        // 1e-6 band the connection formula has already lost more digits to
        // cancellation than the rounding discards.
        let m = b.re.round() as i64;
        if m <= 0 {
            let bp = cr((2 - m) as f64);
            Ok(y.powc(cr(1.0) - cr(m as f64)) * psi_integer_b(a - cr(m as f64) + cr(1.0), bp, y, opts)?)
        } else {
            psi_integer_b(a, cr(m as f64), y, opts)
        }
    }
}

/// Terminating y^-a 2F0 sum (a = -n or a-b+1 = -n).
fn psi_2f0_finite(a: Complex64, b: Complex64, y: Complex64, deg: usize) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..deg {
        let kf = k as f64;
        term *= -(a + cr(kf)) * (a - b + cr(1.0 + kf)) / (cr(kf + 1.0) * y);
        sum += term;
    }
    Ok(y.powc(-a) * sum)
}

/// Optimally truncated large-|y| expansion. Fails if the smallest term is not
/// small enough relative to the running sum.
fn psi_asymptotic(a: Complex64, b: Complex64, y: Complex64, need: f64) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    let mut best = f64::INFINITY;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * -(a + cr(kf)) * (a - b + cr(1.0 + kf)) / (cr(kf + 1.0) * y);
        if next.norm() >= term.norm() && k > 0 {
            break; // smallest term reached
        }
        term = next;
        sum += term;
        best = term.norm();
    }
    let est = best / sum.norm().max(f64::MIN_POSITIVE);
    if est > need {
        return Err(Error::NoConvergence(format!(
            "Psi asymptotic series floor {est:.2e} above target {need:.2e}"
        )));
    }
    Ok(y.powc(-a) * sum)
}

/// Connection formula through two regular solutions, non-integer b.
fn psi_connection(
    a: Complex64,
    b: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    // gamma(1-b)/gamma(a+1-b) and gamma(b-1)/gamma(a) via log differences;
    // a pole in a denominator zeroes that term.
    let mut out = Complex64::new(0.0, 0.0);
    let c1 = match (ln_gamma(cr(1.0) - b), ln_gamma(a + cr(1.0) - b)) {
        (Ok(n), Ok(d)) => (n - d).exp(),
        (_, Err(_)) => Complex64::new(0.0, 0.0),
        (Err(e), _) => return Err(e),
    };
    if c1.norm() > 0.0 {
        out += c1 * kummer_m(a, b, y, opts)?;
    }
    let c2 = match (ln_gamma(b - cr(1.0)), ln_gamma(a)) {
        (Ok(n), Ok(d)) => (n - d).exp(),
        (_, Err(_)) => Complex64::new(0.0, 0.0),
        (Err(e), _) => return Err(e),
    };
    if c2.norm() > 0.0 {
        out += c2 * y.powc(cr(1.0) - b) * kummer_m(a - b + cr(1.0), cr(2.0) - b, y, opts)?;
    }
    Ok(out)
}

/// Logarithmic series for integer b = n+1 >= 1 (A&S 13.1.6 form). `a` is
/// guaranteed non-integer <= n only through the terminating-case screen and
/// the 1/gamma(a-n) zero.
fn psi_integer_b(
    a: Complex64,
    b: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    let n = (b.re.round() as i64 - 1).max(0) as usize;
    let nf = n as f64;
    let lny = y.ln();

    let mut out = Complex64::new(0.0, 0.0);

    // First block: sum_k (a)_k y^k / ((n+1)_k k!) [ln y + psi(a+k) - psi(1+k) - psi(n+1+k)]
    let rg = recip_gamma(a - cr(nf));
    if rg.norm() > 0.0 {
        let mut psi_a = digamma(a)?;
        let mut psi_1 = digamma(cr(1.0))?;
        let mut psi_n1 = digamma(cr(nf + 1.0))?;
        let mut coeff = cr(1.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..opts.max_terms {
            let kf = k as f64;
            let term = coeff * (lny + psi_a - psi_1 - psi_n1);
            sum += term;
            if k > 4 && term.norm() <= opts.tol * sum.norm().max(1e-30) && coeff.norm() < opts.tol
            {
                break;
            }
            coeff *= (a + cr(kf)) / (cr(nf + 1.0 + kf) * cr(kf + 1.0)) * y;
            psi_a += 1.0 / (a + cr(kf));
            psi_1 += cr(1.0 / (1.0 + kf));
            psi_n1 += cr(1.0 / (nf + 1.0 + kf));
            if k + 1 == opts.max_terms {
                return Err(Error::NoConvergence("Psi integer-b series stalled".into()));
            }
        }
        let mut fact_n = 1.0;
        for j in 1..=n {
            fact_n *= j as f64;
        }
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        out += cr(sign / fact_n) * rg * sum;
    }

    // Second block: (n-1)!/gamma(a) y^-n sum_{k=0}^{n-1} (a-n)_k y^k / ((1-n)_k k!)
    if n >= 1 {
        let rga = recip_gamma(a);
        if rga.norm() > 0.0 {
            let mut term = cr(1.0);
            let mut sum = cr(1.0);
            for k in 0..(n - 1) {
                let kf = k as f64;
                term *= (a - cr(nf) + cr(kf)) / (cr(1.0 - nf + kf) * cr(kf + 1.0)) * y;
                sum += term;
            }
            let mut fact_nm1 = 1.0;
            for j in 1..n {
                fact_nm1 *= j as f64;
            }
            out += cr(fact_nm1) * rga * y.powc(cr(-nf)) * sum;
        }
    }
    Ok(out)
}
