//! Complex special functions used by every series: gamma/digamma, Gauss
//! hypergeometric F, Kummer M, Tricomi Psi and the modified Bessel K.

mod bessel;
pub mod gamma;
mod hyp2f1;
mod kummer;

pub use bessel::bessel_k;
pub use gamma::{cos_pi, digamma, gamma, ln_gamma, recip_gamma, sin_pi};
pub use hyp2f1::{gauss_f, gauss_f_zoned, select_zone, F21Zone};
pub use kummer::{kummer_m, psi_u};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;
use crate::util::{cr, nearest_integer};

/// Branch convention for multivalued powers and logs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Principal,
}

/// Evaluation options shared by the special-function routines.
#[derive(Debug, Clone)]
pub struct FnEvalOptions {
    /// Target relative tolerance.
    pub tol: f64,
    /// Maximum number of series terms.
    pub max_terms: usize,
    /// Branch convention (principal only).
    pub branch: Branch,
    /// Crossover radius to the Psi large-argument expansion.
    pub psi_asymptotic_radius: f64,
    /// Crossover radius to the Bessel large-argument expansion.
    pub bessel_asymptotic_radius: f64,
}

impl Default for FnEvalOptions {
    fn default() -> Self {
        FnEvalOptions {
            tol: tol::TAU_FN,
            max_terms: tol::N_MAX_TERMS,
            branch: Branch::Principal,
            psi_asymptotic_radius: tol::PSI_ASYMPTOTIC_RADIUS,
            bessel_asymptotic_radius: tol::BESSEL_ASYMPTOTIC_RADIUS,
        }
    }
}

impl FnEvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::InvalidParams(format!(
                "tolerance {} outside (0, 1)",
                self.tol
            )));
        }
        if self.max_terms < 8 {
            return Err(Error::InvalidParams("max_terms must be >= 8".into()));
        }
        Ok(())
    }
}

/// Relative deviation of gamma(a+1-c) Psi(a,c;x/a) from its confluence limit
/// 2 x^((1-c)/2) K_{c-1}(2 sqrt(x)), expected O(1/a).
///
/// The left side is assembled with gamma ratios folded into the Psi series so
/// that no factor overflows for large `a`.
pub fn limit_identity_check(a_magnitude: f64, c: Complex64, x: Complex64) -> Result<f64> {
    if a_magnitude < 1e2 {
        return Err(Error::InvalidParams(
            "confluence check needs a >= 100".into(),
        ));
    }
    if x.norm() == 0.0 {
        return Err(Error::BranchError("x = 0 not allowed (xi = 0)".into()));
    }
    let opts = FnEvalOptions::default();
    let a = cr(a_magnitude);
    let y = x / a;

    let lhs = if nearest_integer(c, 1e-9).map_or(false, |m| m >= 1) {
        scaled_psi_integer_c(a, c.re.round(), y, &opts)?
    } else {
        scaled_psi_connection(a, c, y, &opts)?
    };

    let rhs = 2.0 * x.powc((cr(1.0) - c) / 2.0) * bessel_k(c - cr(1.0), 2.0 * x.sqrt(), &opts)?;
    Ok((lhs - rhs).norm() / rhs.norm())
}

/// gamma(a+1-c) Psi(a,c;y) for non-integer c, gamma ratios taken in log space.
fn scaled_psi_connection(
    a: Complex64,
    c: Complex64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    // gamma(a+1-c) [ gamma(1-c)/gamma(a+1-c) M(a,c;y)
    //               + gamma(c-1)/gamma(a) y^(1-c) M(a-c+1, 2-c; y) ]
    let t1 = gamma::gamma(cr(1.0) - c)? * kummer_m(a, c, y, opts)?;
    let lg = gamma::ln_gamma(c - cr(1.0))? + gamma::ln_gamma(a + cr(1.0) - c)?
        - gamma::ln_gamma(a)?;
    let t2 = lg.exp() * y.powc(cr(1.0) - c) * kummer_m(a - c + cr(1.0), cr(2.0) - c, y, opts)?;
    Ok(t1 + t2)
}

/// gamma(a+1-c) Psi(a,c;y) for integer c = n+1 >= 1: the gamma factor cancels
/// against 1/gamma(a-n) in the logarithmic series.
fn scaled_psi_integer_c(
    a: Complex64,
    c_int: f64,
    y: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    let n = (c_int - 1.0).max(0.0);
    let lny = y.ln();

    // (-1)^(n+1)/n! sum_k (a)_k y^k/((n+1)_k k!) [ln y + psi(a+k) - psi(1+k) - psi(n+1+k)]
    let mut psi_a = digamma(a)?;
    let mut psi_1 = digamma(cr(1.0))?;
    let mut psi_n1 = digamma(cr(n + 1.0))?;
    let mut coeff = cr(1.0);
    let mut s1 = Complex64::new(0.0, 0.0);
    for k in 0..opts.max_terms {
        let kf = k as f64;
        let term = coeff * (lny + psi_a - psi_1 - psi_n1);
        s1 += term;
        if k > 4 && term.norm() <= opts.tol * s1.norm().max(1e-30) {
            break;
        }
        coeff *= (a + cr(kf)) / (cr(n + 1.0 + kf) * cr(kf + 1.0)) * y;
        psi_a += 1.0 / (a + cr(kf));
        psi_1 += cr(1.0 / (1.0 + kf));
        psi_n1 += cr(1.0 / (n + 1.0 + kf));
        if k + 1 == opts.max_terms {
            return Err(Error::NoConvergence("scaled Psi series stalled".into()));
        }
    }
    let mut fact_n = 1.0;
    for j in 1..=(n as usize) {
        fact_n *= j as f64;
    }
    let sign = if (n as usize) % 2 == 0 { -1.0 } else { 1.0 };
    let mut out = cr(sign / fact_n) * s1;

    // + (n-1)! gamma(a-n)/gamma(a) y^-n sum_{k<n} (a-n)_k y^k/((1-n)_k k!)
    if n >= 1.0 {
        // gamma(a-n)/gamma(a) = 1/((a-1)(a-2)...(a-n))
        let mut ratio = cr(1.0);
        for j in 1..=(n as usize) {
            ratio /= a - cr(j as f64);
        }
        let mut term = cr(1.0);
        let mut s2 = cr(1.0);
        for k in 0..(n as usize - 1) {
            let kf = k as f64;
            term *= (a - cr(n) + cr(kf)) / (cr(1.0 - n + kf) * cr(kf + 1.0)) * y;
            s2 += term;
        }
        let mut fact_nm1 = 1.0;
        for j in 1..(n as usize) {
            fact_nm1 *= j as f64;
        }
        out += cr(fact_nm1) * ratio * y.powc(cr(-n)) * s2;
    }
    Ok(out)
}
