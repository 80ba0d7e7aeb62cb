//! Modified Bessel function of the second kind, complex order and argument.
//!
//! Routes: exact finite sum for half-integer orders, ascending I-series
//! difference for non-integer orders at small argument, logarithmic series
//! for integer orders, and the large-argument expansion seeded at a small
//! order and carried up by the (forward-stable) order recurrence.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specialfn::gamma::{digamma, recip_gamma};
use crate::specialfn::FnEvalOptions;
use crate::util::{cr, dist_to_integer, dist_to_half_integer_lattice};

/// K_lambda(xi). Even in the order; principal branches throughout.
pub fn bessel_k(lambda: Complex64, xi: Complex64, opts: &FnEvalOptions) -> Result<Complex64> {
    opts.validate()?;
    if xi.norm() == 0.0 {
        return Err(Error::BranchError("K requires xi != 0".into()));
    }
    if !xi.re.is_finite() || !xi.im.is_finite() {
        return Err(Error::BranchError("non-finite xi".into()));
    }
    // K_{-lambda} = K_lambda: canonicalize to Re lambda >= 0.
    let lambda = if lambda.re < 0.0 || (lambda.re == 0.0 && lambda.im < 0.0) {
        -lambda
    } else {
        lambda
    };

    // Half-integer orders have exact finite forms.
    if dist_to_half_integer_lattice(lambda) < 1e-9 && dist_to_integer(lambda) > 0.25 {
        let m = (lambda.re - 0.5).round() as i64;
        if m >= 0 {
            return k_half_integer(m as usize, xi);
        }
    }

    // The ascending-series route cancels like e^(2|Re xi|); the truncated
    // expansion floors near e^(-2|xi|). Route to the expansion when it wins.
    if xi.norm() >= opts.bessel_asymptotic_radius || xi.norm() + xi.re.abs() >= 18.0 {
        return k_large_argument(lambda, xi);
    }

    if dist_to_integer(lambda) < 1e-9 {
        k_integer(lambda.re.round() as i64 as usize, xi, opts)
    } else {
        k_series_difference(lambda, xi, opts)
    }
}

/// K_{m+1/2}(xi) = sqrt(pi/(2 xi)) e^-xi sum_{k<=m} (m+k)!/(k!(m-k)!) (2 xi)^-k
fn k_half_integer(m: usize, xi: Complex64) -> Result<Complex64> {
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..m {
        let kf = k as f64;
        let mf = m as f64;
        // ratio of consecutive coefficients: (m+k+1)(m-k) / (k+1) / (2 xi)
        term *= cr((mf + kf + 1.0) * (mf - kf)) / (cr(kf + 1.0) * 2.0 * xi);
        sum += term;
    }
    let pref = (cr(PI) / (2.0 * xi)).sqrt() * (-xi).exp();
    finite_or_err(pref * sum, xi)
}

/// pi/2 (I_{-lambda} - I_lambda) / sin(pi lambda), ascending series for I.
fn k_series_difference(
    lambda: Complex64,
    xi: Complex64,
    opts: &FnEvalOptions,
) -> Result<Complex64> {
    let i_pos = bessel_i_series(lambda, xi, opts)?;
    let i_neg = bessel_i_series(-lambda, xi, opts)?;
    let s = crate::specialfn::gamma::sin_pi(lambda);
    finite_or_err(cr(PI / 2.0) * (i_neg - i_pos) / s, xi)
}

/// Ascending series for I_nu, non-integer nu.
fn bessel_i_series(nu: Complex64, xi: Complex64, opts: &FnEvalOptions) -> Result<Complex64> {
    let q = xi * xi / 4.0;
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    for k in 0..opts.max_terms {
        let kf = k as f64;
        term *= q / (cr(kf + 1.0) * (nu + cr(kf + 1.0)));
        sum += term;
        if term.norm() <= opts.tol * sum.norm() && k > 2 {
            break;
        }
        if k + 1 == opts.max_terms {
            return Err(Error::NoConvergence("I series stalled".into()));
        }
    }
    let pref = (xi / 2.0).powc(nu) * recip_gamma(nu + cr(1.0));
    finite_or_err(pref * sum, xi)
}

/// Logarithmic ascending series for integer order n (DLMF 10.31.2 form).
fn k_integer(n: usize, xi: Complex64, opts: &FnEvalOptions) -> Result<Complex64> {
    let nf = n as f64;
    let q = xi * xi / 4.0;
    let half_pow = (xi / 2.0).powc(cr(nf));
    let lnhalf = (xi / 2.0).ln();

    // finite part: 1/2 (xi/2)^-n sum_{k=0}^{n-1} (n-k-1)!/k! (-q)^k
    let mut out = Complex64::new(0.0, 0.0);
    if n >= 1 {
        let mut coeff = cr(1.0);
        for j in 1..n {
            coeff *= cr(j as f64); // (n-1)!
        }
        let mut sum = coeff;
        let mut term = coeff;
        for k in 0..(n - 1) {
            let kf = k as f64;
            // (n-k-2)!/(n-k-1)! = 1/(n-k-1)
            term *= -q / (cr(kf + 1.0) * cr(nf - kf - 1.0));
            sum += term;
        }
        out += cr(0.5) / half_pow * sum;
    }

    // log part: (-1)^(n+1) ln(xi/2) I_n(xi)
    let i_n = {
        let mut term = cr(1.0);
        let mut sum = cr(1.0);
        for k in 0..opts.max_terms {
            let kf = k as f64;
            term *= q / (cr(kf + 1.0) * cr(nf + kf + 1.0));
            sum += term;
            if term.norm() <= opts.tol * sum.norm() && k > 2 {
                break;
            }
        }
        let mut fact = 1.0;
        for j in 1..=n {
            fact *= j as f64;
        }
        half_pow / cr(fact) * sum
    };
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    out += cr(sign) * lnhalf * i_n;

    // psi part: (-1)^n 1/2 (xi/2)^n sum_k [psi(k+1)+psi(n+k+1)] q^k/(k!(n+k)!)
    let mut psi_k = digamma(cr(1.0))?;
    let mut psi_nk = digamma(cr(nf + 1.0))?;
    let mut fact_nk = 1.0;
    for j in 1..=n {
        fact_nk *= j as f64;
    }
    let mut base = cr(1.0 / fact_nk);
    let mut sum = base * (psi_k + psi_nk);
    for k in 0..opts.max_terms {
        let kf = k as f64;
        base *= q / (cr(kf + 1.0) * cr(nf + kf + 1.0));
        psi_k += cr(1.0 / (kf + 1.0));
        psi_nk += cr(1.0 / (nf + kf + 1.0));
        let term = base * (psi_k + psi_nk);
        sum += term;
        if term.norm() <= opts.tol * sum.norm().max(1e-30) && k > 2 {
            break;
        }
        if k + 1 == opts.max_terms {
            return Err(Error::NoConvergence("K integer series stalled".into()));
        }
    }
    out += cr(-sign * 0.5) * half_pow * sum;
    finite_or_err(out, xi)
}

/// Large-argument expansion at a reduced order, then the order recurrence
/// K_{nu+1} = K_{nu-1} + (2 nu / xi) K_nu upward (stable for K).
fn k_large_argument(lambda: Complex64, xi: Complex64) -> Result<Complex64> {
    let m = lambda.re.round().max(0.0) as usize;
    let mu = lambda - cr(m as f64);
    let k0 = k_asymptotic(mu, xi)?;
    if m == 0 {
        return Ok(k0);
    }
    let k1 = k_asymptotic(mu + cr(1.0), xi)?;
    let (mut km1, mut k) = (k0, k1);
    for j in 1..m {
        let nu = mu + cr(j as f64);
        let next = km1 + 2.0 * nu / xi * k;
        km1 = k;
        k = next;
        if !k.re.is_finite() || !k.im.is_finite() {
            return Err(Error::NoConvergence(format!(
                "K order recurrence overflow at order {nu}"
            )));
        }
    }
    Ok(k)
}

/// sqrt(pi/(2 xi)) e^-xi sum_k a_k(nu)/xi^k, truncated at the smallest term.
fn k_asymptotic(nu: Complex64, xi: Complex64) -> Result<Complex64> {
    let four_nu2 = 4.0 * nu * nu;
    let mut term = cr(1.0);
    let mut sum = cr(1.0);
    let mut smallest = f64::INFINITY;
    for k in 0..80 {
        let kf = k as f64;
        let next = term * (four_nu2 - cr((2.0 * kf + 1.0) * (2.0 * kf + 1.0)))
            / (8.0 * xi * cr(kf + 1.0));
        if next.norm() >= term.norm() && k > 0 {
            break;
        }
        term = next;
        sum += term;
        smallest = term.norm();
    }
    // Floor must beat what the series route would lose to cancellation here.
    let need = 20.0 * (-1.9 * xi.norm()).exp() + 1e-10;
    if smallest / sum.norm().max(f64::MIN_POSITIVE) > need {
        return Err(Error::NoConvergence(format!(
            "K asymptotic floor too high at |xi| = {}",
            xi.norm()
        )));
    }
    let pref = (cr(PI) / (2.0 * xi)).sqrt() * (-xi).exp();
    finite_or_err(pref * sum, xi)
}

fn finite_or_err(v: Complex64, xi: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NoConvergence(format!(
            "K overflowed at xi = {xi}"
        )))
    }
}
