//! Mathieu and modified Mathieu specialization of the Ince-GSWE: the four
//! truncated trigonometric families with their simplified recurrences, the
//! two-sided nu-families, and Poole's period-2 pi m solutions.
//!
//! The Ince-GSWE mapping is fixed at z0 = 1, B1 = -1/2, B2 = 1 with
//! z = cos^2(sigma u) and a = 2q - 4 B3.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::recurrence::{
    minimal_coefficients, solve_characteristic, CharacteristicProblem, CoefficientWindow,
    FamilyId, FamilyParams, RecurrenceFamily, SolveOptions, Unknown, WindowRequest,
};
use crate::specialfn::{bessel_k, FnEvalOptions};
use crate::tol::TAU_ZERO;
use crate::util::{cr, dist_to_half_integer_lattice};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Mathieu (sigma = 1) or modified Mathieu (sigma = i) equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    One,
    ImaginaryUnit,
}

impl Sigma {
    pub fn value(&self) -> Complex64 {
        match self {
            Sigma::One => cr(1.0),
            Sigma::ImaginaryUnit => I,
        }
    }
}

/// The Mathieu solution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MathieuFamily {
    /// Even, period pi (cos 2nu series).
    W1,
    /// Even, period 2 pi (cos (2n+1)u series).
    W2,
    /// Odd, period pi (sin (2n+2)u series).
    W3,
    /// Odd, period 2 pi (sin (2n+1)u series).
    W4,
    /// Two-sided even family cos((2n+2nu+1) u).
    NuEven,
    /// Two-sided odd family sin((2n+2nu+1) u).
    NuOdd,
    /// Poole solution with 2nu+1 = l/m.
    Poole,
}

impl MathieuFamily {
    fn recurrence_id(&self) -> FamilyId {
        match self {
            MathieuFamily::W1 => FamilyId::MathieuW1,
            MathieuFamily::W2 => FamilyId::MathieuW2,
            MathieuFamily::W3 => FamilyId::MathieuW3,
            MathieuFamily::W4 => FamilyId::MathieuW4,
            _ => FamilyId::MathieuEvenNu,
        }
    }

    /// Period of the trig series at sigma = 1, in units of pi.
    pub fn period_in_pi(&self) -> Option<f64> {
        match self {
            MathieuFamily::W1 | MathieuFamily::W3 => Some(1.0),
            MathieuFamily::W2 | MathieuFamily::W4 => Some(2.0),
            _ => None,
        }
    }
}

/// A Mathieu problem: q, the characteristic value a, sigma, family and the
/// phase parameter for the two-sided families.
#[derive(Debug, Clone)]
pub struct MathieuProblem {
    pub family: MathieuFamily,
    pub q: Complex64,
    pub a: Complex64,
    pub sigma: Sigma,
    pub nu: Complex64,
    pub window: CoefficientWindow,
    pub fn_opts: FnEvalOptions,
}

/// Solve the family's characteristic equation for a (given nu where the
/// family is two-sided), then build the coefficient window.
pub fn char_value_a(
    family: MathieuFamily,
    q: Complex64,
    nu: Complex64,
    seeds: &[Complex64],
    sigma: Sigma,
) -> Result<MathieuProblem> {
    if q.norm() < TAU_ZERO {
        return Err(Error::InvalidParams("Mathieu families require q != 0".into()));
    }
    if matches!(
        family,
        MathieuFamily::NuEven | MathieuFamily::NuOdd | MathieuFamily::Poole
    ) && dist_to_half_integer_lattice(nu) < crate::tol::DELTA_NU
    {
        return Err(Error::ForbiddenNu { nu });
    }
    let rec = RecurrenceFamily::new(
        family.recurrence_id(),
        FamilyParams::Mathieu { q, a: cr(0.0) },
    )?;
    let problem = CharacteristicProblem::new(rec, Unknown::MathieuA { fixed_nu: nu })?;
    // default ladder: a = 4n^2 / (2n+1)^2 / (2 nu + 1 + 2n)^2 at q -> 0
    let mut all_seeds: Vec<Complex64> = seeds.to_vec();
    if all_seeds.is_empty() {
        let base = match family {
            MathieuFamily::W1 => cr(0.0),
            MathieuFamily::W2 | MathieuFamily::W4 => cr(1.0),
            MathieuFamily::W3 => cr(4.0),
            _ => {
                let lam = 2.0 * nu + cr(1.0);
                lam * lam
            }
        };
        all_seeds.push(base);
    }
    let root = solve_characteristic(&problem, &all_seeds, &SolveOptions::default())?;
    let (solved, _) = problem.instantiate(root.value)?;
    let window = minimal_coefficients(&solved, nu, WindowRequest::Adaptive)?;
    Ok(MathieuProblem {
        family,
        q,
        a: root.value,
        sigma,
        nu,
        window,
        fn_opts: FnEvalOptions::default(),
    })
}

impl MathieuProblem {
    /// Trigonometric-side value W(u): the series converges for all finite u.
    pub fn eval_trig(&self, u: Complex64) -> Result<Complex64> {
        let su = self.sigma.value() * u;
        let mut sum = Complex64::new(0.0, 0.0);
        for (n, b) in self.window.iter() {
            let nf = n as f64;
            let term = match self.family {
                MathieuFamily::W1 => b * (cr(2.0 * nf) * su).cos(),
                MathieuFamily::W2 => b * (cr(2.0 * nf + 1.0) * su).cos(),
                MathieuFamily::W3 => b * (cr(2.0 * nf + 2.0) * su).sin(),
                MathieuFamily::W4 => b * (cr(2.0 * nf + 1.0) * su).sin(),
                MathieuFamily::NuEven => b * ((cr(2.0 * nf) + 2.0 * self.nu + cr(1.0)) * su).cos(),
                MathieuFamily::NuOdd => b * ((cr(2.0 * nf) + 2.0 * self.nu + cr(1.0)) * su).sin(),
                MathieuFamily::Poole => {
                    b * (I * (cr(2.0 * nf) + 2.0 * self.nu + cr(1.0)) * su).exp()
                }
            };
            sum += term;
        }
        Ok(sum)
    }

    /// Bessel-side value: sum of b_n K_order(+-2i sqrt(q) cos(sigma u)),
    /// convergent for |cos(sigma u)| > 1.
    pub fn eval_bessel(&self, u: Complex64, sign_plus: bool) -> Result<Complex64> {
        let su = self.sigma.value() * u;
        let c = su.cos();
        if c.norm() <= 1.0 {
            return Err(Error::OutsideDomain {
                z: c,
                domain: "|cos(sigma u)| > 1".into(),
            });
        }
        let s = if sign_plus { 1.0 } else { -1.0 };
        let xi = cr(2.0 * s) * I * self.q.sqrt() * c;
        let mut sum = Complex64::new(0.0, 0.0);
        for (n, b) in self.window.iter() {
            let nf = n as f64;
            // the odd families carry the (2n+2) / (2n+1) coefficient map and
            // a tan factor; the even families are plain.
            let term = match self.family {
                MathieuFamily::W1 => b * bessel_k(cr(2.0 * nf), xi, &self.fn_opts)?,
                MathieuFamily::W2 => b * bessel_k(cr(2.0 * nf + 1.0), xi, &self.fn_opts)?,
                MathieuFamily::W3 => {
                    cr(2.0 * nf + 2.0) * b * bessel_k(cr(2.0 * nf + 2.0), xi, &self.fn_opts)?
                }
                MathieuFamily::W4 => {
                    cr(2.0 * nf + 1.0) * b * bessel_k(cr(2.0 * nf + 1.0), xi, &self.fn_opts)?
                }
                MathieuFamily::NuEven | MathieuFamily::Poole => {
                    let order = cr(2.0 * nf) + 2.0 * self.nu + cr(1.0);
                    b * bessel_k(order, xi, &self.fn_opts)?
                }
                MathieuFamily::NuOdd => {
                    let order = cr(2.0 * nf) + 2.0 * self.nu + cr(1.0);
                    order * b * bessel_k(order, xi, &self.fn_opts)?
                }
            };
            sum += term;
        }
        let tan_factor = match self.family {
            MathieuFamily::W3 | MathieuFamily::W4 | MathieuFamily::NuOdd => su.tan(),
            _ => cr(1.0),
        };
        Ok(tan_factor * sum)
    }
}

/// Poole solutions: 2 nu + 1 = l/m with coprime 0 < l < m, m >= 2; the
/// characteristic value a is solved from the two-sided equation, and the
/// cos-, sin- and complex-exponential combinations share one window.
pub struct PooleSolutions {
    pub cosine: MathieuProblem,
    pub sine: MathieuProblem,
    pub exponential: MathieuProblem,
    pub l: u32,
    pub m: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn poole_solution(l: u32, m: u32, q: Complex64, seed_a: &[Complex64]) -> Result<PooleSolutions> {
    if !(l >= 1 && l < m && m >= 2 && gcd(l, m) == 1) {
        return Err(Error::InvalidParams(
            "Poole solutions require coprime integers 0 < l < m, m >= 2".into(),
        ));
    }
    let nu = cr((l as f64 / m as f64 - 1.0) / 2.0);
    // l/m strictly between 0 and 1 keeps nu off the forbidden lattice
    debug_assert!(dist_to_half_integer_lattice(nu) > 1e-9);
    let base = char_value_a(MathieuFamily::NuEven, q, nu, seed_a, Sigma::One)?;
    let mk = |family: MathieuFamily| MathieuProblem {
        family,
        q,
        a: base.a,
        sigma: Sigma::One,
        nu,
        window: base.window.clone(),
        fn_opts: base.fn_opts.clone(),
    };
    Ok(PooleSolutions {
        cosine: mk(MathieuFamily::NuEven),
        sine: mk(MathieuFamily::NuOdd),
        exponential: mk(MathieuFamily::Poole),
        l,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::c64;
    use std::f64::consts::PI;

    #[test]
    fn q_to_zero_ladder() {
        // q -> 0+: even-pi lowest a -> 0
        let p = char_value_a(MathieuFamily::W1, cr(1e-6), cr(0.0), &[], Sigma::One).unwrap();
        assert!(p.a.norm() < 1e-5, "lowest a at q->0: {}", p.a);
    }

    #[test]
    fn heads_differ_by_sign_of_q() {
        // (q + 1 - a) vs (1 - q - a): the W2/W4 lowest roots at q = 1 sit
        // symmetrically about a = 1.
        let w2 = char_value_a(MathieuFamily::W2, cr(1.0), cr(0.0), &[], Sigma::One).unwrap();
        let w4 = char_value_a(MathieuFamily::W4, cr(1.0), cr(0.0), &[], Sigma::One).unwrap();
        assert!((w2.a + w4.a - cr(2.0)).norm() > 1e-3 || (w2.a - w4.a).norm() > 1e-3);
        // tabulated values: a1(q=1) = 1.85910807..., b1(q=1) = -0.11024882...
        assert!((w2.a - cr(1.8591080725)).norm() < 1e-7, "{}", w2.a);
        assert!((w4.a - cr(-1.1024881699e-1)).norm() < 1e-7, "{}", w4.a);
    }

    #[test]
    fn w1_known_value_and_parity() {
        // a0(ce0, q=1) = -0.4551386041...
        let p = char_value_a(MathieuFamily::W1, cr(1.0), cr(0.0), &[], Sigma::One).unwrap();
        assert!((p.a - cr(-0.45513860410)).norm() < 1e-7, "{}", p.a);
        // evenness
        let u = c64(0.37, 0.0);
        let w = p.eval_trig(u).unwrap();
        let wm = p.eval_trig(-u).unwrap();
        assert!((w - wm).norm() < 1e-13);
    }

    #[test]
    fn w3_periodicity_pi() {
        let p = char_value_a(MathieuFamily::W3, cr(1.0), cr(0.0), &[], Sigma::One).unwrap();
        let u = c64(0.61, 0.0);
        let w = p.eval_trig(u).unwrap();
        let wp = p.eval_trig(u + cr(PI)).unwrap();
        assert!((w - wp).norm() < 1e-11, "{w} vs {wp}");
        // oddness
        let wm = p.eval_trig(-u).unwrap();
        assert!((w + wm).norm() < 1e-13);
    }

    #[test]
    fn bessel_side_needs_large_cosine() {
        let p = char_value_a(MathieuFamily::W1, cr(1.0), cr(0.0), &[], Sigma::One).unwrap();
        assert!(matches!(
            p.eval_bessel(c64(0.3, 0.0), true),
            Err(Error::OutsideDomain { .. })
        ));
        // modified equation (sigma = i): cos(i u) = cosh u > 1 works
        let pm = char_value_a(MathieuFamily::W1, cr(1.0), cr(0.0), &[], Sigma::ImaginaryUnit)
            .unwrap();
        assert!(pm.eval_bessel(c64(1.2, 0.0), true).is_ok());
    }

    #[test]
    fn poole_shares_window_and_combines() {
        let p = poole_solution(1, 3, cr(0.8), &[]).unwrap();
        assert_eq!(p.cosine.window, p.sine.window);
        // W^P = W1^P + i W2^P pointwise (Euler identity with shared coefficients)
        let u = c64(0.83, 0.0);
        let c = p.cosine.eval_trig(u).unwrap();
        let s = p.sine.eval_trig(u).unwrap();
        let e = p.exponential.eval_trig(u).unwrap();
        assert!((e - (c + I * s)).norm() < 1e-12 * e.norm().max(1.0));
    }

    #[test]
    fn poole_rejects_bad_lm() {
        assert!(poole_solution(2, 4, cr(0.8), &[]).is_err());
        assert!(poole_solution(3, 2, cr(0.8), &[]).is_err());
    }

    #[test]
    fn poole_period_six_pi() {
        // l = 1, m = 3: period 2 pi m = 6 pi.
        let p = poole_solution(1, 3, cr(0.8), &[]).unwrap();
        let u = c64(0.37, 0.0);
        let w = p.exponential.eval_trig(u).unwrap();
        let wp = p.exponential.eval_trig(u + cr(6.0 * PI)).unwrap();
        assert!((w - wp).norm() < 1e-8 * w.norm().max(1.0), "{w} vs {wp}");
        // and not 2 pi periodic
        let w2 = p.exponential.eval_trig(u + cr(2.0 * PI)).unwrap();
        assert!((w - w2).norm() > 1e-3);
    }

    #[test]
    fn q_zero_poole_ladder() {
        // a at q -> 0 approaches (2n + l/m)^2; lowest = (l/m)^2
        let p = poole_solution(1, 3, cr(1e-7), &[]).unwrap();
        let lm = 1.0 / 3.0;
        assert!((p.cosine.a - cr(lm * lm)).norm() < 1e-5, "{}", p.cosine.a);
    }
}
