//! Radial Schrödinger equation for inverse fourth/sixth-power polarization
//! potentials, mapped onto the Ince-DCHE (r^-6 present, neutral target) or
//! the B2 = 2 DCHE (r^-4 only, neutral or ionized target).
//!
//! Atomic units throughout: hbar = mu = e' = ebar = 1, a0 = 1.

use num_complex::Complex64;

use crate::equations::{DcheParams, EquationParams, InceDcheParams};
use crate::error::{Error, Result};
use crate::recurrence::{
    solve_characteristic, CharacteristicProblem, FamilyId, FamilyParams, RecurrenceFamily,
    SolveOptions, Unknown,
};
use crate::solutions::{build_pair, NuSpec, SeriesSolution, SolutionFamily, SqrtSign, Variant};
use crate::tol::TAU_ZERO;
use crate::util::{cdiv, cr};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Inverse-power polarization potential parameters (atomic units),
/// V(r) = (Z - z') e'/r - alpha1'/(2 r^4) - (alpha2' - 6 a0 beta1')/(2 r^6).
#[derive(Debug, Clone, Copy)]
pub struct PotentialParams {
    /// Dipole polarizability alpha_1'.
    pub alpha1p: f64,
    /// Quadrupole polarizability alpha_2'.
    pub alpha2p: f64,
    /// Nonadiabatic correction beta_1'.
    pub beta1p: f64,
    /// Target charge number Z.
    pub z_charge: i32,
    /// Target electron count z'.
    pub zprime: i32,
    /// Collision energy E > 0.
    pub energy: f64,
    /// Angular momentum l >= 0.
    pub l: u32,
}

impl PotentialParams {
    pub fn validate(&self) -> Result<()> {
        if self.energy <= 0.0 {
            return Err(Error::InvalidPotential("energy must be positive".into()));
        }
        Ok(())
    }

    /// Wavenumber k = sqrt(2 mu E)/hbar = sqrt(2 E).
    pub fn k(&self) -> f64 {
        (2.0 * self.energy).sqrt()
    }
}

/// Sign choice for the B1 branch of the inverse sixth-power mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum B1Branch {
    #[default]
    Plus,
    Minus,
}

/// Mapping of the r^-6 path: Ince-DCHE parameters plus the variable map
/// z = r^2 and the chi prefactor e^(-B1/(2 r^2)) r^(B2 - 1/2).
#[derive(Debug, Clone, Copy)]
pub struct Inverse6Map {
    pub params: InceDcheParams,
    pub k: f64,
}

/// Map a neutral-target potential with an r^-6 term onto the Ince-DCHE:
/// B1 = +-sqrt(6 a0 beta1' - alpha2'), B2 = 2 - alpha1'/(2 B1),
/// B3 = (B2/2 - 1/4)(B2/2 - 3/4) - l(l+1)/4, q = k^2/4, z = r^2.
pub fn map_inverse6(pot: &PotentialParams, branch: B1Branch) -> Result<Inverse6Map> {
    pot.validate()?;
    if pot.z_charge != pot.zprime {
        // Coulomb + r^-6 needs a more general equation.
        return Err(Error::ChargedTargetUnsupported);
    }
    let c6 = 6.0 * pot.beta1p - pot.alpha2p;
    if c6.abs() < TAU_ZERO {
        return Err(Error::DegeneratePotential);
    }
    let sign = match branch {
        B1Branch::Plus => 1.0,
        B1Branch::Minus => -1.0,
    };
    // B1 real for c6 > 0, pure imaginary (B1 = iC) otherwise.
    let b1 = if c6 > 0.0 {
        cr(sign * c6.sqrt())
    } else {
        Complex64::new(0.0, sign * (-c6).sqrt())
    };
    let b2 = cr(2.0) - cr(pot.alpha1p) / (2.0 * b1);
    let ll = pot.l as f64 * (pot.l as f64 + 1.0);
    let b3 = (b2 / 2.0 - cr(0.25)) * (b2 / 2.0 - cr(0.75)) - cr(ll / 4.0);
    let k = pot.k();
    let q = cr(k * k / 4.0);
    Ok(Inverse6Map {
        params: InceDcheParams::new(b1, b2, b3, q)?,
        k,
    })
}

/// Mapping of the r^-4 path: DCHE parameters with B2 = 2, z = r and the chi
/// prefactor e^(-B1/(2r)) r^(B2/2).
#[derive(Debug, Clone, Copy)]
pub struct Inverse4Map {
    pub params: DcheParams,
    pub k: f64,
}

/// Map a potential without the r^-6 term (alpha2' = 6 a0 beta1') onto the
/// B2 = 2 DCHE: B1^2 = -4 alpha1' (pure imaginary B1), B3 = -l(l+1),
/// omega = +-k, eta = +- (Z - z')/k.
pub fn map_inverse4(pot: &PotentialParams) -> Result<Inverse4Map> {
    pot.validate()?;
    if (pot.alpha2p - 6.0 * pot.beta1p).abs() > TAU_ZERO {
        return Err(Error::InvalidPotential(
            "the r^-6 coefficient must vanish (alpha2' = 6 a0 beta1') on this path".into(),
        ));
    }
    if pot.alpha1p <= 0.0 {
        return Err(Error::InvalidPotential(
            "dipole polarizability must be positive".into(),
        ));
    }
    let b1 = I * cr(2.0 * pot.alpha1p.sqrt());
    let ll = pot.l as f64 * (pot.l as f64 + 1.0);
    let k = pot.k();
    let omega = cr(k);
    let eta = cr((pot.z_charge - pot.zprime) as f64 / k);
    Ok(Inverse4Map {
        params: DcheParams::new(b1, cr(2.0), cr(-ll), eta, omega)?,
        k,
    })
}

/// A radial wavefunction R(r) = chi(r)/r built on a series solution.
#[derive(Debug, Clone)]
pub struct RadialSolution {
    pub sol: SeriesSolution,
    pub pair: u8,
    pub variant: Variant,
    /// true: z = r^2 (r^-6 path); false: z = r (r^-4 path).
    pub square_map: bool,
    pub k: f64,
}

impl RadialSolution {
    /// R(r), assembling the printed radial prefactor with the series value.
    pub fn eval(&self, r: f64) -> Result<Complex64> {
        if r <= 0.0 {
            return Err(Error::OutsideDomain {
                z: cr(r),
                domain: "r > 0".into(),
            });
        }
        let (b1, b2) = match self.sol.params {
            EquationParams::InceDche(p) => (p.b1, p.b2),
            EquationParams::Dche(p) => (p.b1, p.b2),
            _ => unreachable!("radial solutions wrap DCHE-family series"),
        };
        if self.square_map {
            // R = e^(-B1/(2 r^2)) r^(B2 - 3/2) U(z = r^2)
            let z = cr(r * r);
            let u = self.sol.eval(z)?.value;
            Ok((-b1 / (2.0 * r * r)).exp() * cr(r).powc(b2 - cr(1.5)) * u)
        } else {
            // R = e^(-B1/(2r)) U(z = r) (B2 = 2 absorbs chi/r)
            let z = cr(r);
            let u = self.sol.eval(z)?.value;
            Ok((-b1 / (2.0 * r)).exp() * u)
        }
    }
}

/// Solve the phase parameter and build both members of the requested pair of
/// radial solutions.
pub fn radial_solve(
    map_params: &EquationParams,
    pair: u8,
    k: f64,
    seeds: &[Complex64],
) -> Result<(RadialSolution, RadialSolution, Complex64)> {
    let (family, rec_id, square_map) = match (map_params, pair) {
        (EquationParams::InceDche(_), 1) => (SolutionFamily::IdNu1, FamilyId::IdNu1, true),
        (EquationParams::InceDche(_), 2) => (SolutionFamily::IdNu2, FamilyId::IdNu2, true),
        (EquationParams::Dche(_), 1) => (SolutionFamily::DcheNu1, FamilyId::DcheB2Eq2, false),
        (EquationParams::Dche(_), 2) => (SolutionFamily::DcheNu2, FamilyId::DcheB2Eq2, false),
        _ => {
            return Err(Error::InvalidParams(
                "radial pairs exist for the Ince-DCHE (r^-6) and B2 = 2 DCHE (r^-4)".into(),
            ))
        }
    };
    let fp = match map_params {
        EquationParams::InceDche(p) => FamilyParams::InceDche(*p),
        EquationParams::Dche(p) => FamilyParams::Dche(*p),
        _ => unreachable!(),
    };
    let rec = RecurrenceFamily::new(rec_id, fp)?;
    let problem = CharacteristicProblem::new(rec, Unknown::Nu)?;
    let root = solve_characteristic(&problem, seeds, &SolveOptions::default())?;
    let (zero, inf) = build_pair(family, map_params, &NuSpec::Value(root.value), SqrtSign::Plus)?;
    Ok((
        RadialSolution {
            sol: zero,
            pair,
            variant: Variant::ZeroSide,
            square_map,
            k,
        },
        RadialSolution {
            sol: inf,
            pair,
            variant: Variant::InfinitySide,
            square_map,
            k,
        },
        root.value,
    ))
}

/// Numerical verification of the printed boundary behaviors.
#[derive(Debug, Clone)]
pub struct BoundaryReport {
    /// (r, |R(r)| / |origin model|) on the inward schedule.
    pub origin_ratios: Vec<(f64, f64)>,
    /// (r, |r R(r) e^(+-i k r)|) on the outward schedule.
    pub infinity_ratios: Vec<(f64, Complex64)>,
}

/// Check |R| ~ sqrt(r) (imaginary-B1 r^-6 case) or |R| ~ 1 (r^-4 case) at
/// the origin, and boundedness of r R(r) with the e^(+-ikr)/r (optionally
/// Coulomb-modified r^(-+i eta)) asymptotic stripped at infinity.
pub fn boundary_report(
    zero_side: &RadialSolution,
    infinity_side: &RadialSolution,
    r_small: &[f64],
    r_large: &[f64],
) -> Result<BoundaryReport> {
    let mut origin_ratios = Vec::with_capacity(r_small.len());
    for &r in r_small {
        let v = zero_side.eval(r)?;
        let model = if zero_side.square_map { r.sqrt() } else { 1.0 };
        origin_ratios.push((r, v.norm() / model));
    }
    let mut infinity_ratios = Vec::with_capacity(r_large.len());
    let eta = match infinity_side.sol.params {
        EquationParams::Dche(p) => p.eta,
        _ => cr(0.0),
    };
    for &r in r_large {
        let v = infinity_side.eval(r)?;
        // strip r^(-+ i eta) e^(+- i k r) / r; the surviving ratio must be
        // stationary in r.
        let k = infinity_side.k;
        let phase = (I * cr(k * r)).exp() * cr(r).powc(-I * eta);
        infinity_ratios.push((r, cr(r) * v * cdiv(cr(1.0), phase)));
    }
    Ok(BoundaryReport {
        origin_ratios,
        infinity_ratios,
    })
}
