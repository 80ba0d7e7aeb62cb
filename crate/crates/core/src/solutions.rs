//! Construction and evaluation of the series solutions: the two-sided
//! phase-parameter pairs and truncated pairs of the Ince-GSWE, the Ince-DCHE
//! pairs obtained in the Leaver limit, and the B2 = 2 DCHE pairs.
//!
//! Each pair couples a zero-side expansion (hypergeometric or Tricomi basis,
//! converging on the finite plane) with an infinity-side expansion (modified
//! Bessel or Tricomi basis) built from the same coefficient window.

use num_complex::Complex64;

use crate::equations::{EquationParams, InceDcheParams, InceGsweParams};
use crate::error::{Error, Result};
use crate::recurrence::{
    minimal_coefficients, solve_characteristic, CharacteristicProblem, CharacteristicRoot,
    CoefficientWindow, FamilyId, FamilyParams, RecurrenceFamily, SolveOptions, Unknown,
    WindowRequest,
};
use crate::specialfn::{bessel_k, gauss_f_zoned, psi_u, select_zone, F21Zone, FnEvalOptions};
use crate::tol::{DELTA_NU, TAU_ZERO};
use crate::util::{cdiv, cr, dist_to_half_integer_lattice, nearest_integer};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The solution pairs of the artifact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionFamily {
    /// Ince-GSWE first pair with a phase parameter.
    IgNu1,
    /// Ince-GSWE second pair with a phase parameter.
    IgNu2,
    /// Ince-GSWE truncated pair 1.
    IgT1,
    /// Ince-GSWE truncated pair 2.
    IgT2,
    /// Ince-GSWE truncated pair 3.
    IgT3,
    /// Ince-GSWE truncated pair 4.
    IgT4,
    /// Ince-DCHE first pair with a phase parameter.
    IdNu1,
    /// Ince-DCHE second pair with a phase parameter.
    IdNu2,
    /// Ince-DCHE truncated pair 1.
    IdT1,
    /// Ince-DCHE truncated pair 2.
    IdT2,
    /// DCHE (B2 = 2) first pair.
    DcheNu1,
    /// DCHE (B2 = 2) second pair; shares the first pair's coefficients.
    DcheNu2,
}

impl SolutionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SolutionFamily::IgNu1 => "ig-nu1",
            SolutionFamily::IgNu2 => "ig-nu2",
            SolutionFamily::IgT1 => "ig-t1",
            SolutionFamily::IgT2 => "ig-t2",
            SolutionFamily::IgT3 => "ig-t3",
            SolutionFamily::IgT4 => "ig-t4",
            SolutionFamily::IdNu1 => "id-nu1",
            SolutionFamily::IdNu2 => "id-nu2",
            SolutionFamily::IdT1 => "id-t1",
            SolutionFamily::IdT2 => "id-t2",
            SolutionFamily::DcheNu1 => "dche-nu1",
            SolutionFamily::DcheNu2 => "dche-nu2",
        }
    }

    pub fn is_two_sided(&self) -> bool {
        matches!(
            self,
            SolutionFamily::IgNu1
                | SolutionFamily::IgNu2
                | SolutionFamily::IdNu1
                | SolutionFamily::IdNu2
                | SolutionFamily::DcheNu1
                | SolutionFamily::DcheNu2
        )
    }

    /// The recurrence family backing this solution family.
    pub fn recurrence_id(&self) -> FamilyId {
        match self {
            SolutionFamily::IgNu1 => FamilyId::IgNu1,
            SolutionFamily::IgNu2 => FamilyId::IgNu2,
            SolutionFamily::IgT1 => FamilyId::IgT1,
            SolutionFamily::IgT2 => FamilyId::IgT2,
            SolutionFamily::IgT3 => FamilyId::IgT3,
            SolutionFamily::IgT4 => FamilyId::IgT4,
            SolutionFamily::IdNu1 => FamilyId::IdNu1,
            SolutionFamily::IdNu2 => FamilyId::IdNu2,
            SolutionFamily::IdT1 => FamilyId::IdT1,
            SolutionFamily::IdT2 => FamilyId::IdT2,
            // both DCHE pairs have the same series coefficients
            SolutionFamily::DcheNu1 | SolutionFamily::DcheNu2 => FamilyId::DcheB2Eq2,
        }
    }
}

/// Which member of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    ZeroSide,
    InfinitySide,
}

/// Branch choice for the +-2i sqrt(q z) Bessel argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SqrtSign {
    #[default]
    Plus,
    Minus,
}

impl SqrtSign {
    fn factor(&self) -> f64 {
        match self {
            SqrtSign::Plus => 1.0,
            SqrtSign::Minus => -1.0,
        }
    }
}

/// How the phase parameter is obtained.
#[derive(Debug, Clone)]
pub enum NuSpec {
    /// Use this value (it must satisfy the characteristic equation for the
    /// series to solve the ODE).
    Value(Complex64),
    /// Solve the characteristic equation for nu from these seeds.
    Solve { seeds: Vec<Complex64> },
}

/// Convergence domain of one series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Any finite z away from the singular points.
    FinitePlane,
    /// |z| > |z0|.
    OutsideZ0,
    /// |z| > 0.
    PuncturedPlane,
}

/// A fully assembled series solution.
#[derive(Debug, Clone)]
pub struct SeriesSolution {
    pub family: SolutionFamily,
    pub variant: Variant,
    pub params: EquationParams,
    pub nu: Complex64,
    pub window: CoefficientWindow,
    pub sqrt_sign: SqrtSign,
    pub fn_opts: FnEvalOptions,
}

/// Value of a series evaluation plus the achieved-tolerance estimate
/// |last included term| / |partial sum|.
#[derive(Debug, Clone, Copy)]
pub struct EvalOutcome {
    pub value: Complex64,
    pub tail_estimate: f64,
}

/// Value with analytic first and second derivatives. The basis derivatives
/// come from the first-derivative contiguous relations plus each basis
/// function's own differential equation, so no finite differencing enters.
#[derive(Debug, Clone, Copy)]
pub struct EvalDerivatives {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub tail_estimate: f64,
}

fn not_nonpositive_integer(c: Complex64) -> bool {
    match nearest_integer(c, TAU_ZERO) {
        Some(n) => n > 0,
        None => true,
    }
}

/// Structural exclusions that guard the recurrence denominators themselves
/// (evaluated before any coefficient is touched).
fn check_structural(family: SolutionFamily, params: &EquationParams) -> Result<()> {
    match (family, params) {
        (SolutionFamily::IgT1, EquationParams::InceGswe(p)) => {
            if !not_nonpositive_integer(p.b2) {
                return Err(Error::ApplicabilityError(
                    "pair 1 requires B2 != 0, -1, -2, ...; pair 2 covers those \
                     values (ig-t2)"
                        .into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT2, EquationParams::InceGswe(p)) => {
            let rho = p.b2 / 2.0 + p.h();
            if dist_to_half_integer_lattice(rho) < TAU_ZERO && rho.re <= -0.75 {
                return Err(Error::ApplicabilityError(
                    "B2/2 + B1/z0 in {-1, -3/2, -2, ...}: use pair 1 (ig-t1)".into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT3, EquationParams::InceGswe(p)) => {
            if matches!(nearest_integer(p.b2, TAU_ZERO), Some(n) if n >= 4) {
                return Err(Error::ApplicabilityError(
                    "pair 3 requires B2 != 4, 5, 6, ...; use pair 4 (ig-t4)".into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT4, EquationParams::InceGswe(p)) => {
            let rho = p.b2 / 2.0 + p.h();
            if dist_to_half_integer_lattice(rho) < TAU_ZERO && rho.re >= 0.75 {
                return Err(Error::ApplicabilityError(
                    "B2/2 + B1/z0 in {1, 3/2, 2, ...}: use pair 3 (ig-t3)".into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IdT1, EquationParams::InceDche(p)) => {
            if !not_nonpositive_integer(p.b2) {
                return Err(Error::ApplicabilityError(
                    "pair 1 requires B2 != 0, -1, -2, ...; use pair 2 (id-t2)".into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IdT2, EquationParams::InceDche(p)) => {
            if matches!(nearest_integer(p.b2, TAU_ZERO), Some(n) if n >= 4) {
                return Err(Error::ApplicabilityError(
                    "pair 2 requires B2 != 4, 5, 6, ...; use pair 1 (id-t1)".into(),
                ));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Zero-side applicability: the hypergeometric lower parameter must not be
/// zero or a negative integer. Gamma_N = 0 engineerings force exactly that,
/// so their finite series exist on the Bessel side only; the error message
/// points at the sibling pairs that carry the zero-side solutions.
fn check_applicability(
    family: SolutionFamily,
    params: &EquationParams,
    variant: Option<Variant>,
) -> Result<()> {
    if variant == Some(Variant::InfinitySide) {
        // the Bessel/Tricomi infinity bases carry no lower-parameter screen
        return match (family, params) {
            (
                SolutionFamily::IgNu1
                | SolutionFamily::IgNu2
                | SolutionFamily::IgT1
                | SolutionFamily::IgT2
                | SolutionFamily::IgT3
                | SolutionFamily::IgT4,
                EquationParams::InceGswe(_),
            )
            | (
                SolutionFamily::IdNu1
                | SolutionFamily::IdNu2
                | SolutionFamily::IdT1
                | SolutionFamily::IdT2,
                EquationParams::InceDche(_),
            )
            | (
                SolutionFamily::DcheNu1 | SolutionFamily::DcheNu2,
                EquationParams::Dche(_),
            ) => Ok(()),
            _ => Err(Error::InvalidParams(format!(
                "family {} does not accept {} parameters",
                family.name(),
                params.kind_name()
            ))),
        };
    }
    let c_ok = |c: Complex64| -> bool { not_nonpositive_integer(c) };
    match (family, params) {
        (SolutionFamily::IgNu1, EquationParams::InceGswe(p)) => {
            if !not_nonpositive_integer(p.b2 + p.h()) {
                return Err(Error::ApplicabilityError(
                    "B2 + B1/z0 is zero or a negative integer: the hypergeometric \
                     basis is undefined; use the second pair (ig-nu2)"
                        .into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgNu2, EquationParams::InceGswe(p)) => {
            if !not_nonpositive_integer(cr(2.0) - p.b2 - p.h()) {
                return Err(Error::ApplicabilityError(
                    "B2 + B1/z0 is an integer >= 2: use the first pair (ig-nu1)".into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT1, EquationParams::InceGswe(p)) => {
            if !c_ok(p.b2 + p.h()) {
                return Err(Error::ApplicabilityError(
                    "B2 + B1/z0 is zero or a negative integer: the zero-side \
                     hypergeometric functions are defined in pairs 3/4 (ig-t3, ig-t4)"
                        .into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT2, EquationParams::InceGswe(p)) => {
            if !c_ok(p.b2 + p.h()) {
                return Err(Error::ApplicabilityError(
                    "B2 + B1/z0 is zero or a negative integer: the zero-side \
                     hypergeometric functions are defined in pairs 3/4 (ig-t3, ig-t4)"
                        .into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT3, EquationParams::InceGswe(p)) => {
            if !c_ok(cr(2.0) - p.b2 - p.h()) {
                return Err(Error::ApplicabilityError(
                    "2 - B2 - B1/z0 is zero or a negative integer: the zero-side \
                     hypergeometric functions are defined in pairs 1/2 (ig-t1, ig-t2)"
                        .into(),
                ));
            }
            Ok(())
        }
        (SolutionFamily::IgT4, EquationParams::InceGswe(p)) => {
            if !c_ok(cr(2.0) - p.b2 - p.h()) {
                return Err(Error::ApplicabilityError(
                    "2 - B2 - B1/z0 is zero or a negative integer: the zero-side \
                     hypergeometric functions are defined in pairs 1/2 (ig-t1, ig-t2)"
                        .into(),
                ));
            }
            Ok(())
        }
        (
            SolutionFamily::IdT1 | SolutionFamily::IdT2,
            EquationParams::InceDche(_),
        ) => Ok(()),
        (SolutionFamily::IdNu1 | SolutionFamily::IdNu2, EquationParams::InceDche(_)) => Ok(()),
        (SolutionFamily::DcheNu1 | SolutionFamily::DcheNu2, EquationParams::Dche(_)) => Ok(()),
        _ => Err(Error::InvalidParams(format!(
            "family {} does not accept {} parameters",
            family.name(),
            params.kind_name()
        ))),
    }
}

fn recurrence_family(family: SolutionFamily, params: &EquationParams) -> Result<RecurrenceFamily> {
    let fp = match params {
        EquationParams::InceGswe(p) => FamilyParams::InceGswe(*p),
        EquationParams::InceDche(p) => FamilyParams::InceDche(*p),
        EquationParams::Dche(p) => FamilyParams::Dche(*p),
        EquationParams::Gswe(_) => {
            return Err(Error::InvalidParams(
                "series solutions are built for the Ince limits and the B2 = 2 DCHE".into(),
            ))
        }
    };
    RecurrenceFamily::new(family.recurrence_id(), fp)
}

/// Build both members of a pair from one shared coefficient window.
pub fn build_pair(
    family: SolutionFamily,
    params: &EquationParams,
    nu_spec: &NuSpec,
    sqrt_sign: SqrtSign,
) -> Result<(SeriesSolution, SeriesSolution)> {
    check_structural(family, params)?;
    check_applicability(family, params, None)?;
    let rec = recurrence_family(family, params)?;
    let nu = resolve_nu(&rec, nu_spec)?;
    let window = minimal_coefficients(&rec, nu, WindowRequest::Adaptive)?;
    let mk = |variant| SeriesSolution {
        family,
        variant,
        params: *params,
        nu,
        window: window.clone(),
        sqrt_sign,
        fn_opts: FnEvalOptions::default(),
    };
    Ok((mk(Variant::ZeroSide), mk(Variant::InfinitySide)))
}

/// Build one member of a pair. The infinity side stays constructible when a
/// zero-side hypergeometric parameter is excluded (quasi-polynomial cases).
pub fn build_solution(
    family: SolutionFamily,
    variant: Variant,
    params: &EquationParams,
    nu_spec: &NuSpec,
    sqrt_sign: SqrtSign,
) -> Result<SeriesSolution> {
    check_structural(family, params)?;
    check_applicability(family, params, Some(variant))?;
    let rec = recurrence_family(family, params)?;
    let nu = resolve_nu(&rec, nu_spec)?;
    let window = minimal_coefficients(&rec, nu, WindowRequest::Adaptive)?;
    Ok(SeriesSolution {
        family,
        variant,
        params: *params,
        nu,
        window,
        sqrt_sign,
        fn_opts: FnEvalOptions::default(),
    })
}

fn resolve_nu(rec: &RecurrenceFamily, nu_spec: &NuSpec) -> Result<Complex64> {
    if let Some(fixed) = rec.fixed_nu() {
        // Truncated family: nu is determined by the equation parameters.
        return Ok(fixed);
    }
    match nu_spec {
        NuSpec::Value(v) => {
            if dist_to_half_integer_lattice(*v) < DELTA_NU {
                return Err(Error::ForbiddenNu { nu: *v });
            }
            Ok(*v)
        }
        NuSpec::Solve { seeds } => {
            let problem = CharacteristicProblem::new(*rec, Unknown::Nu)?;
            let root: CharacteristicRoot =
                solve_characteristic(&problem, seeds, &SolveOptions::default())?;
            Ok(root.value)
        }
    }
}

impl SeriesSolution {
    /// Convergence domain of this member.
    pub fn domain(&self) -> Domain {
        match (&self.params, self.variant) {
            (EquationParams::InceGswe(_), Variant::ZeroSide) => Domain::FinitePlane,
            (EquationParams::InceGswe(_), Variant::InfinitySide) => Domain::OutsideZ0,
            _ => Domain::PuncturedPlane,
        }
    }

    pub fn domain_contains(&self, z: Complex64) -> bool {
        let clear_of_singularities = self
            .params
            .singular_points()
            .iter()
            .all(|s| (z - s).norm() > 1e-9);
        clear_of_singularities
            && match self.domain() {
                Domain::FinitePlane => z.norm().is_finite(),
                Domain::PuncturedPlane => z.norm() > 0.0,
                Domain::OutsideZ0 => {
                    let z0 = match self.params {
                        EquationParams::InceGswe(p) => p.z0,
                        _ => cr(0.0),
                    };
                    z.norm() > z0.norm()
                }
            }
    }

    /// The Bessel argument +-2i sqrt(q z).
    fn xi(&self, z: Complex64) -> Complex64 {
        let q = match self.params {
            EquationParams::InceGswe(p) => p.q,
            EquationParams::InceDche(p) => p.q,
            _ => cr(0.0),
        };
        cr(2.0 * self.sqrt_sign.factor()) * I * (q * z).sqrt()
    }

    /// Prefactor multiplying the whole series.
    pub fn prefactor(&self, z: Complex64) -> Complex64 {
        match (self.family, self.variant, &self.params) {
            (SolutionFamily::IgNu1, Variant::ZeroSide, _) => cr(1.0),
            (SolutionFamily::IgNu1, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IgNu2, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h()) * z.powc(cr(1.0) + p.h())
            }
            (SolutionFamily::IgNu2, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h()) * z.powc(p.h() + p.b2 / 2.0 - cr(0.5))
            }
            (SolutionFamily::IgT1, Variant::ZeroSide, _) => cr(1.0),
            (SolutionFamily::IgT1, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IgT2, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                z.powc(cr(1.0) + p.h())
            }
            (SolutionFamily::IgT2, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IgT3, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h()) * z.powc(cr(1.0) + p.h())
            }
            (SolutionFamily::IgT3, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h()) * z.powc(p.h() + p.b2 / 2.0 - cr(0.5))
            }
            (SolutionFamily::IgT4, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h())
            }
            (SolutionFamily::IgT4, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                (z - p.z0).powc(cr(1.0) - p.b2 - p.h()) * z.powc(p.h() + p.b2 / 2.0 - cr(0.5))
            }
            (SolutionFamily::IdNu1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                z.powc(-self.nu - p.b2 / 2.0)
            }
            (SolutionFamily::IdNu1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IdNu2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (p.b1 / z).exp() * z.powc(-self.nu - p.b2 / 2.0)
            }
            (SolutionFamily::IdNu2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                (p.b1 / z).exp() * z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IdT1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                z.powc(cr(1.0) - p.b2)
            }
            (SolutionFamily::IdT1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::IdT2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (p.b1 / z).exp() * z.powc(cr(-1.0))
            }
            (SolutionFamily::IdT2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                (p.b1 / z).exp() * z.powc((cr(1.0) - p.b2) / 2.0)
            }
            (SolutionFamily::DcheNu1, _, EquationParams::Dche(p)) => (I * p.omega * z).exp(),
            (SolutionFamily::DcheNu2, _, EquationParams::Dche(p)) => {
                (I * p.omega * z + p.b1 / z).exp()
            }
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    }

    /// The n-th basis function (without the shared prefactor and without the
    /// b_n coefficient).
    pub fn basis_term(&self, n: i64, z: Complex64) -> Result<Complex64> {
        self.basis_term_zoned(n, z, None)
    }

    /// Basis term with its first and second z-derivatives.
    fn basis_term_d2(
        &self,
        n: i64,
        z: Complex64,
        zone: Option<F21Zone>,
    ) -> Result<(Complex64, Complex64, Complex64)> {
        let nf = cr(n as f64);
        let nu = self.nu;
        let o = &self.fn_opts;
        match (self.family, self.variant, &self.params) {
            // F-basis: F' = (ab/c) F(a+1,b+1;c+1;y), F'' from the
            // hypergeometric equation; y = 1 - z/z0 so d/dz = -(1/z0) d/dy.
            (f, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                let y = cr(1.0) - z / p.z0;
                let (a, b, c) = ig_zero_abc(f, p, nf, nu);
                let f0 = gauss_f_zoned(a, b, c, y, zone, o)?;
                // F' = (ab/c) F(a+1,b+1;c+1;y); the factor ab kills the n = 0
                // polynomial term, whose shifted F may be undefined.
                let fp = if (a * b).norm() < 1e-280 {
                    Complex64::new(0.0, 0.0)
                } else {
                    a * b / c * gauss_f_zoned(a + cr(1.0), b + cr(1.0), c + cr(1.0), y, zone, o)?
                };
                let fpp = (a * b * f0 - (c - (a + b + cr(1.0)) * y) * fp) / (y * (cr(1.0) - y));
                let dydz = -1.0 / p.z0;
                Ok((f0, fp * dydz, fpp * dydz * dydz))
            }
            // K-basis: K' = -(K_{l-1}+K_{l+1})/2, K'' from the modified
            // Bessel equation; xi = +-2i sqrt(q z) so xi' = xi/(2z).
            (f, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                let order = ig_inf_order(f, p, nf, nu);
                self.k_term_d2(order, z)
            }
            (
                SolutionFamily::IdNu1 | SolutionFamily::IdNu2,
                Variant::InfinitySide,
                EquationParams::InceDche(_),
            ) => self.k_term_d2(2.0 * (nf + nu) + cr(1.0), z),
            (SolutionFamily::IdT1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                self.k_term_d2(2.0 * nf + p.b2 - cr(1.0), z)
            }
            (SolutionFamily::IdT2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                self.k_term_d2(2.0 * nf + cr(3.0) - p.b2, z)
            }
            // Tricomi basis with power factor y^e: Psi' = -a Psi(a+1,b+1;y),
            // Psi'' from Kummer's equation.
            (SolutionFamily::IdNu1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = p.b1 / z;
                psi_power_term_d2(nf + nu + p.b2 / 2.0, 2.0 * (nf + nu) + cr(2.0), cr(n as f64), y, -y / z, 2.0 * y / (z * z), o)
            }
            (SolutionFamily::IdNu2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = -p.b1 / z;
                psi_power_term_d2(nf + nu + cr(2.0) - p.b2 / 2.0, 2.0 * (nf + nu) + cr(2.0), cr(n as f64), y, -y / z, 2.0 * y / (z * z), o)
            }
            (SolutionFamily::IdT1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = p.b1 / z;
                psi_power_term_d2(nf + p.b2 - cr(1.0), 2.0 * nf + p.b2, cr(n as f64), y, -y / z, 2.0 * y / (z * z), o)
            }
            (SolutionFamily::IdT2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = -p.b1 / z;
                psi_power_term_d2(nf + cr(3.0) - p.b2, 2.0 * nf + cr(4.0) - p.b2, cr(n as f64), y, -y / z, 2.0 * y / (z * z), o)
            }
            (SolutionFamily::DcheNu1, Variant::ZeroSide, EquationParams::Dche(p)) => {
                let y = p.b1 / z;
                psi_power_term_d2(nf + nu + cr(1.0), 2.0 * (nf + nu) + cr(2.0), nf + nu + cr(1.0), y, -y / z, 2.0 * y / (z * z), o)
            }
            (SolutionFamily::DcheNu2, Variant::ZeroSide, EquationParams::Dche(p)) => {
                let y = -p.b1 / z;
                let sign = cr(if n.rem_euclid(2) == 1 { -1.0 } else { 1.0 });
                let (t, d1, d2) = psi_power_term_d2(nf + nu + cr(1.0), 2.0 * (nf + nu) + cr(2.0), nf + nu + cr(1.0), y, -y / z, 2.0 * y / (z * z), o)?;
                Ok((sign * t, sign * d1, sign * d2))
            }
            (SolutionFamily::DcheNu1, Variant::InfinitySide, EquationParams::Dche(p)) => {
                let y = -2.0 * I * p.omega * z;
                psi_power_term_d2(nf + nu + cr(1.0) + I * p.eta, 2.0 * (nf + nu) + cr(2.0), nf + nu, y, y / z, cr(0.0), o)
            }
            (SolutionFamily::DcheNu2, Variant::InfinitySide, EquationParams::Dche(p)) => {
                let y = -2.0 * I * p.omega * z;
                let sign = cr(if n.rem_euclid(2) == 1 { -1.0 } else { 1.0 });
                let (t, d1, d2) = psi_power_term_d2(nf + nu + cr(1.0) + I * p.eta, 2.0 * (nf + nu) + cr(2.0), nf + nu, y, y / z, cr(0.0), o)?;
                Ok((sign * t, sign * d1, sign * d2))
            }
            _ => Err(Error::InvalidParams(format!(
                "basis for {} / {:?} undefined",
                self.family.name(),
                self.variant
            ))),
        }
    }

    /// K_order(xi(z)) with z-derivatives.
    fn k_term_d2(
        &self,
        order: Complex64,
        z: Complex64,
    ) -> Result<(Complex64, Complex64, Complex64)> {
        let xi = self.xi(z);
        let o = &self.fn_opts;
        let k0 = bessel_k(order, xi, o)?;
        let km = bessel_k(order - cr(1.0), xi, o)?;
        let kp = bessel_k(order + cr(1.0), xi, o)?;
        let dk = -(km + kp) / 2.0;
        // modified Bessel equation: K'' = -K'/xi + (1 + order^2/xi^2) K
        let ddk = -dk / xi + (cr(1.0) + order * order / (xi * xi)) * k0;
        let dxi = xi / (2.0 * z);
        let ddxi = -xi / (4.0 * z * z);
        Ok((k0, dk * dxi, ddk * dxi * dxi + dk * ddxi))
    }

    fn basis_term_zoned(&self, n: i64, z: Complex64, zone: Option<F21Zone>) -> Result<Complex64> {
        let nf = cr(n as f64);
        let nu = self.nu;
        match (self.family, self.variant, &self.params) {
            // Ince-GSWE zero side: Gauss hypergeometric basis.
            (f, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                let y = cr(1.0) - z / p.z0;
                let s = p.b2 / 2.0;
                let h = p.h();
                let (a, b, c) = match f {
                    SolutionFamily::IgNu1 => (s - nf - nu - cr(1.0), nf + nu + s, p.b2 + h),
                    SolutionFamily::IgNu2 => (
                        -nf - nu - s + cr(1.0),
                        nf + nu + cr(2.0) - s,
                        cr(2.0) - p.b2 - h,
                    ),
                    SolutionFamily::IgT1 => (-nf, nf + p.b2 - cr(1.0), p.b2 + h),
                    SolutionFamily::IgT2 => (-nf, nf + cr(1.0) + p.b2 + 2.0 * h, p.b2 + h),
                    SolutionFamily::IgT3 => (-nf, nf + cr(3.0) - p.b2, cr(2.0) - p.b2 - h),
                    SolutionFamily::IgT4 => {
                        (-nf, nf + cr(1.0) - p.b2 - 2.0 * h, cr(2.0) - p.b2 - h)
                    }
                    _ => unreachable!("screened by check_applicability"),
                };
                gauss_f_zoned(a, b, c, y, zone, &self.fn_opts)
            }
            // Ince-GSWE infinity side: modified Bessel basis.
            (f, Variant::InfinitySide, EquationParams::InceGswe(p)) => {
                let h = p.h();
                let order = match f {
                    SolutionFamily::IgNu1 | SolutionFamily::IgNu2 => 2.0 * (nf + nu) + cr(1.0),
                    SolutionFamily::IgT1 => 2.0 * nf + p.b2 - cr(1.0),
                    SolutionFamily::IgT2 => 2.0 * nf + cr(1.0) + p.b2 + 2.0 * h,
                    SolutionFamily::IgT3 => 2.0 * nf + cr(3.0) - p.b2,
                    SolutionFamily::IgT4 => 2.0 * nf + cr(1.0) - p.b2 - 2.0 * h,
                    _ => unreachable!("screened by check_applicability"),
                };
                bessel_k(order, self.xi(z), &self.fn_opts)
            }
            // Ince-DCHE infinity side: modified Bessel basis.
            (
                SolutionFamily::IdNu1 | SolutionFamily::IdNu2,
                Variant::InfinitySide,
                EquationParams::InceDche(_),
            ) => bessel_k(2.0 * (nf + nu) + cr(1.0), self.xi(z), &self.fn_opts),
            (SolutionFamily::IdT1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                bessel_k(2.0 * nf + p.b2 - cr(1.0), self.xi(z), &self.fn_opts)
            }
            (SolutionFamily::IdT2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                bessel_k(2.0 * nf + cr(3.0) - p.b2, self.xi(z), &self.fn_opts)
            }
            // Ince-DCHE zero side: Tricomi basis.
            (SolutionFamily::IdNu1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = p.b1 / z;
                Ok(pow_int(y, n)
                    * psi_u(nf + nu + p.b2 / 2.0, 2.0 * (nf + nu) + cr(2.0), y, &self.fn_opts)?)
            }
            (SolutionFamily::IdNu2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = -p.b1 / z;
                Ok(pow_int(y, n)
                    * psi_u(
                        nf + nu + cr(2.0) - p.b2 / 2.0,
                        2.0 * (nf + nu) + cr(2.0),
                        y,
                        &self.fn_opts,
                    )?)
            }
            (SolutionFamily::IdT1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = p.b1 / z;
                Ok(pow_int(y, n) * psi_u(nf + p.b2 - cr(1.0), 2.0 * nf + p.b2, y, &self.fn_opts)?)
            }
            (SolutionFamily::IdT2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                let y = -p.b1 / z;
                Ok(pow_int(y, n)
                    * psi_u(nf + cr(3.0) - p.b2, 2.0 * nf + cr(4.0) - p.b2, y, &self.fn_opts)?)
            }
            // DCHE (B2 = 2) pairs: Tricomi basis on both sides.
            (SolutionFamily::DcheNu1, Variant::ZeroSide, EquationParams::Dche(p)) => {
                let y = p.b1 / z;
                let t = ((nf + nu + cr(1.0)) * y.ln()).exp();
                Ok(t * psi_u(nf + nu + cr(1.0), 2.0 * (nf + nu) + cr(2.0), y, &self.fn_opts)?)
            }
            (SolutionFamily::DcheNu2, Variant::ZeroSide, EquationParams::Dche(p)) => {
                // Second pair = first pair under B1 -> -B1; sharing the first
                // pair's window requires the (-1)^n coefficient relabeling.
                let y = -p.b1 / z;
                let t = ((nf + nu + cr(1.0)) * y.ln()).exp();
                let sign = cr(if n.rem_euclid(2) == 1 { -1.0 } else { 1.0 });
                Ok(sign
                    * t
                    * psi_u(nf + nu + cr(1.0), 2.0 * (nf + nu) + cr(2.0), y, &self.fn_opts)?)
            }
            (SolutionFamily::DcheNu1, Variant::InfinitySide, EquationParams::Dche(p)) => {
                let y = -2.0 * I * p.omega * z;
                let t = ((nf + nu) * y.ln()).exp();
                Ok(t * psi_u(
                    nf + nu + cr(1.0) + I * p.eta,
                    2.0 * (nf + nu) + cr(2.0),
                    y,
                    &self.fn_opts,
                )?)
            }
            (SolutionFamily::DcheNu2, Variant::InfinitySide, EquationParams::Dche(p)) => {
                let y = -2.0 * I * p.omega * z;
                let t = ((nf + nu) * y.ln()).exp();
                let sign = cr(if n.rem_euclid(2) == 1 { -1.0 } else { 1.0 });
                Ok(sign
                    * t
                    * psi_u(
                        nf + nu + cr(1.0) + I * p.eta,
                        2.0 * (nf + nu) + cr(2.0),
                        y,
                        &self.fn_opts,
                    )?)
            }
            _ => Err(Error::InvalidParams(format!(
                "basis for {} / {:?} undefined",
                self.family.name(),
                self.variant
            ))),
        }
    }

    /// Evaluate the series: prefactor times the symmetric outward sum of
    /// b_n * basis_n, stopping once the running shell falls below the tail
    /// tolerance relative to the partial sum.
    pub fn eval(&self, z: Complex64) -> Result<EvalOutcome> {
        self.eval_impl(z, None)
    }

    /// (exponent of z, exponent of z-z0, coefficient of z in the exponential,
    /// coefficient of 1/z in the exponential) describing the prefactor.
    fn prefactor_exponents(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        let zero4 = (cr(0.0), cr(0.0), cr(0.0), cr(0.0));
        match (self.family, self.variant, &self.params) {
            (SolutionFamily::IgNu1 | SolutionFamily::IgT1, Variant::ZeroSide, _) => zero4,
            (
                SolutionFamily::IgNu1 | SolutionFamily::IgT1 | SolutionFamily::IgT2,
                Variant::InfinitySide,
                EquationParams::InceGswe(p),
            ) => ((cr(1.0) - p.b2) / 2.0, cr(0.0), cr(0.0), cr(0.0)),
            (SolutionFamily::IgNu2 | SolutionFamily::IgT3, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (cr(1.0) + p.h(), cr(1.0) - p.b2 - p.h(), cr(0.0), cr(0.0))
            }
            (
                SolutionFamily::IgNu2 | SolutionFamily::IgT3 | SolutionFamily::IgT4,
                Variant::InfinitySide,
                EquationParams::InceGswe(p),
            ) => (
                p.h() + p.b2 / 2.0 - cr(0.5),
                cr(1.0) - p.b2 - p.h(),
                cr(0.0),
                cr(0.0),
            ),
            (SolutionFamily::IgT2, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (cr(1.0) + p.h(), cr(0.0), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IgT4, Variant::ZeroSide, EquationParams::InceGswe(p)) => {
                (cr(0.0), cr(1.0) - p.b2 - p.h(), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IdNu1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (-self.nu - p.b2 / 2.0, cr(0.0), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IdNu2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (-self.nu - p.b2 / 2.0, cr(0.0), cr(0.0), p.b1)
            }
            (SolutionFamily::IdNu1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                ((cr(1.0) - p.b2) / 2.0, cr(0.0), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IdNu2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                ((cr(1.0) - p.b2) / 2.0, cr(0.0), cr(0.0), p.b1)
            }
            (SolutionFamily::IdT1, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (cr(1.0) - p.b2, cr(0.0), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IdT1, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                ((cr(1.0) - p.b2) / 2.0, cr(0.0), cr(0.0), cr(0.0))
            }
            (SolutionFamily::IdT2, Variant::ZeroSide, EquationParams::InceDche(p)) => {
                (cr(-1.0), cr(0.0), cr(0.0), p.b1)
            }
            (SolutionFamily::IdT2, Variant::InfinitySide, EquationParams::InceDche(p)) => {
                ((cr(1.0) - p.b2) / 2.0, cr(0.0), cr(0.0), p.b1)
            }
            (SolutionFamily::DcheNu1, _, EquationParams::Dche(p)) => {
                (cr(0.0), cr(0.0), I * p.omega, cr(0.0))
            }
            (SolutionFamily::DcheNu2, _, EquationParams::Dche(p)) => {
                (cr(0.0), cr(0.0), I * p.omega, p.b1)
            }
            _ => zero4,
        }
    }

    /// Evaluate with analytic first and second derivatives, optional zone pin.
    pub fn eval_full(&self, z: Complex64, pin: Option<Complex64>) -> Result<EvalDerivatives> {
        if !self.domain_contains(z) {
            return Err(Error::OutsideDomain {
                z,
                domain: format!("{:?}", self.domain()),
            });
        }
        let zone = match (pin, &self.params, self.variant) {
            (Some(pz), EquationParams::InceGswe(p), Variant::ZeroSide) => {
                Some(select_zone(cr(1.0) - pz / p.z0)?)
            }
            _ => None,
        };
        let w = &self.window;
        let (mut s0, mut s1, mut s2) = self.basis_term_d2(0, z, zone)?;
        s0 *= w.b(0);
        s1 *= w.b(0);
        s2 *= w.b(0);
        let mut last = s0.norm();
        let reach = w.n_max().max(-w.n_min());
        for k in 1..=reach {
            let mut shell: f64 = 0.0;
            for n in [k, -k] {
                if n >= w.n_min() && n <= w.n_max() {
                    let b = w.b(n);
                    if b.norm() == 0.0 {
                        continue;
                    }
                    let (t0, t1, t2) = self.basis_term_d2(n, z, zone)?;
                    s0 += b * t0;
                    s1 += b * t1;
                    s2 += b * t2;
                    shell = shell.max((b * t0).norm());
                }
            }
            last = shell;
            if shell < crate::tol::TAU_TAIL * s0.norm() && k > 2 {
                break;
            }
        }
        // U = P S: U' = P (L1 S + S'), U'' = P (L2 S + 2 (P'/P) S' + S'')
        let pref = self.prefactor(z);
        let (pa, pb, pc, pd) = self.prefactor_exponents();
        let z0 = match self.params {
            EquationParams::InceGswe(p) => p.z0,
            EquationParams::Gswe(p) => p.z0,
            _ => cr(0.0),
        };
        let l1 = pa / z
            + if pb.norm() > 0.0 { pb / (z - z0) } else { cr(0.0) }
            + pc
            - pd / (z * z);
        let dl1 = -pa / (z * z)
            - if pb.norm() > 0.0 { pb / ((z - z0) * (z - z0)) } else { cr(0.0) }
            + 2.0 * pd / (z * z * z);
        let l2 = l1 * l1 + dl1;
        let value = pref * s0;
        let d1 = pref * (l1 * s0 + s1);
        let d2 = pref * (l2 * s0 + 2.0 * l1 * s1 + s2);
        let tail_estimate = if self.window.is_terminated() {
            0.0
        } else {
            last / s0.norm().max(f64::MIN_POSITIVE)
        };
        Ok(EvalDerivatives { value, d1, d2, tail_estimate })
    }

    /// Evaluate with the hypergeometric continuation zone pinned at a
    /// reference point. Finite-difference oracles sample a tight cluster of
    /// points; pinning keeps every sample on one continuation branch so the
    /// (sub-1e-12) branch disagreements cannot be amplified by 1/h^2.
    pub fn eval_pinned(&self, z: Complex64, pin: Complex64) -> Result<EvalOutcome> {
        let zone = match (&self.params, self.variant) {
            (EquationParams::InceGswe(p), Variant::ZeroSide) => {
                Some(select_zone(cr(1.0) - pin / p.z0)?)
            }
            _ => None,
        };
        self.eval_impl(z, zone)
    }

    fn eval_impl(&self, z: Complex64, zone: Option<F21Zone>) -> Result<EvalOutcome> {
        if !self.domain_contains(z) {
            return Err(Error::OutsideDomain {
                z,
                domain: format!("{:?}", self.domain()),
            });
        }
        let w = &self.window;
        let mut sum = w.b(0) * self.basis_term_zoned(0, z, zone)?;
        let mut last: f64 = sum.norm();
        let reach = w.n_max().max(-w.n_min());
        for k in 1..=reach {
            let mut shell: f64 = 0.0;
            for n in [k, -k] {
                if n >= w.n_min() && n <= w.n_max() {
                    let b = w.b(n);
                    if b.norm() == 0.0 {
                        continue;
                    }
                    let term = b * self.basis_term_zoned(n, z, zone)?;
                    sum += term;
                    shell = shell.max(term.norm());
                }
            }
            last = shell;
            if shell < crate::tol::TAU_TAIL * sum.norm() && k > 2 {
                break;
            }
        }
        let value = self.prefactor(z) * sum;
        let tail_estimate = if self.window.is_terminated() {
            0.0
        } else {
            last / sum.norm().max(f64::MIN_POSITIVE)
        };
        Ok(EvalOutcome { value, tail_estimate })
    }
}

fn ig_zero_abc(
    f: SolutionFamily,
    p: &InceGsweParams,
    nf: Complex64,
    nu: Complex64,
) -> (Complex64, Complex64, Complex64) {
    let s = p.b2 / 2.0;
    let h = p.h();
    match f {
        SolutionFamily::IgNu1 => (s - nf - nu - cr(1.0), nf + nu + s, p.b2 + h),
        SolutionFamily::IgNu2 => (
            -nf - nu - s + cr(1.0),
            nf + nu + cr(2.0) - s,
            cr(2.0) - p.b2 - h,
        ),
        SolutionFamily::IgT1 => (-nf, nf + p.b2 - cr(1.0), p.b2 + h),
        SolutionFamily::IgT2 => (-nf, nf + cr(1.0) + p.b2 + 2.0 * h, p.b2 + h),
        SolutionFamily::IgT3 => (-nf, nf + cr(3.0) - p.b2, cr(2.0) - p.b2 - h),
        SolutionFamily::IgT4 => (-nf, nf + cr(1.0) - p.b2 - 2.0 * h, cr(2.0) - p.b2 - h),
        _ => unreachable!("screened by check_applicability"),
    }
}

fn ig_inf_order(
    f: SolutionFamily,
    p: &InceGsweParams,
    nf: Complex64,
    nu: Complex64,
) -> Complex64 {
    let h = p.h();
    match f {
        SolutionFamily::IgNu1 | SolutionFamily::IgNu2 => 2.0 * (nf + nu) + cr(1.0),
        SolutionFamily::IgT1 => 2.0 * nf + p.b2 - cr(1.0),
        SolutionFamily::IgT2 => 2.0 * nf + cr(1.0) + p.b2 + 2.0 * h,
        SolutionFamily::IgT3 => 2.0 * nf + cr(3.0) - p.b2,
        SolutionFamily::IgT4 => 2.0 * nf + cr(1.0) - p.b2 - 2.0 * h,
        _ => unreachable!("screened by check_applicability"),
    }
}

/// (y^e Psi(a,b;y), and its first two z-derivatives) given y(z) with
/// derivatives yp = dy/dz and ypp = d2y/dz2.
fn psi_power_term_d2(
    a: Complex64,
    b: Complex64,
    e: Complex64,
    y: Complex64,
    yp: Complex64,
    ypp: Complex64,
    o: &FnEvalOptions,
) -> Result<(Complex64, Complex64, Complex64)> {
    let psi0 = psi_u(a, b, y, o)?;
    let psi1 = -a * psi_u(a + cr(1.0), b + cr(1.0), y, o)?;
    // Kummer's equation: y Psi'' + (b - y) Psi' - a Psi = 0
    let psi2 = (a * psi0 - (b - y) * psi1) / y;
    let t = (e * y.ln()).exp();
    let f0 = t * psi0;
    // d/dy of y^e Psi = y^e (e Psi / y + Psi')
    let g1 = t * (e * psi0 / y + psi1);
    let g2 = t * (e * (e - cr(1.0)) * psi0 / (y * y) + 2.0 * e * psi1 / y + psi2);
    Ok((f0, g1 * yp, g2 * yp * yp + g1 * ypp))
}

/// Integer power that stays finite for very small/large bases.
fn pow_int(y: Complex64, n: i64) -> Complex64 {
    match n.cmp(&0) {
        std::cmp::Ordering::Equal => cr(1.0),
        std::cmp::Ordering::Greater => y.powi(n as i32),
        std::cmp::Ordering::Less => cdiv(cr(1.0), y.powi((-n) as i32)),
    }
}

/// Successive eval/asymptotic-model ratios of an infinity-side solution at
/// the given radii along the positive real direction. The model is the full
/// prefactor times sqrt(pi/(2 xi)) e^-xi, so the ratios tend to the constant
/// sum of the window coefficients.
pub fn asymptotic_check(sol: &SeriesSolution, radii: &[f64]) -> Result<Vec<(f64, Complex64)>> {
    if sol.variant != Variant::InfinitySide {
        return Err(Error::InvalidParams(
            "asymptotic check applies to infinity-side solutions".into(),
        ));
    }
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        let z = cr(r);
        let xi = sol.xi(z);
        let model =
            sol.prefactor(z) * (cr(std::f64::consts::PI) / (2.0 * xi)).sqrt() * (-xi).exp();
        let v = sol.eval(z)?;
        out.push((r, cdiv(v.value, model)));
    }
    Ok(out)
}

/// Deviation schedule of the Ince-GSWE first pair against its Leaver limit
/// (the Ince-DCHE first pair) at a fixed evaluation point, normalized at an
/// anchor point. nu is re-solved for each z0 by continuation from the
/// Ince-DCHE root.
pub fn leaver_limit_consistency(
    b1: Complex64,
    b2: Complex64,
    b3: Complex64,
    q: Complex64,
    z0_schedule: &[Complex64],
    z_eval: Complex64,
    z_anchor: Complex64,
    seeds: &[Complex64],
) -> Result<Vec<f64>> {
    let id_params = InceDcheParams::new(b1, b2, b3, q)?;
    let id_rec = RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(id_params))?;
    let id_prob = CharacteristicProblem::new(id_rec, Unknown::Nu)?;
    let id_root = solve_characteristic(&id_prob, seeds, &SolveOptions::default())?;
    let id_sol = build_solution(
        SolutionFamily::IdNu1,
        Variant::ZeroSide,
        &EquationParams::InceDche(id_params),
        &NuSpec::Value(id_root.value),
        SqrtSign::Plus,
    )?;
    let id_ratio = cdiv(id_sol.eval(z_eval)?.value, id_sol.eval(z_anchor)?.value);

    let mut deviations = Vec::with_capacity(z0_schedule.len());
    let mut seed = id_root.value;
    for &z0 in z0_schedule {
        let ig_params = InceGsweParams::new(b1, b2, b3, z0, q)?;
        let ig_rec = RecurrenceFamily::new(FamilyId::IgNu1, FamilyParams::InceGswe(ig_params))?;
        let ig_prob = CharacteristicProblem::new(ig_rec, Unknown::Nu)?;
        let ig_root = solve_characteristic(&ig_prob, &[seed], &SolveOptions::default())?;
        seed = ig_root.value;
        let ig_sol = build_solution(
            SolutionFamily::IgNu1,
            Variant::ZeroSide,
            &EquationParams::InceGswe(ig_params),
            &NuSpec::Value(ig_root.value),
            SqrtSign::Plus,
        )?;
        let ig_ratio = cdiv(ig_sol.eval(z_eval)?.value, ig_sol.eval(z_anchor)?.value);
        deviations.push((ig_ratio - id_ratio).norm());
    }
    Ok(deviations)
}
