//! The four differential equations: parameter records with validity
//! constraints, singularity data, reduced ODE coefficients and the local
//! behaviors at each singular point.
//!
//! All equations are stored in their native form
//! `lead(z) U'' + (B1 + B2 z) U' + f(z) U = 0`; the first-derivative-free
//! normal forms live in `transforms` and are never applied silently.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol::TAU_ZERO;
use crate::util::cr;

/// Generalized spheroidal wave equation,
/// z(z-z0) U'' + (B1+B2 z) U' + [B3 - 2 eta omega (z-z0) + omega^2 z(z-z0)] U = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsweParams {
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub z0: Complex64,
    pub eta: Complex64,
    pub omega: Complex64,
}

/// Ince limit of the GSWE (omega -> 0, eta -> inf, 2 eta omega = -q),
/// z(z-z0) U'' + (B1+B2 z) U' + [B3 + q(z-z0)] U = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InceGsweParams {
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub z0: Complex64,
    pub q: Complex64,
}

/// Double-confluent Heun equation (five parameters),
/// z^2 U'' + (B1+B2 z) U' + [B3 - 2 eta omega z + omega^2 z^2] U = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DcheParams {
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub eta: Complex64,
    pub omega: Complex64,
}

/// Ince limit of the DCHE,
/// z^2 U'' + (B1+B2 z) U' + [B3 + q z] U = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InceDcheParams {
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub q: Complex64,
}

impl GsweParams {
    pub fn new(
        b1: Complex64,
        b2: Complex64,
        b3: Complex64,
        z0: Complex64,
        eta: Complex64,
        omega: Complex64,
    ) -> Result<Self> {
        if omega.norm() < TAU_ZERO {
            return Err(Error::InvalidParams("GSWE requires omega != 0".into()));
        }
        if z0.norm() < TAU_ZERO {
            return Err(Error::InvalidParams(
                "GSWE requires z0 != 0 (z0 = 0 is the DCHE)".into(),
            ));
        }
        Ok(GsweParams { b1, b2, b3, z0, eta, omega })
    }
}

impl InceGsweParams {
    pub fn new(
        b1: Complex64,
        b2: Complex64,
        b3: Complex64,
        z0: Complex64,
        q: Complex64,
    ) -> Result<Self> {
        if q.norm() < TAU_ZERO {
            return Err(Error::InvalidParams("Ince-GSWE requires q != 0".into()));
        }
        if z0.norm() < TAU_ZERO {
            return Err(Error::InvalidParams(
                "Ince-GSWE requires z0 != 0 (z0 = 0 is the Ince-DCHE)".into(),
            ));
        }
        Ok(InceGsweParams { b1, b2, b3, z0, q })
    }

    /// B1/z0, ubiquitous in the coefficient formulas.
    pub fn h(&self) -> Complex64 {
        self.b1 / self.z0
    }
}

impl DcheParams {
    pub fn new(
        b1: Complex64,
        b2: Complex64,
        b3: Complex64,
        eta: Complex64,
        omega: Complex64,
    ) -> Result<Self> {
        if omega.norm() < TAU_ZERO || b1.norm() < TAU_ZERO {
            return Err(Error::InvalidParams(
                "DCHE requires omega != 0 and B1 != 0; degenerate reductions \
                 apply otherwise (transforms::degenerate_reduce)"
                    .into(),
            ));
        }
        Ok(DcheParams { b1, b2, b3, eta, omega })
    }
}

impl InceDcheParams {
    pub fn new(b1: Complex64, b2: Complex64, b3: Complex64, q: Complex64) -> Result<Self> {
        if q.norm() < TAU_ZERO || b1.norm() < TAU_ZERO {
            return Err(Error::InvalidParams(
                "Ince-DCHE requires q != 0 and B1 != 0; degenerate reductions \
                 apply otherwise (transforms::degenerate_reduce)"
                    .into(),
            ));
        }
        Ok(InceDcheParams { b1, b2, b3, q })
    }
}

/// Tagged union of the four parameter sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EquationParams {
    Gswe(GsweParams),
    InceGswe(InceGsweParams),
    Dche(DcheParams),
    InceDche(InceDcheParams),
}

impl EquationParams {
    pub fn kind_name(&self) -> &'static str {
        match self {
            EquationParams::Gswe(_) => "gswe",
            EquationParams::InceGswe(_) => "ince-gswe",
            EquationParams::Dche(_) => "dche",
            EquationParams::InceDche(_) => "ince-dche",
        }
    }

    /// Finite singular points of the equation.
    pub fn singular_points(&self) -> Vec<Complex64> {
        match self {
            EquationParams::Gswe(p) => vec![cr(0.0), p.z0],
            EquationParams::InceGswe(p) => vec![cr(0.0), p.z0],
            EquationParams::Dche(_) | EquationParams::InceDche(_) => vec![cr(0.0)],
        }
    }

    fn is_singular(&self, z: Complex64) -> bool {
        self.singular_points()
            .iter()
            .any(|s| (z - s).norm() < TAU_ZERO)
    }
}

/// Evaluators for p(z), q(z) of the reduced form U'' + p U' + q U = 0.
#[derive(Debug, Clone, Copy)]
pub struct OdeCoefficients {
    params: EquationParams,
}

impl OdeCoefficients {
    /// p(z) coefficient; rejects singular points.
    pub fn p_at(&self, z: Complex64) -> Result<Complex64> {
        if self.params.is_singular(z) {
            return Err(Error::SingularEvaluation { z });
        }
        let lead = self.lead(z);
        let (b1, b2) = match self.params {
            EquationParams::Gswe(p) => (p.b1, p.b2),
            EquationParams::InceGswe(p) => (p.b1, p.b2),
            EquationParams::Dche(p) => (p.b1, p.b2),
            EquationParams::InceDche(p) => (p.b1, p.b2),
        };
        Ok((b1 + b2 * z) / lead)
    }

    /// q(z) coefficient; rejects singular points.
    pub fn q_at(&self, z: Complex64) -> Result<Complex64> {
        if self.params.is_singular(z) {
            return Err(Error::SingularEvaluation { z });
        }
        let lead = self.lead(z);
        let num = match self.params {
            EquationParams::Gswe(p) => {
                p.b3 - 2.0 * p.eta * p.omega * (z - p.z0) + p.omega * p.omega * z * (z - p.z0)
            }
            EquationParams::InceGswe(p) => p.b3 + p.q * (z - p.z0),
            EquationParams::Dche(p) => {
                p.b3 - 2.0 * p.eta * p.omega * z + p.omega * p.omega * z * z
            }
            EquationParams::InceDche(p) => p.b3 + p.q * z,
        };
        Ok(num / lead)
    }

    fn lead(&self, z: Complex64) -> Complex64 {
        match self.params {
            EquationParams::Gswe(p) => z * (z - p.z0),
            EquationParams::InceGswe(p) => z * (z - p.z0),
            EquationParams::Dche(_) | EquationParams::InceDche(_) => z * z,
        }
    }
}

/// p, q evaluators for the reduced second-order form.
pub fn ode_coefficients(params: &EquationParams) -> OdeCoefficients {
    OdeCoefficients { params: *params }
}

/// Endpoints at which local behavior can be requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Zero,
    Z0,
    Infinity,
}

/// Kind of local behavior at a singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticKind {
    /// e^(exp_linear z) z^power at infinity.
    NormalThome,
    /// e^(exp_sqrt sqrt(z)) z^power at infinity.
    SubnormalThome,
    /// z^power (Frobenius index) at a regular singular point.
    OriginRegular,
    /// e^(exp_inverse / z) z^power at an irregular origin.
    OriginEssential,
}

/// One local behavior: prefactor exponent data for the limit form
/// e^(exp_linear z + exp_sqrt sqrt(z) + exp_inverse / z) z^power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticDescriptor {
    pub kind: AsymptoticKind,
    pub power: Complex64,
    pub exp_linear: Complex64,
    pub exp_sqrt: Complex64,
    pub exp_inverse: Complex64,
}

impl AsymptoticDescriptor {
    fn regular(power: Complex64) -> Self {
        AsymptoticDescriptor {
            kind: AsymptoticKind::OriginRegular,
            power,
            exp_linear: cr(0.0),
            exp_sqrt: cr(0.0),
            exp_inverse: cr(0.0),
        }
    }
}

/// Both local behaviors at an endpoint. No ordering promise is made.
pub fn endpoint_behavior(
    params: &EquationParams,
    endpoint: Endpoint,
) -> Result<Vec<AsymptoticDescriptor>> {
    match (params, endpoint) {
        // Regular singular points of the (Ince-)GSWE: indices (0, 1+B1/z0)
        // at z = 0 and (0, 1-B2-B1/z0) at z = z0.
        (EquationParams::Gswe(p), Endpoint::Zero) => Ok(vec![
            AsymptoticDescriptor::regular(cr(0.0)),
            AsymptoticDescriptor::regular(cr(1.0) + p.b1 / p.z0),
        ]),
        (EquationParams::InceGswe(p), Endpoint::Zero) => Ok(vec![
            AsymptoticDescriptor::regular(cr(0.0)),
            AsymptoticDescriptor::regular(cr(1.0) + p.b1 / p.z0),
        ]),
        (EquationParams::Gswe(p), Endpoint::Z0) => Ok(vec![
            AsymptoticDescriptor::regular(cr(0.0)),
            AsymptoticDescriptor::regular(cr(1.0) - p.b2 - p.b1 / p.z0),
        ]),
        (EquationParams::InceGswe(p), Endpoint::Z0) => Ok(vec![
            AsymptoticDescriptor::regular(cr(0.0)),
            AsymptoticDescriptor::regular(cr(1.0) - p.b2 - p.b1 / p.z0),
        ]),
        // Normal Thome behavior at infinity: e^(+-i omega z) z^(-+ i eta - B2/2).
        (EquationParams::Gswe(p), Endpoint::Infinity) => Ok(normal_thome(p.b2, p.eta, p.omega)),
        (EquationParams::Dche(p), Endpoint::Infinity) => Ok(normal_thome(p.b2, p.eta, p.omega)),
        // Subnormal Thome behavior: e^(+-2i sqrt(q z)) z^(1/4 - B2/2).
        (EquationParams::InceGswe(p), Endpoint::Infinity) => Ok(subnormal_thome(p.b2, p.q)),
        (EquationParams::InceDche(p), Endpoint::Infinity) => Ok(subnormal_thome(p.b2, p.q)),
        // Irregular origin of the (Ince-)DCHE: U ~ 1 or e^(B1/z) z^(2-B2).
        (EquationParams::Dche(p), Endpoint::Zero) => Ok(origin_essential(p.b1, p.b2)),
        (EquationParams::InceDche(p), Endpoint::Zero) => Ok(origin_essential(p.b1, p.b2)),
        (EquationParams::Dche(_) | EquationParams::InceDche(_), Endpoint::Z0) => Err(
            Error::InvalidEndpoint("the DCHE family has no z0 singular point".into()),
        ),
    }
}

fn normal_thome(b2: Complex64, eta: Complex64, omega: Complex64) -> Vec<AsymptoticDescriptor> {
    let i = Complex64::new(0.0, 1.0);
    [1.0, -1.0]
        .iter()
        .map(|&s| AsymptoticDescriptor {
            kind: AsymptoticKind::NormalThome,
            power: -cr(s) * i * eta - b2 / 2.0,
            exp_linear: cr(s) * i * omega,
            exp_sqrt: cr(0.0),
            exp_inverse: cr(0.0),
        })
        .collect()
}

fn subnormal_thome(b2: Complex64, q: Complex64) -> Vec<AsymptoticDescriptor> {
    let i = Complex64::new(0.0, 1.0);
    [1.0, -1.0]
        .iter()
        .map(|&s| AsymptoticDescriptor {
            kind: AsymptoticKind::SubnormalThome,
            power: cr(0.25) - b2 / 2.0,
            exp_linear: cr(0.0),
            // exponent is +-2i sqrt(q) sqrt(z)
            exp_sqrt: cr(2.0 * s) * i * q.sqrt(),
            exp_inverse: cr(0.0),
        })
        .collect()
}

fn origin_essential(b1: Complex64, b2: Complex64) -> Vec<AsymptoticDescriptor> {
    vec![
        AsymptoticDescriptor::regular(cr(0.0)),
        AsymptoticDescriptor {
            kind: AsymptoticKind::OriginEssential,
            power: cr(2.0) - b2,
            exp_linear: cr(0.0),
            exp_sqrt: cr(0.0),
            exp_inverse: b1,
        },
    ]
}
