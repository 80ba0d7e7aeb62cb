//! Parameter and prefactor transformation rules between solution families:
//! T1, T2, T3 for the Ince-GSWE, the tau rule for the Ince-DCHE, the three
//! first-derivative-free normal forms of the DCHE family, and the degenerate
//! reductions to confluent hypergeometric / modified Bessel / constant
//! coefficient problems.

use num_complex::Complex64;

use crate::equations::{EquationParams, InceDcheParams, InceGsweParams};
use crate::error::{Error, Result};
use crate::specialfn::{bessel_k, kummer_m, FnEvalOptions};
use crate::tol::TAU_ZERO;
use crate::util::cr;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The transformation rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    T1,
    T2,
    T3,
    Tau,
}

/// Argument substitution carried by a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgMap {
    Identity,
    /// z -> z0 - z.
    ReflectAtZ0,
}

/// Result of applying a rule: a solution of the equation with `new_params`,
/// composed with `arg_map` and multiplied by `prefactor`, solves the original
/// equation.
#[derive(Debug, Clone)]
pub struct TransformResult {
    pub rule: Rule,
    pub new_params: EquationParams,
    pub arg_map: ArgMap,
    /// exponent of z, exponent of (z - z0), coefficient of 1/z in exp
    pub pow_z: Complex64,
    pub pow_z_minus_z0: Complex64,
    pub exp_inv_z: Complex64,
}

impl TransformResult {
    /// The prefactor value at z.
    pub fn prefactor(&self, z: Complex64) -> Complex64 {
        let z0 = match &self.new_params {
            EquationParams::InceGswe(p) => p.z0,
            _ => cr(0.0),
        };
        let mut out = cr(1.0);
        if self.pow_z.norm() > 0.0 {
            out *= z.powc(self.pow_z);
        }
        if self.pow_z_minus_z0.norm() > 0.0 {
            out *= (z - z0).powc(self.pow_z_minus_z0);
        }
        if self.exp_inv_z.norm() > 0.0 {
            out *= (self.exp_inv_z / z).exp();
        }
        out
    }

    /// The transformed evaluation point.
    pub fn map_arg(&self, z: Complex64) -> Complex64 {
        match self.arg_map {
            ArgMap::Identity => z,
            ArgMap::ReflectAtZ0 => {
                let z0 = match &self.new_params {
                    EquationParams::InceGswe(p) => p.z0,
                    _ => cr(0.0),
                };
                z0 - z
            }
        }
    }
}

/// Apply one of the printed rules to the equation parameters.
pub fn apply_rule(rule: Rule, params: &EquationParams) -> Result<TransformResult> {
    match (rule, params) {
        (Rule::T1, EquationParams::InceGswe(p)) => {
            let h = p.h();
            let c1 = -p.b1 - 2.0 * p.z0;
            let c2 = cr(2.0) + p.b2 + 2.0 * h;
            let c3 = p.b3 + (cr(1.0) + h) * (p.b2 + h);
            let new = InceGsweParams::new(c1, c2, c3, p.z0, p.q)?;
            Ok(TransformResult {
                rule,
                new_params: EquationParams::InceGswe(new),
                arg_map: ArgMap::Identity,
                pow_z: cr(1.0) + h,
                pow_z_minus_z0: cr(0.0),
                exp_inv_z: cr(0.0),
            })
        }
        (Rule::T2, EquationParams::InceGswe(p)) => {
            let h = p.h();
            let d2 = cr(2.0) - p.b2 - 2.0 * h;
            let d3 = p.b3 + h * (h + p.b2 - cr(1.0));
            let new = InceGsweParams::new(p.b1, d2, d3, p.z0, p.q)?;
            Ok(TransformResult {
                rule,
                new_params: EquationParams::InceGswe(new),
                arg_map: ArgMap::Identity,
                pow_z: cr(0.0),
                pow_z_minus_z0: cr(1.0) - p.b2 - h,
                exp_inv_z: cr(0.0),
            })
        }
        (Rule::T3, EquationParams::InceGswe(p)) => {
            let new = InceGsweParams::new(
                -p.b1 - p.b2 * p.z0,
                p.b2,
                p.b3 - p.q * p.z0,
                p.z0,
                -p.q,
            )?;
            Ok(TransformResult {
                rule,
                new_params: EquationParams::InceGswe(new),
                arg_map: ArgMap::ReflectAtZ0,
                pow_z: cr(0.0),
                pow_z_minus_z0: cr(0.0),
                exp_inv_z: cr(0.0),
            })
        }
        (Rule::Tau, EquationParams::InceDche(p)) => {
            let new = InceDcheParams::new(
                -p.b1,
                cr(4.0) - p.b2,
                p.b3 + cr(2.0) - p.b2,
                p.q,
            )?;
            Ok(TransformResult {
                rule,
                new_params: EquationParams::InceDche(new),
                arg_map: ArgMap::Identity,
                pow_z: cr(2.0) - p.b2,
                pow_z_minus_z0: cr(0.0),
                exp_inv_z: p.b1,
            })
        }
        _ => Err(Error::RuleInapplicable(format!(
            "rule {rule:?} does not apply to {} parameters",
            params.kind_name()
        ))),
    }
}

/// Which Lemieux-Bose normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormKind {
    /// Identity variable, U = z^(-B2/2) e^(B1/(2z)) F(z).
    N1,
    /// z = rho^2, U = rho^((1-2B2)/2) e^(B1/(2 rho^2)) G(rho).
    N2,
    /// z = e^(lambda u), U = H exp(lambda (1-B2) u / 2 + (B1/2) e^(-lambda u)).
    N3,
}

/// Coefficient record of a normal form: the potential is
/// sum over (power, coeff) of coeff * v^power in the transformed variable.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    /// For N3, the free scale lambda.
    pub scale: Complex64,
    pub terms: Vec<(i32, Complex64)>,
}

impl NormalForm {
    /// Potential value at the transformed variable v (v = z, rho, or
    /// e^(lambda u) depending on the kind).
    pub fn potential(&self, v: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(p, c)| c * v.powi(p))
            .sum()
    }
}

/// The three Lemieux-Bose normal forms of the DCHE (or its Ince limit with
/// omega^2 = 0 and 2 eta omega = -q).
pub fn normal_form(
    kind: NormalFormKind,
    params: &EquationParams,
    n3_scale: Option<Complex64>,
) -> Result<NormalForm> {
    // collect (B1, B2, B3, omega^2 coefficient, -2 eta omega coefficient)
    let (b1, b2, b3, om2, m2eo) = match params {
        EquationParams::Dche(p) => (
            p.b1,
            p.b2,
            p.b3,
            p.omega * p.omega,
            -2.0 * p.eta * p.omega,
        ),
        // Ince limit: omega^2 = 0 and -2 eta omega = q.
        EquationParams::InceDche(p) => (p.b1, p.b2, p.b3, cr(0.0), p.q),
        _ => {
            return Err(Error::InvalidParams(
                "normal forms are defined for the DCHE family".into(),
            ))
        }
    };
    let lambda = n3_scale.unwrap_or_else(|| cr(1.0));
    if matches!(kind, NormalFormKind::N3) && lambda.norm() < TAU_ZERO {
        return Err(Error::InvalidParams("N3 scale must be nonzero".into()));
    }
    let terms = match kind {
        NormalFormKind::N1 => vec![
            (0, om2),
            (-1, m2eo),
            (-2, b3 - b2 * b2 / 4.0 + b2 / 2.0),
            (-3, b1 * (cr(1.0) - b2 / 2.0)),
            (-4, -b1 * b1 / 4.0),
        ],
        NormalFormKind::N2 => vec![
            (2, 4.0 * om2),
            (0, 4.0 * m2eo),
            (-2, 4.0 * (b3 - b2 * b2 / 4.0 + b2 / 2.0 - cr(3.0 / 16.0))),
            (-4, 4.0 * b1 * (cr(1.0) - b2 / 2.0)),
            (-6, -b1 * b1),
        ],
        NormalFormKind::N3 => {
            let l2 = lambda * lambda;
            let half = (cr(1.0) - b2) / 2.0;
            vec![
                (0, l2 * (b3 - half * half)),
                (-2, -l2 * b1 * b1 / 4.0),
                (-1, -l2 * b1 * (b2 / 2.0 - cr(1.0))),
                (1, l2 * m2eo),
                (2, l2 * om2),
            ]
        }
    };
    Ok(NormalForm { kind, scale: lambda, terms })
}

/// Substitution descriptor between U(z) and the normal-form function.
/// Returns the factor W(z) such that U(z) = W(z) * Fnf(v(z)).
pub fn normal_form_weight(kind: NormalFormKind, params: &EquationParams, z: Complex64, n3_scale: Option<Complex64>) -> Result<Complex64> {
    let (b1, b2) = match params {
        EquationParams::Dche(p) => (p.b1, p.b2),
        EquationParams::InceDche(p) => (p.b1, p.b2),
        _ => {
            return Err(Error::InvalidParams(
                "normal forms are defined for the DCHE family".into(),
            ))
        }
    };
    Ok(match kind {
        NormalFormKind::N1 => z.powc(-b2 / 2.0) * (b1 / (2.0 * z)).exp(),
        // z = rho^2: U = rho^((1-2B2)/2) e^(B1/(2z)) G(rho)
        NormalFormKind::N2 => {
            let rho = z.sqrt();
            rho.powc((cr(1.0) - 2.0 * b2) / 2.0) * (b1 / (2.0 * z)).exp()
        }
        // z = e^(lambda u): U = H exp(lambda (1-B2) u/2 + (B1/2) e^(-lambda u))
        NormalFormKind::N3 => {
            let lambda = n3_scale.unwrap_or_else(|| cr(1.0));
            let u = z.ln() / lambda;
            (lambda * (cr(1.0) - b2) * u / 2.0 + b1 / (2.0 * z)).exp()
        }
    })
}

/// Closed-form descriptor of a degenerate reduction.
#[derive(Debug, Clone)]
pub enum DegenerateReduction {
    /// y = -2 i omega z, U = e^(-y/2) y^alpha f(y) with f the confluent
    /// hypergeometric function M(a, b; y), alpha a root of
    /// alpha^2 - (1-B2) alpha + B3 = 0.
    ConfluentAtInfinity {
        alpha: Complex64,
        a: Complex64,
        b: Complex64,
        omega: Complex64,
    },
    /// y = B1/z, U = y^beta g(y) with g = M(beta, 2 beta + 2 - B2; y),
    /// beta a root of beta^2 - (B2-1) beta + B3 = 0.
    ConfluentAtOrigin {
        beta: Complex64,
        a: Complex64,
        b: Complex64,
        b1: Complex64,
    },
    /// xi = +-2i sqrt(q z), U = xi^(1-B2) T(xi) with T a modified Bessel
    /// function of order^2 = (1-B2)^2 - 4 B3.
    ModifiedBessel {
        order_squared: Complex64,
        b2: Complex64,
        q: Complex64,
    },
    /// z = e^y gives constant coefficients: U = z^mu with
    /// mu^2 + (B2-1) mu + B3 = 0.
    ConstantCoefficients { mu1: Complex64, mu2: Complex64 },
}

impl DegenerateReduction {
    /// Closed-form solution with analytic first and second derivatives
    /// (contiguous relations plus the basis functions' own equations).
    pub fn solution_d2(
        &self,
        z: Complex64,
        opts: &FnEvalOptions,
    ) -> Result<(Complex64, Complex64, Complex64)> {
        match self {
            DegenerateReduction::ConfluentAtInfinity { alpha, a, b, omega } => {
                let y = -2.0 * I * omega * z;
                let dydz = -2.0 * I * omega;
                let m0 = kummer_m(*a, *b, y, opts)?;
                let m1 = a / b * kummer_m(a + cr(1.0), b + cr(1.0), y, opts)?;
                let m2 = (*a * m0 - (b - y) * m1) / y;
                let g = (-y / 2.0).exp() * y.powc(*alpha);
                let l1 = -cr(0.5) + alpha / y;
                let l2 = l1 * l1 - alpha / (y * y);
                let u = g * m0;
                let du = g * (l1 * m0 + m1) * dydz;
                let ddu = g * (l2 * m0 + 2.0 * l1 * m1 + m2) * dydz * dydz;
                Ok((u, du, ddu))
            }
            DegenerateReduction::ConfluentAtOrigin { beta, a, b, b1 } => {
                let y = b1 / z;
                let yp = -y / z;
                let ypp = 2.0 * y / (z * z);
                let m0 = kummer_m(*a, *b, y, opts)?;
                let m1 = a / b * kummer_m(a + cr(1.0), b + cr(1.0), y, opts)?;
                let m2 = (*a * m0 - (b - y) * m1) / y;
                let g = y.powc(*beta);
                let l1 = beta / y;
                let l2 = l1 * l1 - beta / (y * y);
                let dy1 = g * (l1 * m0 + m1);
                let dy2 = g * (l2 * m0 + 2.0 * l1 * m1 + m2);
                Ok((g * m0, dy1 * yp, dy2 * yp * yp + dy1 * ypp))
            }
            DegenerateReduction::ModifiedBessel { order_squared, b2, q } => {
                let xi = 2.0 * I * (q * z).sqrt();
                let xip = xi / (2.0 * z);
                let xipp = -xi / (4.0 * z * z);
                let ord = order_squared.sqrt();
                let k0 = bessel_k(ord, xi, opts)?;
                let km = bessel_k(ord - cr(1.0), xi, opts)?;
                let kp = bessel_k(ord + cr(1.0), xi, opts)?;
                let k1 = -(km + kp) / 2.0;
                let k2 = -k1 / xi + (cr(1.0) + ord * ord / (xi * xi)) * k0;
                let e = cr(1.0) - b2;
                let g = xi.powc(e);
                let l1 = e / xi;
                let l2 = l1 * l1 - e / (xi * xi);
                let d1 = g * (l1 * k0 + k1);
                let d2 = g * (l2 * k0 + 2.0 * l1 * k1 + k2);
                Ok((g * k0, d1 * xip, d2 * xip * xip + d1 * xipp))
            }
            DegenerateReduction::ConstantCoefficients { mu1, .. } => {
                let u = z.powc(*mu1);
                Ok((u, mu1 * u / z, mu1 * (mu1 - cr(1.0)) * u / (z * z)))
            }
        }
    }

    /// One closed-form solution of the degenerate equation.
    pub fn solution(&self, z: Complex64, opts: &FnEvalOptions) -> Result<Complex64> {
        match self {
            DegenerateReduction::ConfluentAtInfinity { alpha, a, b, omega } => {
                let y = -2.0 * I * omega * z;
                Ok((-y / 2.0).exp() * y.powc(*alpha) * kummer_m(*a, *b, y, opts)?)
            }
            DegenerateReduction::ConfluentAtOrigin { beta, a, b, b1 } => {
                let y = b1 / z;
                Ok(y.powc(*beta) * kummer_m(*a, *b, y, opts)?)
            }
            DegenerateReduction::ModifiedBessel { order_squared, b2, q } => {
                let xi = 2.0 * I * (q * z).sqrt();
                let order = order_squared.sqrt();
                Ok(xi.powc(cr(1.0) - b2) * bessel_k(order, xi, opts)?)
            }
            DegenerateReduction::ConstantCoefficients { mu1, .. } => Ok(z.powc(*mu1)),
        }
    }
}

/// Reduce a degenerate DCHE (omega = 0 and/or B1 = 0) or degenerate
/// Ince-DCHE (q = 0 and/or B1 = 0), given raw coefficients.
pub fn degenerate_reduce_dche(
    b1: Complex64,
    b2: Complex64,
    b3: Complex64,
    eta: Complex64,
    omega: Complex64,
) -> Result<DegenerateReduction> {
    let b1_zero = b1.norm() < TAU_ZERO;
    let omega_zero = omega.norm() < TAU_ZERO;
    match (b1_zero, omega_zero) {
        (false, false) => Err(Error::NotDegenerate),
        (true, false) => {
            // alpha^2 - (1-B2) alpha + B3 = 0
            let disc = ((cr(1.0) - b2) * (cr(1.0) - b2) - 4.0 * b3).sqrt();
            let alpha = ((cr(1.0) - b2) + disc) / 2.0;
            Ok(DegenerateReduction::ConfluentAtInfinity {
                alpha,
                a: I * eta + alpha + b2 / 2.0,
                b: 2.0 * alpha + b2,
                omega,
            })
        }
        (false, true) => {
            // beta^2 - (B2-1) beta + B3 = 0
            let disc = ((b2 - cr(1.0)) * (b2 - cr(1.0)) - 4.0 * b3).sqrt();
            let beta = ((b2 - cr(1.0)) + disc) / 2.0;
            Ok(DegenerateReduction::ConfluentAtOrigin {
                beta,
                a: beta,
                b: 2.0 * beta + cr(2.0) - b2,
                b1,
            })
        }
        (true, true) => {
            // Euler equation: mu^2 + (B2-1) mu + B3 = 0
            let disc = ((b2 - cr(1.0)) * (b2 - cr(1.0)) - 4.0 * b3).sqrt();
            let mu1 = (-(b2 - cr(1.0)) + disc) / 2.0;
            let mu2 = (-(b2 - cr(1.0)) - disc) / 2.0;
            Ok(DegenerateReduction::ConstantCoefficients { mu1, mu2 })
        }
    }
}

/// Degenerate Ince-DCHE reductions (q = 0 and/or B1 = 0).
pub fn degenerate_reduce_ince_dche(
    b1: Complex64,
    b2: Complex64,
    b3: Complex64,
    q: Complex64,
) -> Result<DegenerateReduction> {
    let b1_zero = b1.norm() < TAU_ZERO;
    let q_zero = q.norm() < TAU_ZERO;
    match (b1_zero, q_zero) {
        (false, false) => Err(Error::NotDegenerate),
        // q = 0 is the DCHE with omega = 0.
        (false, true) => degenerate_reduce_dche(b1, b2, b3, cr(0.0), cr(0.0)),
        (true, false) => Ok(DegenerateReduction::ModifiedBessel {
            order_squared: (cr(1.0) - b2) * (cr(1.0) - b2) - 4.0 * b3,
            b2,
            q,
        }),
        (true, true) => degenerate_reduce_dche(cr(0.0), b2, b3, cr(0.0), cr(0.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::DcheParams;
    use crate::util::c64;

    fn ig() -> EquationParams {
        EquationParams::InceGswe(
            InceGsweParams::new(c64(0.4, 0.1), c64(1.3, -0.2), c64(-0.3, 0.2), cr(1.0), cr(0.8))
                .unwrap(),
        )
    }

    #[test]
    fn t1_printed_maps() {
        // C1 = -B1 - 2 z0, C2 = 2 + B2 + 2 B1/z0
        let r = apply_rule(Rule::T1, &ig()).unwrap();
        if let EquationParams::InceGswe(p) = r.new_params {
            assert!((p.b1 - (-c64(0.4, 0.1) - cr(2.0))).norm() < 1e-15);
            assert!((p.b2 - (cr(2.0) + c64(1.3, -0.2) + 2.0 * c64(0.4, 0.1))).norm() < 1e-15);
        } else {
            panic!("kind changed");
        }
    }

    #[test]
    fn rules_are_involutions() {
        for rule in [Rule::T1, Rule::T2, Rule::T3] {
            let once = apply_rule(rule, &ig()).unwrap();
            let twice = apply_rule(rule, &once.new_params).unwrap();
            let (orig, back) = match (&ig(), &twice.new_params) {
                (EquationParams::InceGswe(a), EquationParams::InceGswe(b)) => (*a, *b),
                _ => panic!(),
            };
            assert!((orig.b1 - back.b1).norm() < 1e-13, "{rule:?} b1");
            assert!((orig.b2 - back.b2).norm() < 1e-13, "{rule:?} b2");
            assert!((orig.b3 - back.b3).norm() < 1e-13, "{rule:?} b3");
            assert!((orig.q - back.q).norm() < 1e-13, "{rule:?} q");
        }
        // tau on the Ince-DCHE
        let id = EquationParams::InceDche(
            InceDcheParams::new(c64(0.9, 0.3), c64(1.4, 0.1), c64(-0.2, 0.1), cr(0.7)).unwrap(),
        );
        let once = apply_rule(Rule::Tau, &id).unwrap();
        let twice = apply_rule(Rule::Tau, &once.new_params).unwrap();
        let (orig, back) = match (&id, &twice.new_params) {
            (EquationParams::InceDche(a), EquationParams::InceDche(b)) => (*a, *b),
            _ => panic!(),
        };
        assert!((orig.b1 - back.b1).norm() < 1e-14);
        assert!((orig.b2 - back.b2).norm() < 1e-14);
        assert!((orig.b3 - back.b3).norm() < 1e-14);
    }

    #[test]
    fn t3_reflects_argument_and_flips_q() {
        let r = apply_rule(Rule::T3, &ig()).unwrap();
        if let EquationParams::InceGswe(p) = r.new_params {
            assert!((p.q - cr(-0.8)).norm() < 1e-15);
            assert!((p.b3 - (c64(-0.3, 0.2) - cr(0.8))).norm() < 1e-15);
        } else {
            panic!();
        }
        assert_eq!(r.arg_map, ArgMap::ReflectAtZ0);
        assert!((r.map_arg(cr(0.3)) - cr(0.7)).norm() < 1e-15);
    }

    #[test]
    fn normal_form_printed_coefficients() {
        let dche = EquationParams::Dche(
            DcheParams::new(c64(0.5, 0.2), c64(1.2, -0.1), c64(0.3, 0.4), cr(0.6), cr(1.1))
                .unwrap(),
        );
        let (b1, b2, b3) = (c64(0.5, 0.2), c64(1.2, -0.1), c64(0.3, 0.4));
        // N1 z^-4 coefficient is -B1^2/4
        let n1 = normal_form(NormalFormKind::N1, &dche, None).unwrap();
        let c4 = n1.terms.iter().find(|(p, _)| *p == -4).unwrap().1;
        assert!((c4 - (-b1 * b1 / 4.0)).norm() < 1e-15);
        // N2 rho^-2 coefficient is 4(B3 - B2^2/4 + B2/2 - 3/16)
        let n2 = normal_form(NormalFormKind::N2, &dche, None).unwrap();
        let c2 = n2.terms.iter().find(|(p, _)| *p == -2).unwrap().1;
        assert!((c2 - 4.0 * (b3 - b2 * b2 / 4.0 + b2 / 2.0 - cr(3.0 / 16.0))).norm() < 1e-15);
        // N3 constant term lambda^2 (B3 - ((1-B2)/2)^2), lambda = 1
        let n3 = normal_form(NormalFormKind::N3, &dche, None).unwrap();
        let c0 = n3.terms.iter().find(|(p, _)| *p == 0).unwrap().1;
        let half = (cr(1.0) - b2) / 2.0;
        assert!((c0 - (b3 - half * half)).norm() < 1e-15);
    }

    #[test]
    fn normal_form_round_trip() {
        // U -> G -> U reproduces values: weight(z) * (U(z)/weight(z)).
        let id = EquationParams::InceDche(
            InceDcheParams::new(c64(0.9, 0.3), c64(1.4, 0.1), c64(-0.2, 0.1), cr(0.7)).unwrap(),
        );
        let z = c64(1.3, 0.4);
        for kind in [NormalFormKind::N1, NormalFormKind::N2, NormalFormKind::N3] {
            let w = normal_form_weight(kind, &id, z, None).unwrap();
            let u = c64(0.37, -0.91); // arbitrary function value
            let g = u / w;
            assert!(((w * g) - u).norm() < 1e-13 * u.norm());
        }
    }

    #[test]
    fn degenerate_bessel_order_relation() {
        // Ince-DCHE with B1 = 0: order^2 = (1-B2)^2 - 4 B3 exactly.
        let (b2, b3) = (c64(0.7, 0.1), c64(0.3, -0.2));
        let r = degenerate_reduce_ince_dche(cr(0.0), b2, b3, cr(1.0)).unwrap();
        match r {
            DegenerateReduction::ModifiedBessel { order_squared, .. } => {
                assert!((order_squared - ((cr(1.0) - b2) * (cr(1.0) - b2) - 4.0 * b3)).norm()
                    < 1e-15);
            }
            _ => panic!("expected Bessel reduction"),
        }
    }

    #[test]
    fn degenerate_alpha_quadratic() {
        // B2 = 1, B3 = 0: alpha^2 = 0 -> alpha = 0 (double root).
        let r = degenerate_reduce_dche(cr(0.0), cr(1.0), cr(0.0), cr(0.2), cr(1.0)).unwrap();
        match r {
            DegenerateReduction::ConfluentAtInfinity { alpha, .. } => {
                assert!(alpha.norm() < 1e-15);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn not_degenerate_rejected() {
        assert!(matches!(
            degenerate_reduce_dche(cr(1.0), cr(0.5), cr(0.1), cr(0.2), cr(1.0)),
            Err(Error::NotDegenerate)
        ));
    }

    #[test]
    fn degenerate_solutions_satisfy_their_equations() {
        let opts = FnEvalOptions::default();
        // Ince-DCHE, B1 = 0, q != 0: Bessel reduction against the actual
        // z^2 U'' + B2 z U' + (B3 + q z) U = 0 coefficients. Build the
        // equation evaluators directly since the strict params type forbids
        // B1 = 0.
        let (b2, b3, q) = (c64(0.7, 0.1), c64(0.3, -0.2), cr(1.0));
        let red = degenerate_reduce_ince_dche(cr(0.0), b2, b3, q).unwrap();
        let f = |z: Complex64, _: Complex64| red.solution(z, &opts);
        let grid: Vec<Complex64> = (0..12)
            .map(|k| Complex64::from_polar(0.8 + 0.15 * k as f64, 0.5 + 0.1 * k as f64))
            .collect();
        // residual via a small local implementation of the reduced equation
        let mut worst: f64 = 0.0;
        for &z in &grid {
            let (u, du, ddu) = crate::verify::differentiate(&f, z).unwrap();
            let r = z * z * ddu + b2 * z * du + (b3 + q * z) * u;
            let scale = (z * z * ddu)
                .norm()
                .max((b2 * z * du).norm())
                .max(((b3 + q * z) * u).norm());
            worst = worst.max(r.norm() / scale);
        }
        assert!(worst < 1e-9, "Bessel reduction residual {worst}");

        // DCHE, B1 = 0, omega != 0: confluent reduction.
        let (b2, b3, eta, omega) = (c64(0.9, 0.0), c64(0.2, 0.1), cr(0.3), cr(1.1));
        let red = degenerate_reduce_dche(cr(0.0), b2, b3, eta, omega).unwrap();
        let g = |z: Complex64, _: Complex64| red.solution(z, &opts);
        let mut worst: f64 = 0.0;
        for &z in &grid {
            let (u, du, ddu) = crate::verify::differentiate(&g, z).unwrap();
            let r = z * z * ddu
                + b2 * z * du
                + (b3 - 2.0 * eta * omega * z + omega * omega * z * z) * u;
            let scale = (z * z * ddu).norm().max(
                ((b3 - 2.0 * eta * omega * z + omega * omega * z * z) * u).norm(),
            );
            worst = worst.max(r.norm() / scale);
        }
        assert!(worst < 1e-9, "confluent reduction residual {worst}");
    }
}
