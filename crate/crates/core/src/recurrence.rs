//! Three-term recurrence machinery: the coefficient families of every
//! solution pair, infinite continued fractions, characteristic equations
//! (two-sided and truncated), root solving for the phase parameter or a free
//! equation parameter, and minimal-solution coefficient windows by backward
//! recurrence.

use num_complex::Complex64;

use crate::equations::{DcheParams, InceDcheParams, InceGsweParams};
use crate::error::{Error, Result};
use crate::tol::{
    CF_GUARD, DELTA_NU, K_MAX_CF, TAU_CF, TAU_ROOT, TAU_ZERO, WINDOW_CAP_ONE_SIDED,
    WINDOW_CAP_TWO_SIDED,
};
use crate::util::{cdiv, cr, dist_to_half_integer_lattice};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Identifies one coefficient family (one solution pair's recurrence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Ince-GSWE first pair with phase parameter.
    IgNu1,
    /// Ince-GSWE second pair with phase parameter.
    IgNu2,
    /// Ince-GSWE truncated pair 1.
    IgT1,
    /// Ince-GSWE truncated pair 2.
    IgT2,
    /// Ince-GSWE truncated pair 3.
    IgT3,
    /// Ince-GSWE truncated pair 4.
    IgT4,
    /// Ince-DCHE first pair with phase parameter.
    IdNu1,
    /// Ince-DCHE second pair with phase parameter.
    IdNu2,
    /// Ince-DCHE truncated pair 1.
    IdT1,
    /// Ince-DCHE truncated pair 2.
    IdT2,
    /// DCHE with B2 = 2 (both pairs share these coefficients).
    DcheB2Eq2,
    /// Mathieu two-sided even family (the odd family shares it after the
    /// (2n+2nu+1) coefficient map).
    MathieuEvenNu,
    /// Mathieu truncated even family, period pi.
    MathieuW1,
    /// Mathieu truncated even family, period 2pi.
    MathieuW2,
    /// Mathieu truncated odd family, period pi.
    MathieuW3,
    /// Mathieu truncated odd family, period 2pi.
    MathieuW4,
}

impl FamilyId {
    pub fn is_two_sided(&self) -> bool {
        matches!(
            self,
            FamilyId::IgNu1
                | FamilyId::IgNu2
                | FamilyId::IdNu1
                | FamilyId::IdNu2
                | FamilyId::DcheB2Eq2
                | FamilyId::MathieuEvenNu
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::IgNu1 => "ince-gswe-nu-1",
            FamilyId::IgNu2 => "ince-gswe-nu-2",
            FamilyId::IgT1 => "ince-gswe-t1",
            FamilyId::IgT2 => "ince-gswe-t2",
            FamilyId::IgT3 => "ince-gswe-t3",
            FamilyId::IgT4 => "ince-gswe-t4",
            FamilyId::IdNu1 => "ince-dche-nu-1",
            FamilyId::IdNu2 => "ince-dche-nu-2",
            FamilyId::IdT1 => "ince-dche-t1",
            FamilyId::IdT2 => "ince-dche-t2",
            FamilyId::DcheB2Eq2 => "dche-b2eq2",
            FamilyId::MathieuEvenNu => "mathieu-even-nu",
            FamilyId::MathieuW1 => "mathieu-w1",
            FamilyId::MathieuW2 => "mathieu-w2",
            FamilyId::MathieuW3 => "mathieu-w3",
            FamilyId::MathieuW4 => "mathieu-w4",
        }
    }
}

/// Parameters backing a family's coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParams {
    InceGswe(InceGsweParams),
    InceDche(InceDcheParams),
    Dche(DcheParams),
    /// Mathieu trig-series coefficients need only q and the characteristic
    /// value a = 2q - 4 B3.
    Mathieu { q: Complex64, a: Complex64 },
}

/// A named coefficient provider for one solution pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceFamily {
    pub id: FamilyId,
    pub params: FamilyParams,
}

/// The three truncated-recurrence head shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationForm {
    /// alpha_{-1} = 0: plain head alpha_0 b_1 + beta_0 b_0 = 0.
    F1,
    /// alpha_{-1} folded into the gamma_1 slot of the n = 1 equation.
    F2,
    /// alpha_{-1} folded into beta_0 in the head equation.
    F3,
}

impl RecurrenceFamily {
    pub fn new(id: FamilyId, params: FamilyParams) -> Result<Self> {
        let ok = matches!(
            (id, &params),
            (
                FamilyId::IgNu1
                    | FamilyId::IgNu2
                    | FamilyId::IgT1
                    | FamilyId::IgT2
                    | FamilyId::IgT3
                    | FamilyId::IgT4,
                FamilyParams::InceGswe(_)
            ) | (
                FamilyId::IdNu1 | FamilyId::IdNu2 | FamilyId::IdT1 | FamilyId::IdT2,
                FamilyParams::InceDche(_)
            ) | (FamilyId::DcheB2Eq2, FamilyParams::Dche(_))
                | (
                    FamilyId::MathieuEvenNu
                        | FamilyId::MathieuW1
                        | FamilyId::MathieuW2
                        | FamilyId::MathieuW3
                        | FamilyId::MathieuW4,
                    FamilyParams::Mathieu { .. }
                )
        );
        if !ok {
            return Err(Error::InvalidParams(format!(
                "family {} does not accept these parameters",
                id.name()
            )));
        }
        if id == FamilyId::DcheB2Eq2 {
            if let FamilyParams::Dche(p) = &params {
                if (p.b2 - cr(2.0)).norm() > TAU_ZERO {
                    return Err(Error::InvalidParams(
                        "dche-b2eq2 requires B2 = 2 exactly".into(),
                    ));
                }
            }
        }
        Ok(RecurrenceFamily { id, params })
    }

    /// The fixed phase parameter of a truncated family, in terms of the
    /// equation parameters.
    pub fn fixed_nu(&self) -> Option<Complex64> {
        match (self.id, &self.params) {
            (FamilyId::IgT1, FamilyParams::InceGswe(p)) => Some(p.b2 / 2.0 - cr(1.0)),
            (FamilyId::IgT2, FamilyParams::InceGswe(p)) => Some(p.b2 / 2.0 + p.h()),
            (FamilyId::IgT3, FamilyParams::InceGswe(p)) => Some(cr(1.0) - p.b2 / 2.0),
            (FamilyId::IgT4, FamilyParams::InceGswe(p)) => Some(-p.b2 / 2.0 - p.h()),
            (FamilyId::IdT1, FamilyParams::InceDche(p)) => Some(p.b2 / 2.0 - cr(1.0)),
            (FamilyId::IdT2, FamilyParams::InceDche(p)) => Some(cr(1.0) - p.b2 / 2.0),
            (FamilyId::MathieuW1, _) => Some(cr(-0.5)),
            (FamilyId::MathieuW2, _) => Some(cr(0.0)),
            (FamilyId::MathieuW3, _) => Some(cr(0.5)),
            (FamilyId::MathieuW4, _) => Some(cr(0.0)),
            _ => None,
        }
    }

    /// (alpha_n, beta_n, gamma_n). `nu` enters the two-sided families only;
    /// the truncated families carry their nu inside the printed expressions.
    pub fn triple(&self, n: i64, nu: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        let nf = n as f64;
        match (self.id, &self.params) {
            (FamilyId::IgNu1, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let w = cr(nf) + nu;
                check_denoms(n, &[w + cr(1.0), w + cr(1.5), w, w - cr(0.5)])?;
                let alpha = qz0 * (w + cr(2.0) - s) * (w + cr(1.0) - s - h)
                    / ((w + cr(1.0)) * (w + cr(1.5)));
                let beta = 4.0 * p.b3 - 2.0 * qz0
                    + 4.0 * (w + cr(1.0) - s) * (w + s)
                    - 2.0 * qz0 * (s - cr(1.0)) * (s + h) / (w * (w + cr(1.0)));
                let gamma = qz0 * (w + s - cr(1.0)) * (w + s + h) / ((w - cr(0.5)) * w);
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IgNu2, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let w = cr(nf) + nu;
                check_denoms(n, &[w + cr(1.0), w + cr(1.5), w, w - cr(0.5)])?;
                let alpha =
                    qz0 * (w + s) * (w + cr(1.0) + s + h) / ((w + cr(1.0)) * (w + cr(1.5)));
                let beta = 4.0 * p.b3 - 2.0 * qz0
                    + 4.0 * (w + cr(1.0) - s) * (w + s)
                    - 2.0 * qz0 * (s - cr(1.0)) * (s + h) / (w * (w + cr(1.0)));
                let gamma = qz0 * (w + cr(1.0) - s) * (w - s - h) / ((w - cr(0.5)) * w);
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IgT1, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let m = cr(nf);
                check_denoms(n, &[s, m + s, m + s + cr(0.5)])?;
                let alpha = qz0 * (m + cr(1.0)) * (m - h) / ((m + s) * (m + s + cr(0.5)));
                // At n = 0 and n = 1 one linear factor cancels exactly;
                // keeping the reduced forms makes the printed exceptional
                // cases B2 = 1, 2 regular.
                let beta = if n == 0 {
                    4.0 * p.b3 - 2.0 * qz0 - 2.0 * qz0 * (s + h) / s
                } else {
                    check_denoms(n, &[m + s - cr(1.0)])?;
                    4.0 * p.b3 - 2.0 * qz0
                        + 4.0 * m * (m + p.b2 - cr(1.0))
                        - 2.0 * qz0 * (s - cr(1.0)) * (s + h) / ((m + s - cr(1.0)) * (m + s))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    2.0 * qz0 * (p.b2 + h) / s
                } else {
                    check_denoms(n, &[m + s - cr(1.0), m + s - cr(1.5)])?;
                    qz0 * (m + p.b2 - cr(2.0)) * (m + p.b2 + h - cr(1.0))
                        / ((m + s - cr(1.5)) * (m + s - cr(1.0)))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IgT2, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let rho = s + h;
                let m = cr(nf);
                check_denoms(n, &[cr(1.0) + rho, m + cr(1.0) + rho, m + cr(1.5) + rho])?;
                let alpha = qz0 * (m + cr(1.0)) * (m + cr(2.0) + h)
                    / ((m + cr(1.0) + rho) * (m + cr(1.5) + rho));
                let beta = if n == 0 {
                    4.0 * p.b3 - 2.0 * qz0 + 4.0 * (cr(1.0) + h) * (p.b2 + h)
                        - 2.0 * qz0 * (s - cr(1.0)) / (cr(1.0) + rho)
                } else {
                    check_denoms(n, &[m + rho])?;
                    4.0 * p.b3 - 2.0 * qz0
                        + 4.0 * (m + cr(1.0) + h) * (m + p.b2 + h)
                        - 2.0 * qz0 * (s - cr(1.0)) * (s + h)
                            / ((m + rho) * (m + cr(1.0) + rho))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    2.0 * qz0 * (p.b2 + h) / (cr(1.0) + rho)
                } else {
                    check_denoms(n, &[m + rho, m - cr(0.5) + rho])?;
                    qz0 * (m + p.b2 + h - cr(1.0)) * (m + p.b2 + 2.0 * h)
                        / ((m - cr(0.5) + rho) * (m + rho))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IgT3, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let m = cr(nf);
                check_denoms(n, &[cr(2.0) - s, m + cr(2.0) - s, m + cr(2.5) - s])?;
                let alpha = qz0 * (m + cr(1.0)) * (m + cr(2.0) + h)
                    / ((m + cr(2.0) - s) * (m + cr(2.5) - s));
                let beta = if n == 0 {
                    4.0 * p.b3 - 2.0 * qz0 + 4.0 * (cr(2.0) - p.b2)
                        + 2.0 * qz0 * (s + h) / (cr(2.0) - s)
                } else {
                    check_denoms(n, &[m + cr(1.0) - s])?;
                    4.0 * p.b3 - 2.0 * qz0
                        + 4.0 * (m + cr(1.0)) * (m + cr(2.0) - p.b2)
                        - 2.0 * qz0 * (s - cr(1.0)) * (s + h)
                            / ((m + cr(1.0) - s) * (m + cr(2.0) - s))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    2.0 * qz0 * (cr(2.0) - p.b2 - h) / (cr(2.0) - s)
                } else {
                    check_denoms(n, &[m + cr(1.0) - s, m + cr(0.5) - s])?;
                    qz0 * (m + cr(2.0) - p.b2) * (m + cr(1.0) - p.b2 - h)
                        / ((m + cr(0.5) - s) * (m + cr(1.0) - s))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IgT4, FamilyParams::InceGswe(p)) => {
                let (qz0, h, s) = (p.q * p.z0, p.h(), p.b2 / 2.0);
                let rho = s + h;
                let m = cr(nf);
                check_denoms(n, &[cr(1.0) - rho, m + cr(1.0) - rho, m + cr(1.5) - rho])?;
                let alpha = qz0 * (m + cr(1.0)) * (m - h)
                    / ((m + cr(1.0) - rho) * (m + cr(1.5) - rho));
                let beta = if n == 0 {
                    4.0 * p.b3 - 2.0 * qz0 + 4.0 * (-h) * (cr(1.0) - p.b2 - h)
                        + 2.0 * qz0 * (s - cr(1.0)) / (cr(1.0) - rho)
                } else {
                    check_denoms(n, &[m - rho])?;
                    4.0 * p.b3 - 2.0 * qz0
                        + 4.0 * (m - h) * (m - p.b2 + cr(1.0) - h)
                        - 2.0 * qz0 * (s - cr(1.0)) * (s + h)
                            / ((m - rho) * (m + cr(1.0) - rho))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    2.0 * qz0 * (cr(2.0) - p.b2 - h) / (cr(1.0) - rho)
                } else {
                    check_denoms(n, &[m - rho, m - cr(0.5) - rho])?;
                    qz0 * (m + cr(1.0) - p.b2 - h) * (m - p.b2 - 2.0 * h)
                        / ((m - cr(0.5) - rho) * (m - rho))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IdNu1, FamilyParams::InceDche(p)) => {
                let (qb1, s) = (p.q * p.b1, p.b2 / 2.0);
                let w = cr(nf) + nu;
                check_denoms(n, &[w + cr(1.0), w + cr(1.5), w, w - cr(0.5)])?;
                let alpha = -qb1 * (w + cr(2.0) - s) / ((w + cr(1.0)) * (w + cr(1.5)));
                let beta = 4.0 * p.b3 + 4.0 * (w + cr(1.0) - s) * (w + s)
                    - qb1 * (p.b2 - cr(2.0)) / (w * (w + cr(1.0)));
                let gamma = qb1 * (w + s - cr(1.0)) / ((w - cr(0.5)) * w);
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IdNu2, FamilyParams::InceDche(p)) => {
                let (qb1, s) = (p.q * p.b1, p.b2 / 2.0);
                let w = cr(nf) + nu;
                check_denoms(n, &[w + cr(1.0), w + cr(1.5), w, w - cr(0.5)])?;
                let alpha = qb1 * (w + s) / ((w + cr(1.0)) * (w + cr(1.5)));
                let beta = 4.0 * p.b3 + 4.0 * (w + cr(1.0) - s) * (w + s)
                    - qb1 * (p.b2 - cr(2.0)) / (w * (w + cr(1.0)));
                let gamma = -qb1 * (w + cr(1.0) - s) / ((w - cr(0.5)) * w);
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IdT1, FamilyParams::InceDche(p)) => {
                let (qb1, s) = (p.q * p.b1, p.b2 / 2.0);
                let m = cr(nf);
                check_denoms(n, &[s, m + s, m + s + cr(0.5)])?;
                let alpha = -qb1 * (m + cr(1.0)) / ((m + s) * (m + s + cr(0.5)));
                let beta = if n == 0 {
                    4.0 * p.b3 - 2.0 * qb1 / s
                } else {
                    check_denoms(n, &[m + s - cr(1.0)])?;
                    4.0 * p.b3 + 4.0 * m * (m + p.b2 - cr(1.0))
                        - qb1 * (p.b2 - cr(2.0)) / ((m + s - cr(1.0)) * (m + s))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    2.0 * qb1 / s
                } else {
                    check_denoms(n, &[m + s - cr(1.0), m + s - cr(1.5)])?;
                    qb1 * (m + p.b2 - cr(2.0)) / ((m + s - cr(1.5)) * (m + s - cr(1.0)))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::IdT2, FamilyParams::InceDche(p)) => {
                let (qb1, s) = (p.q * p.b1, p.b2 / 2.0);
                let m = cr(nf);
                check_denoms(n, &[cr(2.0) - s, m + cr(2.0) - s, m + cr(2.5) - s])?;
                let alpha = qb1 * (m + cr(1.0)) / ((m + cr(2.0) - s) * (m + cr(2.5) - s));
                let beta = if n == 0 {
                    4.0 * p.b3 + 4.0 * (cr(2.0) - p.b2) + 2.0 * qb1 / (cr(2.0) - s)
                } else {
                    check_denoms(n, &[m + cr(1.0) - s])?;
                    4.0 * p.b3 + 4.0 * (m + cr(1.0)) * (m + cr(2.0) - p.b2)
                        - qb1 * (p.b2 - cr(2.0)) / ((m + cr(1.0) - s) * (m + cr(2.0) - s))
                };
                let gamma = if n <= 0 {
                    cr(0.0)
                } else if n == 1 {
                    -2.0 * qb1 / (cr(2.0) - s)
                } else {
                    check_denoms(n, &[m + cr(1.0) - s, m + cr(0.5) - s])?;
                    -qb1 * (m + cr(2.0) - p.b2) / ((m + cr(0.5) - s) * (m + cr(1.0) - s))
                };
                Ok((alpha, beta, gamma))
            }
            (FamilyId::DcheB2Eq2, FamilyParams::Dche(p)) => {
                let w = cr(nf) + nu;
                check_denoms(n, &[2.0 * w + cr(3.0), 2.0 * w - cr(1.0)])?;
                let alpha = I * p.omega * p.b1 * (w + cr(1.0) - I * p.eta) / (2.0 * w + cr(3.0));
                let beta = p.b3 + w * (w + cr(1.0));
                let gamma = I * p.omega * p.b1 * (w + I * p.eta) / (2.0 * w - cr(1.0));
                Ok((alpha, beta, gamma))
            }
            (FamilyId::MathieuEvenNu, FamilyParams::Mathieu { q, a }) => {
                let w = cr(nf) + nu;
                let lam = 2.0 * w + cr(1.0);
                Ok((*q, lam * lam - a, *q))
            }
            (FamilyId::MathieuW1, FamilyParams::Mathieu { q, a }) => {
                // second head equation carries [alpha_{-1} + gamma_1] = 2q
                let g = match n {
                    n if n <= 0 => cr(0.0),
                    1 => 2.0 * q,
                    _ => *q,
                };
                Ok((*q, cr(4.0 * nf * nf) - a, g))
            }
            (FamilyId::MathieuW2, FamilyParams::Mathieu { q, a }) => {
                // head carries beta_0 + alpha_{-1} = q + 1 - a
                let lam = 2.0 * nf + 1.0;
                let b = if n == 0 { q + cr(1.0) - a } else { cr(lam * lam) - a };
                let g = if n <= 0 { cr(0.0) } else { *q };
                Ok((*q, b, g))
            }
            (FamilyId::MathieuW4, FamilyParams::Mathieu { q, a }) => {
                // head carries beta_0 + alpha_{-1} = 1 - q - a
                let lam = 2.0 * nf + 1.0;
                let b = if n == 0 { cr(1.0) - q - a } else { cr(lam * lam) - a };
                let g = if n <= 0 { cr(0.0) } else { *q };
                Ok((*q, b, g))
            }
            (FamilyId::MathieuW3, FamilyParams::Mathieu { q, a }) => {
                let lam = 2.0 * (nf + 1.0);
                let g = if n <= 0 { cr(0.0) } else { *q };
                Ok((*q, cr(lam * lam) - a, g))
            }
            _ => Err(Error::InvalidParams(format!(
                "family {} / parameter mismatch",
                self.id.name()
            ))),
        }
    }

    /// Head-equation shape of a truncated family for these parameters.
    pub fn truncation_form(&self) -> Result<TruncationForm> {
        let near = |x: Complex64, v: f64| (x - cr(v)).norm() < TAU_ZERO;
        match (self.id, &self.params) {
            (FamilyId::IgT1, FamilyParams::InceGswe(p)) => Ok(if near(p.b2, 1.0) {
                TruncationForm::F2
            } else if near(p.b2, 2.0) {
                TruncationForm::F3
            } else {
                TruncationForm::F1
            }),
            (FamilyId::IgT2, FamilyParams::InceGswe(p)) => {
                let rho = p.b2 / 2.0 + p.h();
                Ok(if near(rho, -0.5) {
                    TruncationForm::F2
                } else if near(rho, 0.0) {
                    TruncationForm::F3
                } else {
                    TruncationForm::F1
                })
            }
            (FamilyId::IgT3, FamilyParams::InceGswe(p)) => Ok(if near(p.b2, 3.0) {
                TruncationForm::F2
            } else if near(p.b2, 2.0) {
                TruncationForm::F3
            } else {
                TruncationForm::F1
            }),
            (FamilyId::IgT4, FamilyParams::InceGswe(p)) => {
                let rho = p.b2 / 2.0 + p.h();
                Ok(if near(rho, 0.5) {
                    TruncationForm::F2
                } else if near(rho, 0.0) {
                    TruncationForm::F3
                } else {
                    TruncationForm::F1
                })
            }
            (FamilyId::IdT1, FamilyParams::InceDche(p)) => Ok(if near(p.b2, 1.0) {
                TruncationForm::F2
            } else if near(p.b2, 2.0) {
                TruncationForm::F3
            } else {
                TruncationForm::F1
            }),
            (FamilyId::IdT2, FamilyParams::InceDche(p)) => Ok(if near(p.b2, 3.0) {
                TruncationForm::F2
            } else if near(p.b2, 2.0) {
                TruncationForm::F3
            } else {
                TruncationForm::F1
            }),
            (FamilyId::MathieuW1, _) => Ok(TruncationForm::F2),
            (FamilyId::MathieuW2, _) => Ok(TruncationForm::F3),
            (FamilyId::MathieuW3, _) => Ok(TruncationForm::F1),
            (FamilyId::MathieuW4, _) => Ok(TruncationForm::F3),
            _ => Err(Error::InvalidParams(format!(
                "{} is not a truncated family",
                self.id.name()
            ))),
        }
    }

    /// Algebraic limit of alpha_{-1} at the exceptional parameter value that
    /// the F2/F3 head equations fold into gamma_1 or beta_0. Zero for F1.
    /// The stored beta_0/gamma_1 rows already contain this fold (they are the
    /// reduced forms, continuous across the exceptional values); this value
    /// is exposed for reporting and cross-checks.
    pub fn alpha_m1_fold(&self) -> Result<Complex64> {
        let form = self.truncation_form()?;
        if form == TruncationForm::F1 {
            return Ok(cr(0.0));
        }
        Ok(match (self.id, &self.params) {
            (FamilyId::IgT1, FamilyParams::InceGswe(p)) => {
                let v = 2.0 * p.q * p.z0 * (cr(1.0) + p.h());
                if form == TruncationForm::F2 {
                    v
                } else {
                    -v
                }
            }
            (FamilyId::IgT2, FamilyParams::InceGswe(p)) => {
                let v = 2.0 * p.q * p.z0 * (cr(1.0) + p.h());
                if form == TruncationForm::F2 {
                    -v
                } else {
                    v
                }
            }
            (FamilyId::IgT3, FamilyParams::InceGswe(p)) => {
                let v = 2.0 * p.q * p.z0 * (cr(1.0) + p.h());
                if form == TruncationForm::F2 {
                    -v
                } else {
                    v
                }
            }
            (FamilyId::IgT4, FamilyParams::InceGswe(p)) => {
                let v = 2.0 * p.q * p.z0 * (cr(1.0) + p.h());
                if form == TruncationForm::F2 {
                    v
                } else {
                    -v
                }
            }
            (FamilyId::IdT1, FamilyParams::InceDche(p)) => {
                let v = 2.0 * p.q * p.b1;
                if form == TruncationForm::F2 {
                    v
                } else {
                    -v
                }
            }
            (FamilyId::IdT2, FamilyParams::InceDche(p)) => {
                let v = 2.0 * p.q * p.b1;
                if form == TruncationForm::F2 {
                    -v
                } else {
                    v
                }
            }
            (FamilyId::MathieuW1, FamilyParams::Mathieu { q, .. }) => *q,
            (FamilyId::MathieuW2, FamilyParams::Mathieu { q, .. }) => *q,
            (FamilyId::MathieuW4, FamilyParams::Mathieu { q, .. }) => -*q,
            _ => unreachable!("truncation_form screened the family"),
        })
    }

    /// Predicted minimal-solution tail ratio b_{n+1}/b_n for large n
    /// (Perron-Kreuser dominant balance of the printed coefficients).
    pub fn predicted_tail_ratio(&self, n: i64) -> Complex64 {
        let nf = n as f64;
        let n2 = cr(4.0 * nf * nf);
        match (self.id, &self.params) {
            (_, FamilyParams::InceGswe(p)) => -p.q * p.z0 / n2,
            (_, FamilyParams::InceDche(p)) => -p.q * p.b1 / (n2 * cr(nf)),
            (_, FamilyParams::Dche(p)) => -I * p.omega * p.b1 / cr(2.0 * nf * nf),
            (_, FamilyParams::Mathieu { q, .. }) => -*q / n2,
        }
    }
}

fn check_denoms(n: i64, denoms: &[Complex64]) -> Result<()> {
    for d in denoms {
        if d.norm() < 1e-12 {
            return Err(Error::InadmissibleIndex {
                n,
                detail: "vanishing recurrence denominator".into(),
            });
        }
    }
    Ok(())
}

/// Convenience free function mirroring [`RecurrenceFamily::triple`].
pub fn family_coefficients(
    family: &RecurrenceFamily,
    n: i64,
    nu: Complex64,
) -> Result<(Complex64, Complex64, Complex64)> {
    family.triple(n, nu)
}

/// Detect the truncated head-equation shape for these parameters.
pub fn detect_truncation_form(family: &RecurrenceFamily) -> Result<TruncationForm> {
    family.truncation_form()
}

/// Evaluate a1/(b1 - a2/(b2 - a3/(b3 - ...))) by the modified forward (Lentz)
/// recurrence with tiny-value substitution. `terms(k)` yields (a_k, b_k) for
/// k >= 1.
pub fn continued_fraction<F>(mut terms: F, tol: f64, max_levels: usize) -> Result<Complex64>
where
    F: FnMut(usize) -> Result<(Complex64, Complex64)>,
{
    let tiny = Complex64::new(CF_GUARD, 0.0);
    let guard = |z: Complex64| if z.norm() < CF_GUARD { tiny } else { z };
    // b_0 = 0 start of the modified Lentz recurrence; the minus signs of the
    // fraction are folded into the partial numerators from level 2 on.
    let one = cr(1.0);
    let mut f = tiny;
    let mut c = tiny;
    let mut d = Complex64::new(0.0, 0.0);
    for k in 1..=max_levels {
        let (ak, bk) = terms(k)?;
        if k == 1 && ak.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let a = if k == 1 { ak } else { -ak };
        d = cdiv(one, guard(bk + a * d));
        c = guard(bk + cdiv(a, c));
        let delta = c * d;
        f *= delta;
        if k > 1 && (delta - cr(1.0)).norm() < tol {
            return Ok(f);
        }
    }
    Err(Error::NoConvergence(format!(
        "continued fraction did not settle in {max_levels} levels"
    )))
}

/// What the characteristic equation is solved for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Unknown {
    /// The phase parameter of a two-sided family.
    Nu,
    /// The free equation parameter B3 at fixed nu.
    B3 { fixed_nu: Complex64 },
    /// The Mathieu characteristic value a at fixed nu.
    MathieuA { fixed_nu: Complex64 },
}

/// The function f whose root enforces the characteristic equation.
#[derive(Debug, Clone, Copy)]
pub struct CharacteristicProblem {
    pub family: RecurrenceFamily,
    pub unknown: Unknown,
}

impl CharacteristicProblem {
    pub fn new(family: RecurrenceFamily, unknown: Unknown) -> Result<Self> {
        match unknown {
            Unknown::Nu if !family.id.is_two_sided() => Err(Error::InvalidParams(
                "truncated families have no free phase parameter".into(),
            )),
            Unknown::MathieuA { .. } if !matches!(family.params, FamilyParams::Mathieu { .. }) => {
                Err(Error::InvalidParams(
                    "MathieuA applies to Mathieu families only".into(),
                ))
            }
            _ => Ok(CharacteristicProblem { family, unknown }),
        }
    }

    /// Family with the unknown substituted by `x`, and the nu to use.
    pub fn instantiate(&self, x: Complex64) -> Result<(RecurrenceFamily, Complex64)> {
        match self.unknown {
            Unknown::Nu => {
                if dist_to_half_integer_lattice(x) < DELTA_NU {
                    return Err(Error::ForbiddenNu { nu: x });
                }
                Ok((self.family, x))
            }
            Unknown::B3 { fixed_nu } => {
                let mut fam = self.family;
                match &mut fam.params {
                    FamilyParams::InceGswe(p) => p.b3 = x,
                    FamilyParams::InceDche(p) => p.b3 = x,
                    FamilyParams::Dche(p) => p.b3 = x,
                    FamilyParams::Mathieu { .. } => {
                        return Err(Error::InvalidParams(
                            "Mathieu families are parameterized by a, not B3".into(),
                        ))
                    }
                }
                Ok((fam, fixed_nu))
            }
            Unknown::MathieuA { fixed_nu } => {
                let mut fam = self.family;
                if let FamilyParams::Mathieu { a, .. } = &mut fam.params {
                    *a = x;
                }
                Ok((fam, fixed_nu))
            }
        }
    }

    /// Characteristic residual f(x). Two-sided:
    /// f = beta_0 - CF_minus - CF_plus; truncated: head minus the tail
    /// continued fraction per the detected form.
    pub fn residual(&self, x: Complex64) -> Result<Complex64> {
        let (fam, nu) = self.instantiate(x)?;
        let (_, beta0, _) = fam.triple(0, nu)?;
        if fam.id.is_two_sided() {
            let cf_plus = continued_fraction(
                |k| {
                    let kk = k as i64;
                    let (a_km1, _, _) = fam.triple(kk - 1, nu)?;
                    let (_, beta_k, gamma_k) = fam.triple(kk, nu)?;
                    Ok((a_km1 * gamma_k, beta_k))
                },
                TAU_CF,
                K_MAX_CF,
            )?;
            let cf_minus = continued_fraction(
                |k| {
                    let kk = -(k as i64);
                    let (alpha_k, beta_k, _) = fam.triple(kk, nu)?;
                    let (_, _, gamma_kp1) = fam.triple(kk + 1, nu)?;
                    Ok((alpha_k * gamma_kp1, beta_k))
                },
                TAU_CF,
                K_MAX_CF,
            )?;
            Ok(beta0 - cf_plus - cf_minus)
        } else {
            // The stored beta_0 and gamma_1 rows are the algebraically
            // reduced forms, which at the exceptional parameter values equal
            // the folded F2/F3 head combinations exactly, so one shape of
            // the characteristic equation covers Eqs. F1-F3.
            let cf = continued_fraction(
                |k| {
                    let kk = k as i64;
                    let (a_km1, _, _) = fam.triple(kk - 1, nu)?;
                    let (_, beta_k, gamma_k) = fam.triple(kk, nu)?;
                    Ok((a_km1 * gamma_k, beta_k))
                },
                TAU_CF,
                K_MAX_CF,
            )?;
            Ok(beta0 - cf)
        }
    }
}

/// A characteristic root with its achieved residual.
#[derive(Debug, Clone, Copy)]
pub struct CharacteristicRoot {
    pub value: Complex64,
    pub residual: f64,
    pub iterations: usize,
}

/// Options for the root search.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub tau_root: f64,
    pub max_iterations: usize,
    /// Canonicalize nu roots into the strip Re nu in (-1/2, 1/2].
    pub canonicalize: bool,
    /// Fall back to a grid scan over the canonical strip when seeds fail.
    pub grid_fallback: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tau_root: TAU_ROOT,
            max_iterations: 80,
            canonicalize: true,
            grid_fallback: true,
        }
    }
}

/// Complex secant iteration from each seed in turn; optional grid-scan
/// fallback for nu problems. Roots violating the nu guard band are rejected.
pub fn solve_characteristic(
    problem: &CharacteristicProblem,
    seeds: &[Complex64],
    opts: &SolveOptions,
) -> Result<CharacteristicRoot> {
    let mut tried: Vec<Complex64> = seeds.to_vec();
    if tried.is_empty() {
        tried.push(cr(0.17));
    }
    for &seed in &tried {
        if let Ok(root) = secant_from(problem, seed, opts) {
            return finish_root(problem, root, opts);
        }
    }
    if opts.grid_fallback {
        let mut best: Vec<(f64, Complex64)> = Vec::new();
        if matches!(problem.unknown, Unknown::Nu) {
            // Coarse |f| scan over the canonical strip.
            for i in 0..21 {
                for j in 0..17 {
                    let re = -0.48 + 0.96 * (i as f64) / 20.0;
                    let im = -2.0 + 4.0 * (j as f64) / 16.0;
                    let x = Complex64::new(re, im);
                    if let Ok(f) = problem.residual(x) {
                        best.push((f.norm(), x));
                    }
                }
            }
        } else {
            // Free-parameter problem: scan lines around the first seed; the
            // residual has poles between roots, so collect |f| minima. Real
            // parameter sets can still carry complex conjugate root pairs,
            // hence the offset lines.
            let center = tried[0];
            let span = 24.0 * (1.0 + center.norm());
            for im_off in [0.0, 0.35, -0.35, 1.5, -1.5] {
                let off = Complex64::new(0.0, im_off * (1.0 + center.norm()));
                let mut samples: Vec<(f64, Complex64)> = Vec::new();
                for i in 0..241 {
                    let t = -0.5 * span + span * (i as f64) / 240.0;
                    let x = center + cr(t) + off;
                    if let Ok(f) = problem.residual(x) {
                        samples.push((f.norm(), x));
                    }
                }
                for w in samples.windows(3) {
                    if w[1].0 < w[0].0 && w[1].0 < w[2].0 {
                        best.push(w[1]);
                    }
                }
            }
        }
        best.sort_by(|a, b| a.0.total_cmp(&b.0));
        for &(_, x) in best.iter().take(8) {
            if let Ok(root) = secant_from(problem, x, opts) {
                return finish_root(problem, root, opts);
            }
        }
    }
    Err(Error::NoRoot(format!(
        "characteristic root not found from {} seeds for {}",
        tried.len(),
        problem.family.id.name()
    )))
}

fn secant_from(
    problem: &CharacteristicProblem,
    seed: Complex64,
    opts: &SolveOptions,
) -> Result<CharacteristicRoot> {
    let mut x0 = seed;
    // complex offset so real-seeded iterations can reach complex roots
    let mut x1 = seed + Complex64::new(1e-4, 3e-5) * (cr(1.0) + cr(seed.norm()));
    let mut f0 = problem.residual(x0)?;
    let mut f1 = problem.residual(x1)?;
    let mut converged_at = None;
    for it in 0..opts.max_iterations {
        if f1.norm() < opts.tau_root && converged_at.is_none() {
            converged_at = Some(it);
        }
        // A few extra steps past acceptance drive the residual to its f64
        // floor, which the window junction residual inherits.
        if let Some(c) = converged_at {
            if it >= c + 4 || f1.norm() < 1e-15 {
                return Ok(CharacteristicRoot {
                    value: x1,
                    residual: f1.norm(),
                    iterations: it,
                });
            }
        }
        let df = f1 - f0;
        if df.norm() < 1e-300 {
            break;
        }
        let mut x2 = x1 - f1 * (x1 - x0) / df;
        if !x2.re.is_finite() || !x2.im.is_finite() {
            break;
        }
        // Steer around the forbidden lattice so the residual stays evaluable.
        if matches!(problem.unknown, Unknown::Nu)
            && dist_to_half_integer_lattice(x2) < 2.0 * DELTA_NU
        {
            x2 += Complex64::new(0.0, 4.0 * DELTA_NU);
        }
        let f2 = problem.residual(x2)?;
        if converged_at.is_some() && f2.norm() > f1.norm() {
            // polishing stopped improving
            return Ok(CharacteristicRoot {
                value: x1,
                residual: f1.norm(),
                iterations: opts.max_iterations,
            });
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    if f1.norm() < opts.tau_root {
        return Ok(CharacteristicRoot {
            value: x1,
            residual: f1.norm(),
            iterations: opts.max_iterations,
        });
    }
    Err(Error::NoRoot(format!(
        "secant stalled at |f| = {:.3e}",
        f1.norm()
    )))
}

fn finish_root(
    problem: &CharacteristicProblem,
    mut root: CharacteristicRoot,
    opts: &SolveOptions,
) -> Result<CharacteristicRoot> {
    if let Unknown::Nu = problem.unknown {
        if dist_to_half_integer_lattice(root.value) < DELTA_NU {
            return Err(Error::ForbiddenNu { nu: root.value });
        }
        if opts.canonicalize {
            // nu -> nu - k reindexes the two-sided series; report the strip
            // representative Re nu in (-1/2, 1/2] and re-polish there.
            let k = (root.value.re - 0.5).ceil();
            if k != 0.0 {
                let shifted = root.value - cr(k);
                if let Ok(r2) = secant_from(problem, shifted, opts) {
                    if (r2.value - shifted).norm() < 0.25 {
                        root = r2;
                    }
                }
            }
        }
    }
    Ok(root)
}

/// Normalized coefficient window b_n, n_min <= n <= n_max, with b_0 = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientWindow {
    n_min: i64,
    values: Vec<Complex64>,
    terminated: bool,
}

impl CoefficientWindow {
    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    /// True for quasi-polynomial windows: every b_n beyond n_max is exactly
    /// zero, so the finite sum is the whole series.
    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    pub fn n_max(&self) -> i64 {
        self.n_min + self.values.len() as i64 - 1
    }

    /// b_n; zero outside the window.
    pub fn b(&self, n: i64) -> Complex64 {
        let idx = n - self.n_min;
        if idx < 0 || idx >= self.values.len() as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[idx as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.n_min + i as i64, v))
    }

    /// Max |alpha_n b_{n+1} + beta_n b_n + gamma_n b_{n-1}| over the interior
    /// indices, scaled by the local coefficient and b magnitudes.
    pub fn recurrence_residual(&self, family: &RecurrenceFamily, nu: Complex64) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for n in (self.n_min + 1)..self.n_max() {
            let (alpha, beta, gamma) = family.triple(n, nu)?;
            let r = (alpha * self.b(n + 1) + beta * self.b(n) + gamma * self.b(n - 1)).norm();
            let scale = (alpha * self.b(n + 1)).norm()
                + (beta * self.b(n)).norm()
                + (gamma * self.b(n - 1)).norm();
            if scale > 1e-200 {
                worst = worst.max(r / scale);
            }
        }
        Ok(worst)
    }
}

/// Requested window extent.
#[derive(Debug, Clone, Copy)]
pub enum WindowRequest {
    /// Build at the f64-range cap and trim the underflowed edges: evaluation
    /// near a domain rim consumes the whole representable tail, and Miller
    /// windows are cheap.
    Adaptive,
    /// Fixed half-width (two-sided) or length (one-sided).
    Fixed(i64),
}

/// Minimal-solution coefficients by backward (Miller) recurrence, normalized
/// b_0 = 1. The characteristic condition must already hold at (family, nu),
/// otherwise the two window halves are inconsistent at n = 0.
pub fn minimal_coefficients(
    family: &RecurrenceFamily,
    nu: Complex64,
    request: WindowRequest,
) -> Result<CoefficientWindow> {
    if family.id.is_two_sided() {
        let m = match request {
            WindowRequest::Fixed(m) => m.clamp(8, WINDOW_CAP_TWO_SIDED),
            WindowRequest::Adaptive => WINDOW_CAP_TWO_SIDED,
        };
        miller_two_sided(family, nu, m)
    } else {
        // Quasi-polynomial termination gives an exact finite window.
        if let Some(n_fin) = quasi_polynomial(family)? {
            return finite_window(family, n_fin);
        }
        let m = match request {
            WindowRequest::Fixed(m) => m.clamp(8, WINDOW_CAP_ONE_SIDED),
            WindowRequest::Adaptive => WINDOW_CAP_ONE_SIDED,
        };
        miller_one_sided(family, m)
    }
}

fn miller_two_sided(
    family: &RecurrenceFamily,
    nu: Complex64,
    m: i64,
) -> Result<CoefficientWindow> {
    // Plus side: downward from n = m+8 towards 0 (stable for the minimal
    // solution, which decays as n -> +inf).
    let start_hi = m + 8;
    let mut plus = vec![Complex64::new(0.0, 0.0); (start_hi + 2) as usize];
    plus[start_hi as usize] = cr(1.0);
    for n in (1..=start_hi).rev() {
        let (alpha, beta, gamma) = family.triple(n, nu)?;
        let next = cdiv(-(alpha * plus[(n + 1) as usize] + beta * plus[n as usize]), gamma);
        plus[(n - 1) as usize] = next;
        if next.norm() > 1e250 {
            for v in plus.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // Minus side: upward from n = -(m+8) towards 0.
    let start_lo = -(m + 8);
    let len_lo = (m + 10) as usize; // index i <-> n = start_lo - 1 + i
    let mut minus = vec![Complex64::new(0.0, 0.0); len_lo];
    minus[1] = cr(1.0);
    for n in start_lo..=-1 {
        let (alpha, beta, gamma) = family.triple(n, nu)?;
        let i = (n - (start_lo - 1)) as usize;
        let next = cdiv(-(beta * minus[i] + gamma * minus[i - 1]), alpha);
        minus[i + 1] = next;
        if next.norm() > 1e250 {
            for v in minus.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let b0_plus = plus[0];
    let b0_minus = minus[len_lo - 1];
    if b0_plus.norm() < 1e-280 || b0_minus.norm() < 1e-280 {
        return Err(Error::NotConverged(
            "Miller recursion anchored at a vanishing b_0".into(),
        ));
    }
    let mut values = Vec::with_capacity((2 * m + 1) as usize);
    for n in -m..=m {
        let v = if n < 0 {
            let i = (n - (start_lo - 1)) as usize;
            cdiv(minus[i], b0_minus)
        } else {
            cdiv(plus[n as usize], b0_plus)
        };
        values.push(v);
    }
    Ok(trim_window(CoefficientWindow { n_min: -m, values, terminated: false }))
}

/// Drop window edges whose coefficients have decayed below the level where
/// f64 still carries information (they contribute nothing to any sum).
fn trim_window(w: CoefficientWindow) -> CoefficientWindow {
    const FLOOR: f64 = 1e-220;
    let mut lo = w.n_min();
    let mut hi = w.n_max();
    while lo < -2 && w.b(lo).norm() < FLOOR {
        lo += 1;
    }
    while hi > 2 && w.b(hi).norm() < FLOOR {
        hi -= 1;
    }
    if lo == w.n_min() && hi == w.n_max() {
        return w;
    }
    let values = (lo..=hi).map(|n| w.b(n)).collect();
    CoefficientWindow { n_min: lo, values, terminated: w.terminated }
}

fn miller_one_sided(family: &RecurrenceFamily, m: i64) -> Result<CoefficientWindow> {
    let start_hi = m + 8;
    let mut b = vec![Complex64::new(0.0, 0.0); (start_hi + 2) as usize];
    b[start_hi as usize] = cr(1.0);
    let nu = family.fixed_nu().unwrap_or_else(|| cr(0.0));
    for n in (1..=start_hi).rev() {
        let (alpha, beta, gamma) = family.triple(n, nu)?;
        let next = cdiv(-(alpha * b[(n + 1) as usize] + beta * b[n as usize]), gamma);
        b[(n - 1) as usize] = next;
        if next.norm() > 1e250 {
            for v in b.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let b0 = b[0];
    if b0.norm() < 1e-280 {
        return Err(Error::NotConverged(
            "Miller recursion anchored at a vanishing b_0".into(),
        ));
    }
    let values = (0..=m).map(|n| cdiv(b[n as usize], b0)).collect();
    Ok(trim_window(CoefficientWindow { n_min: 0, values, terminated: false }))
}

/// Exact finite window 0..N-1 for a quasi-polynomial case (gamma_N = 0):
/// downward from b_{N-1} = 1, b_N = 0, then normalized to b_0 = 1.
fn finite_window(family: &RecurrenceFamily, n_fin: i64) -> Result<CoefficientWindow> {
    let nu = family.fixed_nu().unwrap_or_else(|| cr(0.0));
    let mut b = vec![Complex64::new(0.0, 0.0); (n_fin + 1) as usize];
    b[(n_fin - 1) as usize] = cr(1.0);
    for n in (1..n_fin).rev() {
        let (alpha, beta, gamma) = family.triple(n, nu)?;
        b[(n - 1) as usize] = cdiv(-(alpha * b[(n + 1) as usize] + beta * b[n as usize]), gamma);
    }
    let b0 = b[0];
    if b0.norm() < 1e-250 {
        return Err(Error::NotConverged(
            "finite series has vanishing b_0; characteristic condition violated".into(),
        ));
    }
    let values: Vec<Complex64> = (0..n_fin).map(|n| cdiv(b[n as usize], b0)).collect();
    Ok(CoefficientWindow { n_min: 0, values, terminated: true })
}

/// Smallest N >= 1 with gamma_N = 0, if any: the series then terminates at
/// n = N-1 (quasi-polynomial solution).
pub fn quasi_polynomial(family: &RecurrenceFamily) -> Result<Option<i64>> {
    if family.id.is_two_sided() {
        return Err(Error::InvalidParams(
            "quasi-polynomial termination applies to one-sided families".into(),
        ));
    }
    let nu = family.fixed_nu().unwrap_or_else(|| cr(0.0));
    let mut scale: f64 = 1e-8;
    for n in 1..=WINDOW_CAP_ONE_SIDED {
        let (_, _, gamma) = family.triple(n, nu)?;
        if gamma.norm() < 1e-10 * scale {
            return Ok(Some(n));
        }
        scale = scale.max(gamma.norm());
    }
    Ok(None)
}
