use std::fmt;

use num_complex::Complex64;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Equation parameters violate an invariant (`omega != 0`, `B1 != 0`, ...).
    InvalidParams(String),
    /// Coefficient evaluation requested at a singular point of the equation.
    SingularEvaluation { z: Complex64 },
    /// Endpoint not defined for the equation kind.
    InvalidEndpoint(String),
    /// Gamma (or digamma) evaluated at a non-positive integer.
    PoleError { z: Complex64 },
    /// Hypergeometric F undefined: `c` is a forbidden non-positive integer.
    UndefinedF { c: Complex64 },
    /// Series, continued fraction or iteration exceeded its term budget.
    NoConvergence(String),
    /// Requested argument lies outside the supported branch range.
    BranchError(String),
    /// Recurrence coefficient has a vanishing denominator at this index.
    InadmissibleIndex { n: i64, detail: String },
    /// Root search failed from all supplied seeds.
    NoRoot(String),
    /// Phase parameter cannot be integer or half-integer.
    ForbiddenNu { nu: Complex64 },
    /// Coefficient window tail not yet in its asymptotic regime.
    NotConverged(String),
    /// Solution family not applicable for these parameters; the message
    /// names the sibling pair that covers the excluded case.
    ApplicabilityError(String),
    /// Evaluation point outside the series convergence domain.
    OutsideDomain { z: Complex64, domain: String },
    /// Basis function argument left the allowed branch sector.
    BasisBranchError(String),
    /// Transformation rule preconditions not met.
    RuleInapplicable(String),
    /// No degeneracy flag set; the full equation applies.
    NotDegenerate,
    /// Charged target with an inverse sixth-power term: the radial equation
    /// is more general than the Ince limit of the DCHE.
    ChargedTargetUnsupported,
    /// Inverse sixth-power coefficient vanishes; use the inverse fourth-power map.
    DegeneratePotential,
    /// Potential parameters inconsistent (negative energy, bad charges, ...).
    InvalidPotential(String),
    /// Adaptive ODE integrator step collapsed (singularity too close).
    StepFailure { z: Complex64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::SingularEvaluation { z } => {
                write!(f, "evaluation at singular point z = {z}")
            }
            Error::InvalidEndpoint(msg) => write!(f, "invalid endpoint: {msg}"),
            Error::PoleError { z } => write!(f, "gamma pole at z = {z}"),
            Error::UndefinedF { c } => {
                write!(f, "hypergeometric F undefined for c = {c}")
            }
            Error::NoConvergence(msg) => write!(f, "no convergence: {msg}"),
            Error::BranchError(msg) => write!(f, "branch error: {msg}"),
            Error::InadmissibleIndex { n, detail } => {
                write!(f, "inadmissible recurrence index n = {n}: {detail}")
            }
            Error::NoRoot(msg) => write!(f, "no root found: {msg}"),
            Error::ForbiddenNu { nu } => write!(
                f,
                "phase parameter nu = {nu} cannot be integer or half-integer"
            ),
            Error::NotConverged(msg) => write!(f, "not converged: {msg}"),
            Error::ApplicabilityError(msg) => write!(f, "not applicable: {msg}"),
            Error::OutsideDomain { z, domain } => {
                write!(f, "z = {z} outside convergence domain {domain}")
            }
            Error::BasisBranchError(msg) => write!(f, "basis branch error: {msg}"),
            Error::RuleInapplicable(msg) => write!(f, "rule inapplicable: {msg}"),
            Error::NotDegenerate => write!(f, "no degeneracy flag set"),
            Error::ChargedTargetUnsupported => write!(
                f,
                "charged target with inverse sixth-power term requires a more \
                 general equation than the Ince limit of the DCHE"
            ),
            Error::DegeneratePotential => write!(
                f,
                "inverse sixth-power coefficient vanishes; use the inverse \
                 fourth-power mapping"
            ),
            Error::InvalidPotential(msg) => write!(f, "invalid potential: {msg}"),
            Error::StepFailure { z } => {
                write!(f, "integration step failure near z = {z}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
