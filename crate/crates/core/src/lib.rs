//! Series solutions for the Ince limits of the generalized spheroidal wave
//! equation (GSWE) and the double-confluent Heun equation (DCHE).
//!
//! The crate builds the two-sided (phase-parameter) and truncated series
//! solutions of these equations, determines phase parameters and
//! characteristic values from infinite continued fractions, specializes to
//! the Mathieu equations, applies the parameter transformation rules, and
//! maps the radial Schrödinger equation for inverse fourth/sixth-power
//! polarization potentials onto the corresponding equation families.
//! Everything is cross-checked by independent oracles in [`verify`]:
//! ODE residuals, direct complex-plane integration, Wronskian constancy,
//! tridiagonal determinant roots and Perron–Kreuser tail ratios.

pub mod equations;
pub mod error;
pub mod mathieu;
pub mod recurrence;
pub mod scattering;
pub mod solutions;
pub mod specialfn;
pub mod tol;
pub mod transforms;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
