//! Exact arithmetic: Eisenstein integers, ℚ(ζ₁₂), ℚ(√3) and ℰ/13ℰ.

mod cyclo;
mod eisenstein;
mod matrix;
mod real;
mod residue;

pub use cyclo::{fmt_rational, parse_rational, Cyclo12, Cyclo12Number};
pub use eisenstein::{eis_norm, Eisenstein};
pub use matrix::EisMatrix;
pub use real::RealQ3;
pub use residue::{crt13, Residue13};

/// Compatibility alias matching the domain name.
pub type EisensteinInt = Eisenstein;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not real")]
    NotReal,
    #[error("value is not an Eisenstein integer")]
    NotIntegral,
    #[error("cannot parse {0:?}")]
    Parse(String),
}
