//! Dimension algebra: base systems, rational-exponent dimensions and
//! dimensioned quantities.

mod dimension;
mod quantity;
pub mod rational;
mod system;

pub use dimension::Dimension;
pub use quantity::Quantity;
pub use rational::Rational;
pub use system::{DimensionSystem, ECON_BASES, TIME_BASE};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DimError {
    #[error("dimensions belong to different base systems")]
    MixedSystems,
    #[error("non-equidimensional operands: {left} vs {right}")]
    NonEquidimensional { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("quantity value must be finite, got {0}")]
    NonFinite(f64),
    #[error("unknown base dimension `{0}`")]
    UnknownBase(String),
    #[error("duplicate base dimension `{0}`")]
    DuplicateBase(String),
    #[error("invalid base dimension name `{0}`")]
    InvalidBaseName(String),
}
