use std::cmp::Ordering;
use std::fmt;

use super::rational::{to_f64, Rational};
use super::{DimError, Dimension};

/// A finite numeric value tagged with its dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantity {
    value: f64,
    dim: Dimension,
}

impl Quantity {
    pub fn new(value: f64, dim: Dimension) -> Result<Self, DimError> {
        if !value.is_finite() {
            return Err(DimError::NonFinite(value));
        }
        Ok(Self { value, dim })
    }

    /// A pure number (dimension `1`) in the same system as `like`.
    pub fn scalar(value: f64, like: &Dimension) -> Result<Self, DimError> {
        Self::new(value, Dimension::one(like.system()))
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dim(&self) -> &Dimension {
        &self.dim
    }

    fn equidimensional(&self, other: &Self) -> Result<(), DimError> {
        if self.dim.system() != other.dim.system() {
            return Err(DimError::MixedSystems);
        }
        if self.dim != other.dim {
            return Err(DimError::NonEquidimensional {
                left: self.dim.to_string(),
                right: other.dim.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, DimError> {
        self.equidimensional(other)?;
        Self::new(self.value + other.value, self.dim.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, DimError> {
        self.equidimensional(other)?;
        Self::new(self.value - other.value, self.dim.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, DimError> {
        let dim = self.dim.mul(&other.dim)?;
        Self::new(self.value * other.value, dim)
    }

    pub fn div(&self, other: &Self) -> Result<Self, DimError> {
        let dim = self.dim.div(&other.dim)?;
        if other.value == 0.0 {
            return Err(DimError::DivisionByZero);
        }
        Self::new(self.value / other.value, dim)
    }

    pub fn pow(&self, e: Rational) -> Result<Self, DimError> {
        Self::new(self.value.powf(to_f64(e)), self.dim.pow(e))
    }

    pub fn neg(&self) -> Self {
        Self {
            value: -self.value,
            dim: self.dim.clone(),
        }
    }

    /// Ordering is only meaningful between equidimensional quantities; any
    /// other comparison is an error rather than `false`.
    pub fn compare(&self, other: &Self) -> Result<Ordering, DimError> {
        self.equidimensional(other)?;
        Ok(self.value.total_cmp(&other.value))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim.is_dimensionless() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} {}", self.value, self.dim)
        }
    }
}
