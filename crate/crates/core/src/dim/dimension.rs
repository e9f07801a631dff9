use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::{DimError, DimensionSystem};

/// An element of the dimension group: a sparse vector of rational exponents
/// over the bases of one [`DimensionSystem`].
///
/// The empty vector is the neutral element `1`. Zero exponents are never
/// stored, so structural equality is dimensional equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dimension {
    system: Arc<DimensionSystem>,
    exps: BTreeMap<usize, Rational>,
}

impl Dimension {
    pub fn one(system: &Arc<DimensionSystem>) -> Self {
        Self {
            system: Arc::clone(system),
            exps: BTreeMap::new(),
        }
    }

    pub fn base(system: &Arc<DimensionSystem>, name: &str) -> Result<Self, DimError> {
        let idx = system
            .index_of(name)
            .ok_or_else(|| DimError::UnknownBase(name.to_string()))?;
        let mut exps = BTreeMap::new();
        exps.insert(idx, Rational::one());
        Ok(Self {
            system: Arc::clone(system),
            exps,
        })
    }

    /// Builds a dimension from `(base name, exponent)` pairs. Repeated bases
    /// accumulate.
    pub fn from_exponents<'a, I>(system: &Arc<DimensionSystem>, pairs: I) -> Result<Self, DimError>
    where
        I: IntoIterator<Item = (&'a str, Rational)>,
    {
        let mut exps: BTreeMap<usize, Rational> = BTreeMap::new();
        for (name, e) in pairs {
            let idx = system
                .index_of(name)
                .ok_or_else(|| DimError::UnknownBase(name.to_string()))?;
            *exps.entry(idx).or_insert_with(Rational::zero) += e;
        }
        exps.retain(|_, e| !e.is_zero());
        Ok(Self {
            system: Arc::clone(system),
            exps,
        })
    }

    /// Dense exponent vector in base declaration order.
    pub fn from_vec(system: &Arc<DimensionSystem>, exps: &[Rational]) -> Self {
        assert_eq!(exps.len(), system.len(), "exponent vector length");
        Self {
            system: Arc::clone(system),
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(i, e)| (i, *e))
                .collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.system.len()];
        for (&i, &e) in &self.exps {
            v[i] = e;
        }
        v
    }

    pub fn system(&self) -> &Arc<DimensionSystem> {
        &self.system
    }

    pub fn exponent(&self, base: &str) -> Rational {
        self.system
            .index_of(base)
            .and_then(|i| self.exps.get(&i).copied())
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero exponents as `(base name, exponent)` in declaration order.
    pub fn exponents(&self) -> impl Iterator<Item = (&str, Rational)> + '_ {
        self.exps
            .iter()
            .map(move |(&i, &e)| (self.system.base_names()[i].as_str(), e))
    }

    pub fn is_dimensionless(&self) -> bool {
        self.exps.is_empty()
    }

    fn check_system(&self, other: &Self) -> Result<(), DimError> {
        if Arc::ptr_eq(&self.system, &other.system) || self.system == other.system {
            Ok(())
        } else {
            Err(DimError::MixedSystems)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, DimError> {
        self.check_system(other)?;
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            let slot = exps.entry(i).or_insert_with(Rational::zero);
            *slot += e;
            if slot.is_zero() {
                exps.remove(&i);
            }
        }
        Ok(Self {
            system: Arc::clone(&self.system),
            exps,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, DimError> {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: Rational) -> Self {
        let exps = if e.is_zero() {
            BTreeMap::new()
        } else {
            self.exps.iter().map(|(&i, &x)| (i, x * e)).collect()
        };
        Self {
            system: Arc::clone(&self.system),
            exps,
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-Rational::one())
    }
}

impl fmt::Display for Dimension {
    /// `QK^(2/3)*QP^(-2/3)*T^(-1)` style, bases in declaration order; `1`
    /// for the neutral element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (name, e)) in self.exponents().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if e.is_one() {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^({})", format_rational(e))?;
            }
        }
        Ok(())
    }
}
