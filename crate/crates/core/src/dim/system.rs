use std::fmt;
use std::sync::Arc;

use super::DimError;

/// Ordered set of base dimension names.
///
/// Exponent vectors index into this list, so the order is fixed once the
/// system is built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionSystem {
    base_names: Vec<String>,
}

/// Base set for the non-monetary economics models: time, money, capital,
/// labour and population quantities, utility.
pub const ECON_BASES: [&str; 6] = ["T", "M", "QK", "QL", "QP", "U"];

/// Name of the base that `der`/`integ` divide or multiply by.
pub const TIME_BASE: &str = "T";

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DimensionSystem {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, DimError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut base_names: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(DimError::InvalidBaseName(name));
            }
            if base_names.contains(&name) {
                return Err(DimError::DuplicateBase(name));
            }
            base_names.push(name);
        }
        Ok(Arc::new(Self { base_names }))
    }

    pub fn econ() -> Arc<Self> {
        Self::new(ECON_BASES).expect("default base set is valid")
    }

    pub fn base_names(&self) -> &[String] {
        &self.base_names
    }

    pub fn len(&self) -> usize {
        self.base_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base_names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.base_names.iter().position(|b| b == name)
    }

    pub fn time_index(&self) -> Option<usize> {
        self.index_of(TIME_BASE)
    }
}

impl fmt::Display for DimensionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base_names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            DimensionSystem::new(["T", "T"]),
            Err(DimError::DuplicateBase(n)) if n == "T"
        ));
        assert!(matches!(
            DimensionSystem::new(["1x"]),
            Err(DimError::InvalidBaseName(_))
        ));
        assert!(matches!(
            DimensionSystem::new([""]),
            Err(DimError::InvalidBaseName(_))
        ));
    }

    #[test]
    fn names_are_case_sensitive() {
        let sys = DimensionSystem::new(["t", "T"]).unwrap();
        assert_eq!(sys.index_of("T"), Some(1));
        assert_eq!(sys.time_index(), Some(1));
    }
}
