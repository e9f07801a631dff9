//! Model files shipped with the crate.

pub const EQ2_INCOME_NAIVE: &str = include_str!("../corpus/eq2_income_naive.model");
pub const EQ5_PROFIT_NAIVE: &str = include_str!("../corpus/eq5_profit_naive.model");
pub const CORRECTED_MODEL: &str = include_str!("../corpus/corrected_model.model");
pub const HAMILTONIAN: &str = include_str!("../corpus/hamiltonian.model");

/// `(file name, source)` for every bundled model.
pub const ALL: [(&str, &str); 4] = [
    ("eq2_income_naive.model", EQ2_INCOME_NAIVE),
    ("eq5_profit_naive.model", EQ5_PROFIT_NAIVE),
    ("corrected_model.model", CORRECTED_MODEL),
    ("hamiltonian.model", HAMILTONIAN),
];

pub fn get(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}
