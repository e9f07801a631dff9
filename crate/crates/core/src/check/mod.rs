//! Dimension inference and homogeneity checking.
//!
//! Inference is a single syntax-directed pass. Sums and both sides of an
//! equation must share one dimension; products add exponents; powers scale
//! them; `der` divides by `T` and `integ` multiplies by it; arguments of
//! transcendental functions must be dimensionless. A failed node reports a
//! [`Violation`] and inference continues with the reference dimension, so
//! one pass finds every independent failure.

mod env;
mod groups;
mod infer;
mod report;
mod solve;

pub use env::Env;
pub use groups::{dimensionless_groups, format_group};
pub use infer::{check_equation, infer_dimension, Rule, Verdict, Violation};
pub use report::{EquationReport, Report};
pub use solve::solve_unknown_dimensions;

use thiserror::Error;

use crate::lang::{ModelSpec, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnsolvableKind {
    Underdetermined,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("{0}")]
    Violation(Violation),
    #[error("line {}, col {}: undeclared identifier `{name}`", .span.line, .span.col_start)]
    UndeclaredIdentifier { name: String, span: Span },
    #[error("cannot infer dimensions: {}", match .kind {
        UnsolvableKind::Underdetermined => format!("`{}` is underdetermined", .witness),
        UnsolvableKind::Inconsistent => format!("equation `{}` contradicts the others", .witness),
    })]
    UnsolvableInference { kind: UnsolvableKind, witness: String },
}

/// Solves `infer` variables, then checks every equation in declaration order.
pub fn check_model(spec: &ModelSpec) -> Result<Report, CheckError> {
    let inferred = solve_unknown_dimensions(spec)?;
    let env = Env::from_spec(spec, &inferred)?;
    let equations = spec
        .eqs
        .iter()
        .map(|eq| {
            check_equation(&eq.name, &eq.lhs, &eq.rhs, &env).map(|verdict| EquationReport {
                name: eq.name.clone(),
                line: eq.line,
                verdict,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        model: "model".to_string(),
        equations,
        inferred,
    })
}
