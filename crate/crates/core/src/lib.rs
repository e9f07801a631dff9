//! Dimensional-homogeneity checking for declarative model files, and
//! numerics for the per-capita neoclassical growth model with population
//! stock.
//!
//! * [`dim`]: rational-exponent dimension algebra and dimensioned quantities.
//! * [`lang`]: the model-file language (lexer, parser, AST, formatter).
//! * [`check`]: dimension inference, homogeneity verdicts, unknown-dimension
//!   solving and dimensionless groups.
//! * [`growth`]: steady state, linearization, RK4 integration, saddle-path
//!   shooting, welfare and optimality diagnostics.

pub mod check;
pub mod corpus;
pub mod dim;
pub mod growth;
pub mod lang;
mod linalg;

pub use check::{check_equation, check_model, infer_dimension, Report, Verdict, Violation};
pub use dim::{Dimension, DimensionSystem, Quantity, Rational};
pub use growth::{GrowthParams, State, Trajectory};
pub use lang::{format_expr, parse_expr, parse_model, Expr, ModelSpec};
