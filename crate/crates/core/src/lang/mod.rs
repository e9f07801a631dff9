//! Line-oriented model language: declarations of base dimensions,
//! variables, parameters and function signatures, plus named equations.
//!
//! ```text
//! dims T QK QP
//! var k : QK/QP
//! var c : QK/(QP*T)
//! param alpha : 1 = 1/3
//! var a0 : infer
//! eq prod: c = a0*k^alpha
//! ```

mod ast;
mod format;
mod lexer;
mod parser;

pub use ast::{
    DimAnnot, Equation, Exponent, Expr, ExprKind, FuncKind, FuncSig, ModelSpec, ParamDecl, Span,
    Symbol, VarDecl,
};
pub use format::format_expr;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse_dimension, parse_expr, parse_model, KEYWORDS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("line {}, col {}: expected {expected}, found {found}", .span.line, .span.col_start)]
    Parse {
        span: Span,
        expected: String,
        found: String,
    },
    #[error("line {}, col {}: duplicate name `{name}`", .span.line, .span.col_start)]
    DuplicateName { name: String, span: Span },
    #[error("line {}, col {}: undeclared identifier `{name}`", .span.line, .span.col_start)]
    UndeclaredIdentifier { name: String, span: Span },
    #[error("line {}, col {}: unknown base dimension `{name}`", .span.line, .span.col_start)]
    UnknownBaseDimension { name: String, span: Span },
}

impl ModelError {
    pub fn span(&self) -> Span {
        match self {
            ModelError::Parse { span, .. }
            | ModelError::DuplicateName { span, .. }
            | ModelError::UndeclaredIdentifier { span, .. }
            | ModelError::UnknownBaseDimension { span, .. } => *span,
        }
    }
}
