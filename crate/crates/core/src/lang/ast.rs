use std::sync::Arc;

use indexmap::IndexMap;
use serde::Serialize;

use crate::dim::{Dimension, DimensionSystem, Rational};

/// Source location: 1-based line, 0-based half-open column range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Span {
    pub line: usize,
    #[serde(rename = "cs")]
    pub col_start: usize,
    #[serde(rename = "ce")]
    pub col_end: usize,
}

impl Span {
    pub fn new(line: usize, col_start: usize, col_end: usize) -> Self {
        Self {
            line,
            col_start,
            col_end,
        }
    }

    pub fn to(self, end: Span) -> Span {
        Span::new(self.line, self.col_start, end.col_end)
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.line == other.line
            && self.col_start <= other.col_start
            && other.col_end <= self.col_end
    }
}

/// Expression node. Equality ignores spans, so a re-parsed expression
/// compares equal to the original.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Num(f64),
    Var(String),
    /// At least two terms.
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// At least two factors.
    Mul(Vec<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Neg(Box<Expr>),
    /// Time derivative.
    Der(Box<Expr>),
    /// Time integral.
    Integ(Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Exponent {
    Rational(Rational),
    Param(String),
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Self { kind, span }
    }

    pub fn children(&self) -> Vec<&Expr> {
        match &self.kind {
            ExprKind::Num(_) | ExprKind::Var(_) => vec![],
            ExprKind::Add(xs) | ExprKind::Mul(xs) | ExprKind::Call(_, xs) => xs.iter().collect(),
            ExprKind::Sub(a, b) | ExprKind::Div(a, b) => vec![a, b],
            ExprKind::Pow(a, _) | ExprKind::Neg(a) | ExprKind::Der(a) | ExprKind::Integ(a) => {
                vec![a]
            }
        }
    }

    /// Pre-order walk.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DimAnnot {
    Known(Dimension),
    Infer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VarDecl {
    pub name: String,
    pub dim: DimAnnot,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamDecl {
    pub name: String,
    pub dim: Dimension,
    pub value: Option<Rational>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FuncKind {
    /// Arguments and result are dimensionless.
    Transcendental,
    Declared { args: Vec<Dimension>, result: Dimension },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuncSig {
    pub name: String,
    pub arity: usize,
    pub kind: FuncKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Equation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub line: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Symbol<'a> {
    Var(&'a VarDecl),
    Param(&'a ParamDecl),
    Func(&'a FuncSig),
}

/// A parsed model file.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub system: Arc<DimensionSystem>,
    pub vars: IndexMap<String, VarDecl>,
    pub params: IndexMap<String, ParamDecl>,
    pub funcs: IndexMap<String, FuncSig>,
    pub eqs: Vec<Equation>,
}

impl ModelSpec {
    pub fn empty(system: Arc<DimensionSystem>) -> Self {
        Self {
            system,
            vars: IndexMap::new(),
            params: IndexMap::new(),
            funcs: IndexMap::new(),
            eqs: Vec::new(),
        }
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol<'_>> {
        if let Some(v) = self.vars.get(name) {
            return Some(Symbol::Var(v));
        }
        if let Some(p) = self.params.get(name) {
            return Some(Symbol::Param(p));
        }
        self.funcs.get(name).map(Symbol::Func)
    }

    pub fn equation(&self, name: &str) -> Option<&Equation> {
        self.eqs.iter().find(|e| e.name == name)
    }

    /// Variables declared `infer`, in declaration order.
    pub fn unknowns(&self) -> Vec<&str> {
        self.vars
            .values()
            .filter(|v| v.dim == DimAnnot::Infer)
            .map(|v| v.name.as_str())
            .collect()
    }
}
