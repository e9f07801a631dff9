use serde::Serialize;

use super::{CheckError, Env};
use crate::dim::Dimension;
use crate::lang::{Exponent, Expr, ExprKind, FuncKind, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    AdditionMismatch,
    EqualityMismatch,
    TranscendentalArgNotDimensionless,
    ExponentNotDimensionless,
    /// Argument of a declared function does not match its signature.
    ArgumentMismatch,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::AdditionMismatch => "AdditionMismatch",
            Rule::EqualityMismatch => "EqualityMismatch",
            Rule::TranscendentalArgNotDimensionless => "TranscendentalArgNotDimensionless",
            Rule::ExponentNotDimensionless => "ExponentNotDimensionless",
            Rule::ArgumentMismatch => "ArgumentMismatch",
        }
    }
}

/// A witnessed failure of homogeneity at one node.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub equation: String,
    pub span: Span,
    pub rule: Rule,
    pub expected: Dimension,
    pub found: Dimension,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: expected {}, found {}",
            self.rule.as_str(),
            self.expected,
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Homogeneous { dimension: Dimension },
    Inhomogeneous(Vec<Violation>),
}

impl Verdict {
    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Verdict::Homogeneous { .. })
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Homogeneous { .. } => &[],
            Verdict::Inhomogeneous(v) => v,
        }
    }
}

struct Inferer<'e> {
    env: &'e Env,
    equation: String,
    violations: Vec<Violation>,
    undeclared: Option<(String, Span)>,
}

impl Inferer<'_> {
    fn flag(&mut self, rule: Rule, span: Span, expected: &Dimension, found: &Dimension) {
        self.violations.push(Violation {
            equation: self.equation.clone(),
            span,
            rule,
            expected: expected.clone(),
            found: found.clone(),
        });
    }

    fn one(&self) -> Dimension {
        Dimension::one(self.env.system())
    }

    /// Additive terms are compared against `reference`; the sum takes the
    /// reference dimension whatever its terms infer to.
    fn additive(&mut self, terms: &[&Expr], expected: Option<&Dimension>) -> Dimension {
        let (reference, rest) = match expected {
            Some(d) => (d.clone(), terms),
            None => (self.infer(terms[0], None), &terms[1..]),
        };
        for t in rest {
            let d = self.infer(t, Some(&reference));
            if d != reference {
                self.flag(Rule::AdditionMismatch, t.span, &reference, &d);
            }
        }
        reference
    }

    /// `expected` is the dimension the surrounding context requires, when
    /// known. It only changes where sum mismatches are reported, never
    /// whether one is.
    fn infer(&mut self, e: &Expr, expected: Option<&Dimension>) -> Dimension {
        match &e.kind {
            ExprKind::Num(_) => self.one(),
            ExprKind::Var(name) => match self.env.dim_of(name) {
                Some(d) => d.clone(),
                None => {
                    self.undeclared.get_or_insert((name.clone(), e.span));
                    self.one()
                }
            },
            ExprKind::Add(terms) => {
                let terms: Vec<&Expr> = terms.iter().collect();
                self.additive(&terms, expected)
            }
            ExprKind::Sub(a, b) => self.additive(&[a, b], expected),
            ExprKind::Neg(a) => self.infer(a, expected),
            ExprKind::Mul(factors) => {
                let mut acc = self.one();
                for f in factors {
                    let d = self.infer(f, None);
                    acc = acc.mul(&d).expect("single base system");
                }
                acc
            }
            ExprKind::Div(a, b) => {
                let num = self.infer(a, None);
                let den = self.infer(b, None);
                num.div(&den).expect("single base system")
            }
            ExprKind::Pow(base, exp) => {
                let bd = self.infer(base, None);
                self.power(e.span, bd, exp)
            }
            ExprKind::Der(a) => {
                let d = self.infer(a, None);
                match self.env.time() {
                    Some(t) => d.div(t).expect("single base system"),
                    None => {
                        self.undeclared
                            .get_or_insert((crate::dim::TIME_BASE.to_string(), e.span));
                        d
                    }
                }
            }
            ExprKind::Integ(a) => {
                let d = self.infer(a, None);
                match self.env.time() {
                    Some(t) => d.mul(t).expect("single base system"),
                    None => {
                        self.undeclared
                            .get_or_insert((crate::dim::TIME_BASE.to_string(), e.span));
                        d
                    }
                }
            }
            ExprKind::Call(name, args) => {
                let Some(sig) = self.env.func(name).cloned() else {
                    self.undeclared.get_or_insert((name.clone(), e.span));
                    return self.one();
                };
                match sig.kind {
                    FuncKind::Transcendental => {
                        let one = self.one();
                        for a in args {
                            let d = self.infer(a, Some(&one));
                            if !d.is_dimensionless() {
                                self.flag(Rule::TranscendentalArgNotDimensionless, a.span, &one, &d);
                            }
                        }
                        one
                    }
                    FuncKind::Declared {
                        args: ref want,
                        ref result,
                    } => {
                        for (a, w) in args.iter().zip(want) {
                            let d = self.infer(a, Some(w));
                            if d != *w {
                                self.flag(Rule::ArgumentMismatch, a.span, w, &d);
                            }
                        }
                        result.clone()
                    }
                }
            }
        }
    }

    fn power(&mut self, span: Span, base: Dimension, exp: &Exponent) -> Dimension {
        let name = match exp {
            Exponent::Rational(r) => return base.pow(*r),
            Exponent::Param(name) => name,
        };
        let one = self.one();
        let Some(pd) = self.env.dim_of(name).cloned() else {
            self.undeclared.get_or_insert((name.clone(), span));
            return base;
        };
        if !pd.is_dimensionless() {
            self.flag(Rule::ExponentNotDimensionless, span, &one, &pd);
        }
        match self.env.binding(name) {
            Some(r) => base.pow(r),
            None if base.is_dimensionless() => base,
            None => {
                // Unknown exponent value: only a dimensionless base has a
                // computable result.
                self.flag(Rule::ExponentNotDimensionless, span, &one, &base);
                base
            }
        }
    }
}

/// Infers the dimension of `e`, failing on the first violation met in a
/// pre-order walk.
pub fn infer_dimension(e: &Expr, env: &Env) -> Result<Dimension, CheckError> {
    let mut inf = Inferer {
        env,
        equation: String::new(),
        violations: Vec::new(),
        undeclared: None,
    };
    let d = inf.infer(e, None);
    if let Some((name, span)) = inf.undeclared {
        return Err(CheckError::UndeclaredIdentifier { name, span });
    }
    match inf.violations.into_iter().next() {
        Some(v) => Err(CheckError::Violation(v)),
        None => Ok(d),
    }
}

/// Checks one equation, collecting every violation on both sides.
pub fn check_equation(name: &str, lhs: &Expr, rhs: &Expr, env: &Env) -> Result<Verdict, CheckError> {
    let mut inf = Inferer {
        env,
        equation: name.to_string(),
        violations: Vec::new(),
        undeclared: None,
    };
    let left = inf.infer(lhs, None);
    let right = inf.infer(rhs, Some(&left));
    if right != left {
        inf.flag(Rule::EqualityMismatch, rhs.span, &left, &right);
    }
    if let Some((name, span)) = inf.undeclared {
        return Err(CheckError::UndeclaredIdentifier { name, span });
    }
    Ok(if inf.violations.is_empty() {
        Verdict::Homogeneous { dimension: left }
    } else {
        Verdict::Inhomogeneous(inf.violations)
    })
}
