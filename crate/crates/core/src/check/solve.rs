//! Solving for `infer` variables.
//!
//! Every subexpression's dimension is an affine function of the unknown
//! exponent vectors: `known + Σ coef_j · x_j`. Sums, equalities and
//! function signatures force differences of such forms to vanish, which
//! gives a linear system that decouples per base dimension but shares one
//! coefficient matrix. It is solved exactly by rational elimination.

use std::collections::HashMap;

use indexmap::IndexMap;
use num_traits::Zero;

use super::{CheckError, UnsolvableKind};
use crate::dim::{Dimension, Rational};
use crate::lang::{DimAnnot, Exponent, Expr, ExprKind, FuncKind, ModelSpec, Symbol};
use crate::linalg::rref;

#[derive(Debug, Clone, PartialEq)]
struct Affine {
    known: Vec<Rational>,
    coef: Vec<Rational>,
}

impl Affine {
    fn zero(bases: usize, unknowns: usize) -> Self {
        Self {
            known: vec![Rational::zero(); bases],
            coef: vec![Rational::zero(); unknowns],
        }
    }

    fn known(d: &Dimension, unknowns: usize) -> Self {
        Self {
            known: d.to_vec(),
            coef: vec![Rational::zero(); unknowns],
        }
    }

    fn combine(&self, other: &Self, sign: Rational) -> Self {
        Self {
            known: self
                .known
                .iter()
                .zip(&other.known)
                .map(|(a, b)| *a + sign * *b)
                .collect(),
            coef: self
                .coef
                .iter()
                .zip(&other.coef)
                .map(|(a, b)| *a + sign * *b)
                .collect(),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        self.combine(other, Rational::from_integer(1))
    }

    fn minus(&self, other: &Self) -> Self {
        self.combine(other, Rational::from_integer(-1))
    }

    fn scale(&self, r: Rational) -> Self {
        Self {
            known: self.known.iter().map(|x| *x * r).collect(),
            coef: self.coef.iter().map(|x| *x * r).collect(),
        }
    }

    fn has_unknowns(&self) -> bool {
        self.coef.iter().any(|c| !c.is_zero())
    }
}

struct Collector<'a> {
    spec: &'a ModelSpec,
    unknown_idx: HashMap<&'a str, usize>,
    bases: usize,
    unknowns: usize,
    equation: String,
    constraints: Vec<(Affine, String)>,
}

impl Collector<'_> {
    fn zero(&self) -> Affine {
        Affine::zero(self.bases, self.unknowns)
    }

    fn require_zero(&mut self, a: Affine) {
        if a.has_unknowns() {
            self.constraints.push((a, self.equation.clone()));
        }
    }

    fn time(&self) -> Affine {
        match self.spec.system.time_index() {
            Some(i) => {
                let mut a = self.zero();
                a.known[i] = Rational::from_integer(1);
                a
            }
            None => self.zero(),
        }
    }

    fn walk(&mut self, e: &Expr) -> Affine {
        match &e.kind {
            ExprKind::Num(_) => self.zero(),
            ExprKind::Var(name) => {
                if let Some(&j) = self.unknown_idx.get(name.as_str()) {
                    let mut a = self.zero();
                    a.coef[j] = Rational::from_integer(1);
                    return a;
                }
                match self.spec.symbol(name) {
                    Some(Symbol::Var(v)) => match &v.dim {
                        DimAnnot::Known(d) => Affine::known(d, self.unknowns),
                        DimAnnot::Infer => self.zero(),
                    },
                    Some(Symbol::Param(p)) => Affine::known(&p.dim, self.unknowns),
                    _ => self.zero(),
                }
            }
            ExprKind::Add(terms) => {
                let first = self.walk(&terms[0]);
                for t in &terms[1..] {
                    let a = self.walk(t);
                    self.require_zero(a.minus(&first));
                }
                first
            }
            ExprKind::Sub(a, b) => {
                let first = self.walk(a);
                let second = self.walk(b);
                self.require_zero(second.minus(&first));
                first
            }
            ExprKind::Neg(a) => self.walk(a),
            ExprKind::Mul(factors) => factors
                .iter()
                .fold(self.zero(), |acc, f| acc.plus(&self.walk(f))),
            ExprKind::Div(a, b) => {
                let num = self.walk(a);
                num.minus(&self.walk(b))
            }
            ExprKind::Pow(base, exp) => {
                let b = self.walk(base);
                let r = match exp {
                    Exponent::Rational(r) => Some(*r),
                    Exponent::Param(name) => self.spec.params.get(name).and_then(|p| p.value),
                };
                // An unresolvable exponent leaves the result undetermined;
                // the checker reports it.
                r.map(|r| b.scale(r)).unwrap_or_else(|| self.zero())
            }
            ExprKind::Der(a) => {
                let inner = self.walk(a);
                inner.minus(&self.time())
            }
            ExprKind::Integ(a) => {
                let inner = self.walk(a);
                inner.plus(&self.time())
            }
            ExprKind::Call(name, args) => {
                let Some(sig) = self.spec.funcs.get(name) else {
                    return self.zero();
                };
                match &sig.kind {
                    FuncKind::Transcendental => {
                        for a in args {
                            let d = self.walk(a);
                            self.require_zero(d);
                        }
                        self.zero()
                    }
                    FuncKind::Declared { args: want, result } => {
                        for (a, w) in args.iter().zip(want) {
                            let d = self.walk(a);
                            self.require_zero(d.minus(&Affine::known(w, self.unknowns)));
                        }
                        Affine::known(result, self.unknowns)
                    }
                }
            }
        }
    }
}

/// Assigns a dimension to every `infer` variable of `spec`.
pub fn solve_unknown_dimensions(spec: &ModelSpec) -> Result<IndexMap<String, Dimension>, CheckError> {
    let unknowns = spec.unknowns();
    if unknowns.is_empty() {
        return Ok(IndexMap::new());
    }
    let mut c = Collector {
        spec,
        unknown_idx: unknowns.iter().enumerate().map(|(i, n)| (*n, i)).collect(),
        bases: spec.system.len(),
        unknowns: unknowns.len(),
        equation: String::new(),
        constraints: Vec::new(),
    };
    for eq in &spec.eqs {
        c.equation = eq.name.clone();
        let l = c.walk(&eq.lhs);
        let r = c.walk(&eq.rhs);
        c.require_zero(l.minus(&r));
    }

    // coef · x = -known, one right-hand-side column per base.
    let nu = unknowns.len();
    let mut rows: Vec<(Vec<Rational>, String)> = c
        .constraints
        .into_iter()
        .map(|(a, label)| {
            let mut row = a.coef;
            row.extend(a.known.iter().map(|k| -*k));
            (row, label)
        })
        .collect();
    let pivots = rref(&mut rows, nu);

    if let Some((_, witness)) = rows[pivots.len()..]
        .iter()
        .find(|(row, _)| row[nu..].iter().any(|x| !x.is_zero()))
    {
        return Err(CheckError::UnsolvableInference {
            kind: UnsolvableKind::Inconsistent,
            witness: witness.clone(),
        });
    }
    if let Some(free) = (0..nu).find(|j| !pivots.contains(j)) {
        return Err(CheckError::UnsolvableInference {
            kind: UnsolvableKind::Underdetermined,
            witness: unknowns[free].to_string(),
        });
    }

    let mut solution = IndexMap::new();
    let mut by_col: Vec<Option<Dimension>> = vec![None; nu];
    for (r, &col) in pivots.iter().enumerate() {
        by_col[col] = Some(Dimension::from_vec(&spec.system, &rows[r].0[nu..]));
    }
    for (j, name) in unknowns.iter().enumerate() {
        solution.insert(
            name.to_string(),
            by_col[j].take().expect("every unknown has a pivot"),
        );
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dim::rational::{int, ratio};
    use crate::lang::{parse_dimension, parse_model};

    #[test]
    fn productivity_level_for_one_third_share() {
        let m = parse_model(
            "dims T QK QP\nvar y : QK/(QP*T)\nvar k : QK/QP\nvar a0 : infer\n\
             eq prod: y = a0*k^(1/3)",
        )
        .unwrap();
        let sol = solve_unknown_dimensions(&m).unwrap();
        let a0 = &sol["a0"];
        assert_eq!(a0.exponent("QK"), ratio(2, 3));
        assert_eq!(a0.exponent("QP"), ratio(-2, 3));
        assert_eq!(a0.exponent("T"), int(-1));
    }

    #[test]
    fn identity_and_chains() {
        let m = parse_model(
            "dims T QK\nvar y : T\nvar x : infer\nvar z : infer\neq id: x = y\neq chain: z*x = y^2",
        )
        .unwrap();
        let sol = solve_unknown_dimensions(&m).unwrap();
        assert_eq!(sol["x"], parse_dimension("T", &m.system).unwrap());
        assert_eq!(sol["z"], parse_dimension("T", &m.system).unwrap());
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let m = parse_model(
            "dims T QK\nvar y : T\nvar w : QK\nvar x : infer\neq a: x = y\neq b: x = w",
        )
        .unwrap();
        assert_eq!(
            solve_unknown_dimensions(&m).unwrap_err(),
            CheckError::UnsolvableInference {
                kind: UnsolvableKind::Inconsistent,
                witness: "b".into()
            }
        );
        let m = parse_model("dims T\nvar y : T\nvar x : infer\nvar z : infer\neq a: x*z = y")
            .unwrap();
        assert!(matches!(
            solve_unknown_dimensions(&m).unwrap_err(),
            CheckError::UnsolvableInference {
                kind: UnsolvableKind::Underdetermined,
                ..
            }
        ));
    }

    #[test]
    fn through_derivatives_and_transcendentals() {
        let m = parse_model(
            "dims T QK\nvar K : QK\nvar t : T\nvar g : infer\nvar I : infer\n\
             fn exp transcendental(1)\neq growth: exp(g*t) = 1\neq acc: der(K) = I",
        )
        .unwrap();
        let sol = solve_unknown_dimensions(&m).unwrap();
        assert_eq!(sol["g"].to_string(), "T^(-1)");
        assert_eq!(sol["I"].to_string(), "T^(-1)*QK");
    }
}
