//! Generators and property bodies shared by the property tests and the
//! acceptance harness.
#![allow(dead_code)]

use std::sync::Arc;

use dimcheck_core::check::{check_equation, infer_dimension, CheckError, Env};
use dimcheck_core::dim::{DimError, Dimension, DimensionSystem, Quantity, Rational};
use dimcheck_core::lang::{format_expr, parse_expr, parse_model, Exponent, Expr, ExprKind, ModelSpec, Span};
use indexmap::IndexMap;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const MODEL: &str = "dims T QK QP
var a : QK
var b : QK
var c : QK/T
var d : QK/T
var e : QP
var s : 1
var g : 1
var t : T
param al : 1 = 1/3
fn exp transcendental(1)
fn F(QK, QP) -> QK/T
";

/// Variables with their dimensions in `MODEL`.
pub const VARS: [&str; 8] = ["a", "b", "c", "d", "e", "s", "g", "t"];

pub struct Fixture {
    pub spec: ModelSpec,
    pub env: Env,
}

pub fn fixture() -> Fixture {
    let spec = parse_model(MODEL).unwrap();
    let env = Env::from_spec(&spec, &IndexMap::new()).unwrap();
    Fixture { spec, env }
}

pub fn system() -> Arc<DimensionSystem> {
    DimensionSystem::new(["T", "QK", "QP"]).unwrap()
}

fn node(kind: ExprKind) -> Expr {
    Expr::new(kind, Span::new(1, 0, 0))
}

pub fn var(name: &str) -> Expr {
    node(ExprKind::Var(name.to_string()))
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Rational::new(p, q))
}

pub fn arb_dimension() -> impl Strategy<Value = Dimension> {
    let sys = system();
    prop::collection::vec(arb_rational(), 3).prop_map(move |v| Dimension::from_vec(&sys, &v))
}

/// Dimensions drawn half the time from a small pool, so that equal pairs
/// are common.
pub fn arb_dimension_clustered() -> impl Strategy<Value = Dimension> {
    let sys = system();
    let pool: Vec<Dimension> = [[0, 0, 0], [0, 1, 0], [-1, 1, 0], [1, 0, -1]]
        .iter()
        .map(|v| Dimension::from_vec(&sys, &v.map(Rational::from_integer)))
        .collect();
    prop_oneof![prop::sample::select(pool), arb_dimension()]
}

fn arb_exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        4 => arb_rational().prop_map(Exponent::Rational),
        1 => Just(Exponent::Param("al".to_string())),
    ]
}

/// Expressions over `MODEL`. With `calls`, derivatives, integrals and
/// function applications are included.
pub fn arb_expr(calls: bool) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        4 => prop::sample::select(VARS.to_vec()).prop_map(var),
        1 => (0u32..40).prop_map(|n| node(ExprKind::Num(n as f64 / 4.0))),
    ];
    leaf.prop_recursive(4, 24, 3, move |inner| {
        let mut options: Vec<BoxedStrategy<Expr>> = vec![
            prop::collection::vec(inner.clone(), 2..4)
                .prop_map(|v| node(ExprKind::Add(v)))
                .boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| node(ExprKind::Sub(Box::new(a), Box::new(b))))
                .boxed(),
            prop::collection::vec(inner.clone(), 2..4)
                .prop_map(|v| node(ExprKind::Mul(v)))
                .boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| node(ExprKind::Div(Box::new(a), Box::new(b))))
                .boxed(),
            (inner.clone(), arb_exponent())
                .prop_map(|(a, e)| node(ExprKind::Pow(Box::new(a), e)))
                .boxed(),
            inner.clone().prop_map(|a| node(ExprKind::Neg(Box::new(a)))).boxed(),
        ];
        if calls {
            options.push(inner.clone().prop_map(|a| node(ExprKind::Der(Box::new(a)))).boxed());
            options.push(inner.clone().prop_map(|a| node(ExprKind::Integ(Box::new(a)))).boxed());
            options.push(
                inner
                    .clone()
                    .prop_map(|a| node(ExprKind::Call("exp".into(), vec![a])))
                    .boxed(),
            );
            options.push(
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| node(ExprKind::Call("F".into(), vec![a, b])))
                    .boxed(),
            );
        }
        prop::strategy::Union::new(options)
    })
}

/// A product of base-dimension variables with dimension `d`, structurally
/// unrelated to whatever it replaces.
pub fn witness(d: &Dimension) -> Expr {
    let mut factors = Vec::new();
    for (base, v) in [("T", "t"), ("QK", "a"), ("QP", "e")] {
        let x = d.exponent(base);
        if x != Rational::from_integer(0) {
            factors.push(node(ExprKind::Pow(Box::new(var(v)), Exponent::Rational(x))));
        }
    }
    match factors.len() {
        0 => var("s"),
        1 => factors.pop().unwrap(),
        _ => node(ExprKind::Mul(factors)),
    }
}

fn nth_replaced(e: &Expr, target: usize, counter: &mut usize, with: &Expr) -> Expr {
    let here = *counter;
    *counter += 1;
    if here == target {
        return with.clone();
    }
    let mut r = |x: &Expr| nth_replaced(x, target, counter, with);
    let kind = match &e.kind {
        ExprKind::Num(_) | ExprKind::Var(_) => e.kind.clone(),
        ExprKind::Add(xs) => ExprKind::Add(xs.iter().map(&mut r).collect()),
        ExprKind::Mul(xs) => ExprKind::Mul(xs.iter().map(&mut r).collect()),
        ExprKind::Call(f, xs) => ExprKind::Call(f.clone(), xs.iter().map(&mut r).collect()),
        ExprKind::Sub(a, b) => {
            let a = r(a);
            ExprKind::Sub(Box::new(a), Box::new(r(b)))
        }
        ExprKind::Div(a, b) => {
            let a = r(a);
            ExprKind::Div(Box::new(a), Box::new(r(b)))
        }
        ExprKind::Pow(a, x) => ExprKind::Pow(Box::new(r(a)), x.clone()),
        ExprKind::Neg(a) => ExprKind::Neg(Box::new(r(a))),
        ExprKind::Der(a) => ExprKind::Der(Box::new(r(a))),
        ExprKind::Integ(a) => ExprKind::Integ(Box::new(r(a))),
    };
    node(kind)
}

fn nodes(e: &Expr) -> Vec<&Expr> {
    let mut out = Vec::new();
    e.walk(&mut |x| out.push(x));
    out
}

fn homogeneous(f: &Fixture, l: &Expr, r: &Expr) -> bool {
    check_equation("p", l, r, &f.env).unwrap().is_homogeneous()
}

// ---- dimension algebra ----

pub fn group_laws(a: &Dimension, b: &Dimension, c: &Dimension) -> Result<(), TestCaseError> {
    let one = Dimension::one(a.system());
    let ab = a.mul(b).unwrap();
    prop_assert_eq!(&ab, &b.mul(a).unwrap());
    prop_assert_eq!(ab.mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
    prop_assert_eq!(&a.mul(&one).unwrap(), a);
    prop_assert!(a.mul(&a.inv()).unwrap().is_dimensionless());
    prop_assert_eq!(a.div(b).unwrap(), a.mul(&b.inv()).unwrap());
    Ok(())
}

pub fn pow_laws(a: &Dimension, p: Rational, q: Rational) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.pow(p).pow(q), a.pow(p * q));
    prop_assert!(a.pow(Rational::from_integer(0)).is_dimensionless());
    prop_assert_eq!(a.pow(Rational::from_integer(-1)), a.inv());
    // Canonical form: equal exponent vectors, equal dimensions, no zeros.
    let rebuilt = Dimension::from_vec(a.system(), &a.to_vec());
    prop_assert_eq!(&rebuilt, a);
    prop_assert!(a.exponents().all(|(_, x)| x != Rational::from_integer(0)));
    Ok(())
}

pub fn add_iff_equidimensional(a: &Dimension, b: &Dimension, x: f64, y: f64) -> Result<(), TestCaseError> {
    let qa = Quantity::new(x, a.clone()).unwrap();
    let qb = Quantity::new(y, b.clone()).unwrap();
    match qa.add(&qb) {
        Ok(s) => {
            prop_assert_eq!(a, b);
            prop_assert_eq!(s.dim(), a);
            prop_assert_eq!(s.value(), x + y);
        }
        Err(DimError::NonEquidimensional { .. }) => prop_assert_ne!(a, b),
        Err(e) => return Err(TestCaseError::fail(format!("unexpected {e}"))),
    }
    Ok(())
}

// ---- language and checker ----

pub fn round_trip(f: &Fixture, e: &Expr) -> Result<(), TestCaseError> {
    let text = format_expr(e);
    let back = parse_expr(&text, &f.spec).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
    prop_assert_eq!(&back, e, "{}", text);
    prop_assert_eq!(format_expr(&back), text);
    Ok(())
}

pub fn symmetry(f: &Fixture, l: &Expr, r: &Expr) -> Result<(), TestCaseError> {
    prop_assert_eq!(homogeneous(f, l, r), homogeneous(f, r, l));
    Ok(())
}

/// Replaces the `pick`-th node of `l` (pre-order) by a different expression
/// of the same dimension; the verdict of `l = r` must not change.
pub fn substitution(f: &Fixture, l: &Expr, r: &Expr, pick: usize) -> Result<(), TestCaseError> {
    let all = nodes(l);
    let target = pick % all.len();
    let Ok(d) = infer_dimension(all[target], &f.env) else {
        return Ok(());
    };
    let l2 = nth_replaced(l, target, &mut 0, &witness(&d));
    prop_assert_eq!(homogeneous(f, l, r), homogeneous(f, &l2, r), "{}", format_expr(&l2));
    Ok(())
}

pub fn scaling(f: &Fixture, l: &Expr, r: &Expr, v: &str) -> Result<(), TestCaseError> {
    let scale = |e: &Expr| node(ExprKind::Mul(vec![e.clone(), var(v)]));
    prop_assert_eq!(homogeneous(f, l, r), homogeneous(f, &scale(l), &scale(r)));
    Ok(())
}

/// Evaluates `e` over quantities. Values enter powers by magnitude so that
/// only dimensional failures remain.
fn evaluate(e: &Expr, f: &Fixture, values: &[f64]) -> Result<Quantity, DimError> {
    let ev = |x: &Expr| evaluate(x, f, values);
    match &e.kind {
        ExprKind::Num(x) => Quantity::scalar(*x, &Dimension::one(&f.spec.system)),
        ExprKind::Var(name) => {
            let i = VARS.iter().position(|v| v == name).unwrap();
            Quantity::new(values[i], f.env.dim_of(name).unwrap().clone())
        }
        ExprKind::Add(xs) => {
            let mut acc = ev(&xs[0])?;
            for x in &xs[1..] {
                acc = acc.add(&ev(x)?)?;
            }
            Ok(acc)
        }
        ExprKind::Sub(a, b) => ev(a)?.sub(&ev(b)?),
        ExprKind::Mul(xs) => {
            let mut acc = ev(&xs[0])?;
            for x in &xs[1..] {
                acc = acc.mul(&ev(x)?)?;
            }
            Ok(acc)
        }
        ExprKind::Div(a, b) => ev(a)?.div(&ev(b)?),
        ExprKind::Pow(a, x) => {
            let base = ev(a)?;
            let r = match x {
                Exponent::Rational(r) => *r,
                Exponent::Param(_) => Rational::new(1, 3),
            };
            Quantity::new(base.value().abs(), base.dim().clone())?.pow(r)
        }
        ExprKind::Neg(a) => Ok(ev(a)?.neg()),
        _ => unreachable!("generated without calls"),
    }
}

/// `infer_dimension` fails exactly when quantity arithmetic meets a
/// dimensional mismatch, and otherwise agrees on the dimension.
pub fn soundness(f: &Fixture, e: &Expr, values: &[f64]) -> Result<(), TestCaseError> {
    let inferred = infer_dimension(e, &f.env);
    match evaluate(e, f, values) {
        Ok(q) => prop_assert_eq!(inferred.ok(), Some(q.dim().clone())),
        Err(DimError::NonEquidimensional { .. }) => {
            prop_assert!(matches!(inferred, Err(CheckError::Violation(_))))
        }
        // Zero divisors and overflow say nothing about dimensions.
        Err(_) => {}
    }
    Ok(())
}
