use super::ast::{Exponent, Expr, ExprKind};
use crate::dim::rational::format_rational;

// Binding strength, loosest first.
const SUM: u8 = 1;
const NEG: u8 = 2;
const PRODUCT: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn level(e: &Expr) -> u8 {
    match e.kind {
        ExprKind::Add(_) | ExprKind::Sub(..) => SUM,
        ExprKind::Neg(_) => NEG,
        ExprKind::Mul(_) | ExprKind::Div(..) => PRODUCT,
        ExprKind::Pow(..) => POWER,
        _ => ATOM,
    }
}

/// Canonical text for an expression. Parsing the output yields a
/// structurally equal tree.
pub fn format_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

fn wrapped(e: &Expr, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_expr(e, out);
        out.push(')');
    } else {
        write_expr(e, out);
    }
}

fn write_expr(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Num(v) => out.push_str(&format!("{v}")),
        ExprKind::Var(name) => out.push_str(name),
        ExprKind::Add(terms) => {
            for (i, t) in terms.iter().enumerate() {
                if i == 0 {
                    wrapped(t, matches!(t.kind, ExprKind::Add(_)), out);
                } else {
                    out.push_str(" + ");
                    wrapped(t, level(t) == SUM, out);
                }
            }
        }
        ExprKind::Sub(a, b) => {
            wrapped(a, false, out);
            out.push_str(" - ");
            wrapped(b, level(b) == SUM, out);
        }
        ExprKind::Mul(factors) => {
            for (i, f) in factors.iter().enumerate() {
                if i == 0 {
                    wrapped(f, level(f) < PRODUCT || matches!(f.kind, ExprKind::Mul(_)), out);
                } else {
                    out.push_str(" * ");
                    wrapped(f, level(f) <= PRODUCT, out);
                }
            }
        }
        ExprKind::Div(a, b) => {
            wrapped(a, level(a) < PRODUCT, out);
            out.push_str(" / ");
            wrapped(b, level(b) <= PRODUCT, out);
        }
        ExprKind::Pow(base, exp) => {
            wrapped(base, level(base) < ATOM, out);
            out.push('^');
            match exp {
                Exponent::Rational(r) if r.is_integer() && *r.numer() >= 0 => {
                    out.push_str(&format_rational(*r))
                }
                Exponent::Rational(r) => {
                    out.push('(');
                    out.push_str(&format_rational(*r));
                    out.push(')');
                }
                Exponent::Param(p) => out.push_str(p),
            }
        }
        ExprKind::Neg(a) => {
            out.push('-');
            wrapped(a, level(a) < NEG, out);
        }
        ExprKind::Der(a) => {
            out.push_str("der(");
            write_expr(a, out);
            out.push(')');
        }
        ExprKind::Integ(a) => {
            out.push_str("integ(");
            write_expr(a, out);
            out.push(')');
        }
        ExprKind::Call(name, args) => {
            out.push_str(name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(a, out);
            }
            out.push(')');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::{parse_expr, parse_model};

    fn round(text: &str) -> String {
        let m = parse_model(
            "dims T QK\nvar K : QK\nvar L : QK\nvar wK : 1\nvar wL : 1\nvar k : QK\nvar x : 1\n\
             param alpha : 1 = 1/3\nfn exp transcendental(1)",
        )
        .unwrap();
        let e = parse_expr(text, &m).unwrap();
        let s = format_expr(&e);
        assert_eq!(parse_expr(&s, &m).unwrap(), e, "{text} -> {s}");
        s
    }

    #[test]
    fn canonical_text() {
        assert_eq!(round("wK*K+wL*L"), "wK * K + wL * L");
        assert_eq!(round("k^(1/3)"), "k^(1/3)");
        assert_eq!(round("k^(-1)"), "k^(-1)");
        assert_eq!(round("k^2"), "k^2");
        assert_eq!(round("k^alpha"), "k^alpha");
        assert_eq!(round("der(K)"), "der(K)");
        assert_eq!(round("exp(-x*x)"), "exp(-x * x)");
    }

    #[test]
    fn parenthesization() {
        assert_eq!(round("K - (L - K)"), "K - (L - K)");
        assert_eq!(round("(K - L) - K"), "K - L - K");
        assert_eq!(round("K + (L + K)"), "K + (L + K)");
        assert_eq!(round("(K + L) + K"), "(K + L) + K");
        assert_eq!(round("(-x)^2"), "(-x)^2");
        assert_eq!(round("-x^2"), "-x^2");
        assert_eq!(round("(-x) * x"), "(-x) * x");
        assert_eq!(round("-(x - x)"), "-(x - x)");
        assert_eq!(round("x / (x * x)"), "x / (x * x)");
        assert_eq!(round("(k^2)^3"), "(k^2)^3");
        assert_eq!(round("x - -x"), "x - -x");
        assert_eq!(round("0.5 * x"), "0.5 * x");
    }
}
