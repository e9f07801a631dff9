use std::sync::Arc;

use super::ast::*;
use super::lexer::{tokenize, Token, TokenKind};
use super::ModelError;
use crate::dim::rational::{int, parse_rational};
use crate::dim::{DimError, Dimension, DimensionSystem, Rational};

pub const KEYWORDS: &[&str] = &[
    "dims",
    "var",
    "param",
    "fn",
    "eq",
    "infer",
    "transcendental",
    "der",
    "integ",
];

fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

struct Cursor<'t> {
    toks: &'t [Token],
    pos: usize,
}

impl<'t> Cursor<'t> {
    fn new(toks: &'t [Token]) -> Self {
        Self { toks, pos: 0 }
    }

    fn peek(&self) -> &'t Token {
        &self.toks[self.pos]
    }

    fn peek_kind(&self) -> &'t TokenKind {
        &self.peek().kind
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.toks[self.pos];
        if t.kind != TokenKind::Eol {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: impl Into<String>) -> ModelError {
        let t = self.peek();
        ModelError::Parse {
            span: t.span,
            expected: expected.into(),
            found: t.kind.to_string(),
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<Span, ModelError> {
        if *self.peek_kind() == kind {
            Ok(self.bump().span)
        } else {
            Err(self.error(expected))
        }
    }

    fn ident(&mut self, expected: &str) -> Result<(String, Span), ModelError> {
        match self.peek_kind() {
            TokenKind::Ident(s) if !is_keyword(s) => {
                let t = self.bump();
                Ok((s.clone(), t.span))
            }
            _ => Err(self.error(expected)),
        }
    }

    fn end(&mut self) -> Result<(), ModelError> {
        self.expect(TokenKind::Eol, "end of line").map(|_| ())
    }

    fn integer(&mut self) -> Result<(i64, Span), ModelError> {
        match self.peek_kind() {
            TokenKind::Number(text) if text.chars().all(|c| c.is_ascii_digit()) => {
                let span = self.peek().span;
                let n = text.parse::<i64>().map_err(|_| ModelError::Parse {
                    span,
                    expected: "integer that fits in 64 bits".into(),
                    found: format!("`{text}`"),
                })?;
                self.bump();
                Ok((n, span))
            }
            _ => Err(self.error("integer")),
        }
    }

    /// `n` or `(p)` / `(p/q)` with optional sign inside the parentheses.
    fn rational_exponent(&mut self) -> Result<(Rational, Span), ModelError> {
        if let TokenKind::Number(_) = self.peek_kind() {
            let (n, span) = self.integer()?;
            return Ok((int(n), span));
        }
        let open = self.expect(
            TokenKind::LParen,
            "exponent (integer, `(p/q)` or parameter name)",
        )?;
        let neg = if *self.peek_kind() == TokenKind::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (num, _) = self.integer()?;
        let den = if *self.peek_kind() == TokenKind::Slash {
            self.bump();
            let (den, span) = self.integer()?;
            if den == 0 {
                return Err(ModelError::Parse {
                    span,
                    expected: "nonzero denominator".into(),
                    found: "`0`".into(),
                });
            }
            den
        } else {
            1
        };
        let close = self.expect(TokenKind::RParen, "`)`")?;
        let num = if neg { -num } else { num };
        Ok((Rational::new(num, den), open.to(close)))
    }

    /// `[-] number [/ number]` as an exact rational.
    fn rational_value(&mut self) -> Result<Rational, ModelError> {
        let start = self.peek().span;
        let mut text = String::new();
        if *self.peek_kind() == TokenKind::Minus {
            self.bump();
            text.push('-');
        }
        match self.peek_kind() {
            TokenKind::Number(n) => {
                text.push_str(n);
                self.bump();
            }
            _ => return Err(self.error("rational value")),
        }
        if *self.peek_kind() == TokenKind::Slash {
            self.bump();
            match self.peek_kind() {
                TokenKind::Number(n) => {
                    text.push('/');
                    text.push_str(n);
                    self.bump();
                }
                _ => return Err(self.error("denominator")),
            }
        }
        let end = self.toks[self.pos.saturating_sub(1)].span;
        parse_rational(&text).ok_or_else(|| ModelError::Parse {
            span: start.to(end),
            expected: "exact rational value".into(),
            found: format!("`{text}`"),
        })
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses a dimension expression such as `QK/(QP*T)`, `1` or `QK^(2/3)*T^(-1)`.
pub fn parse_dimension(text: &str, system: &Arc<DimensionSystem>) -> Result<Dimension, ModelError> {
    let toks = tokenize(1, text)?;
    let mut cur = Cursor::new(&toks);
    let d = dim_expr(&mut cur, system)?;
    cur.end()?;
    Ok(d)
}

fn dim_error(e: DimError, span: Span) -> ModelError {
    match e {
        DimError::UnknownBase(name) => ModelError::UnknownBaseDimension { name, span },
        other => ModelError::Parse {
            span,
            expected: "dimension".into(),
            found: other.to_string(),
        },
    }
}

fn dim_expr(cur: &mut Cursor<'_>, sys: &Arc<DimensionSystem>) -> Result<Dimension, ModelError> {
    let mut acc = dim_factor(cur, sys)?;
    loop {
        let span = cur.peek().span;
        match cur.peek_kind() {
            TokenKind::Star => {
                cur.bump();
                let rhs = dim_factor(cur, sys)?;
                acc = acc.mul(&rhs).map_err(|e| dim_error(e, span))?;
            }
            TokenKind::Slash => {
                cur.bump();
                let rhs = dim_factor(cur, sys)?;
                acc = acc.div(&rhs).map_err(|e| dim_error(e, span))?;
            }
            _ => return Ok(acc),
        }
    }
}

fn dim_factor(cur: &mut Cursor<'_>, sys: &Arc<DimensionSystem>) -> Result<Dimension, ModelError> {
    let base = match cur.peek_kind() {
        TokenKind::Number(n) if n == "1" => {
            cur.bump();
            return Ok(Dimension::one(sys));
        }
        TokenKind::Ident(name) => {
            let span = cur.bump().span;
            Dimension::base(sys, name).map_err(|e| dim_error(e, span))?
        }
        TokenKind::LParen => {
            cur.bump();
            let d = dim_expr(cur, sys)?;
            cur.expect(TokenKind::RParen, "`)`")?;
            d
        }
        _ => return Err(cur.error("base dimension, `1` or `(`")),
    };
    if *cur.peek_kind() == TokenKind::Caret {
        cur.bump();
        let (e, _) = cur.rational_exponent()?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

struct PendingEq {
    name: String,
    line: usize,
    toks: Vec<Token>,
    pos: usize,
}

/// Parses a complete model file.
pub fn parse_model(text: &str) -> Result<ModelSpec, ModelError> {
    let mut spec: Option<ModelSpec> = None;
    let mut pending: Vec<PendingEq> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let code = strip_comment(raw);
        if code.trim().is_empty() {
            continue;
        }
        let toks = tokenize(line_no, code)?;
        let mut cur = Cursor::new(&toks);
        let kw = match cur.peek_kind() {
            TokenKind::Ident(s) => s.clone(),
            _ => return Err(cur.error("declaration keyword")),
        };
        let kw_span = cur.bump().span;

        let Some(model) = spec.as_mut() else {
            if kw != "dims" {
                return Err(ModelError::Parse {
                    span: kw_span,
                    expected: "`dims` declaration".into(),
                    found: format!("`{kw}`"),
                });
            }
            spec = Some(ModelSpec::empty(parse_dims(&mut cur)?));
            continue;
        };

        match kw.as_str() {
            "var" => {
                let (name, span) = cur.ident("variable name")?;
                declare(model, &name, span)?;
                cur.expect(TokenKind::Colon, "`:`")?;
                let dim = match cur.peek_kind() {
                    TokenKind::Ident(s) if s == "infer" => {
                        cur.bump();
                        DimAnnot::Infer
                    }
                    _ => DimAnnot::Known(dim_expr(&mut cur, &model.system)?),
                };
                cur.end()?;
                model
                    .vars
                    .insert(name.clone(), VarDecl { name, dim, span });
            }
            "param" => {
                let (name, span) = cur.ident("parameter name")?;
                declare(model, &name, span)?;
                cur.expect(TokenKind::Colon, "`:`")?;
                let dim = dim_expr(&mut cur, &model.system)?;
                let value = if *cur.peek_kind() == TokenKind::Equals {
                    cur.bump();
                    Some(cur.rational_value()?)
                } else {
                    None
                };
                cur.end()?;
                model.params.insert(
                    name.clone(),
                    ParamDecl {
                        name,
                        dim,
                        value,
                        span,
                    },
                );
            }
            "fn" => {
                let (name, span) = cur.ident("function name")?;
                declare(model, &name, span)?;
                let sig = parse_fn_sig(&mut cur, &model.system, name.clone(), span)?;
                cur.end()?;
                model.funcs.insert(name, sig);
            }
            "eq" => {
                let (name, span) = cur.ident("equation name")?;
                if pending.iter().any(|p| p.name == name) {
                    return Err(ModelError::DuplicateName { name, span });
                }
                cur.expect(TokenKind::Colon, "`:`")?;
                let pos = cur.pos;
                pending.push(PendingEq {
                    name,
                    line: line_no,
                    toks,
                    pos,
                });
            }
            "dims" => {
                return Err(ModelError::Parse {
                    span: kw_span,
                    expected: "`var`, `param`, `fn` or `eq` (only one `dims` line)".into(),
                    found: "`dims`".into(),
                })
            }
            other => {
                return Err(ModelError::Parse {
                    span: kw_span,
                    expected: "`var`, `param`, `fn` or `eq`".into(),
                    found: format!("`{other}`"),
                })
            }
        }
    }

    let Some(mut model) = spec else {
        return Err(ModelError::Parse {
            span: Span::new(last_line + 1, 0, 1),
            expected: "`dims` declaration".into(),
            found: "end of file".into(),
        });
    };

    for p in pending {
        let mut cur = Cursor {
            toks: &p.toks,
            pos: p.pos,
        };
        let mut ep = ExprParser {
            spec: &model,
            cur: &mut cur,
        };
        let lhs = ep.expr()?;
        ep.cur.expect(TokenKind::Equals, "`=`")?;
        let rhs = ep.expr()?;
        ep.cur.end()?;
        model.eqs.push(Equation {
            name: p.name,
            lhs,
            rhs,
            line: p.line,
        });
    }
    Ok(model)
}

fn parse_dims(cur: &mut Cursor<'_>) -> Result<Arc<DimensionSystem>, ModelError> {
    let mut names: Vec<String> = Vec::new();
    while let TokenKind::Ident(name) = cur.peek_kind() {
        let span = cur.bump().span;
        if names.contains(name) {
            return Err(ModelError::DuplicateName {
                name: name.clone(),
                span,
            });
        }
        if is_keyword(name) {
            return Err(ModelError::Parse {
                span,
                expected: "base dimension name".into(),
                found: format!("`{name}`"),
            });
        }
        names.push(name.clone());
    }
    if names.is_empty() {
        return Err(cur.error("base dimension name"));
    }
    cur.end()?;
    Ok(DimensionSystem::new(names).expect("validated base names"))
}

fn parse_fn_sig(
    cur: &mut Cursor<'_>,
    sys: &Arc<DimensionSystem>,
    name: String,
    span: Span,
) -> Result<FuncSig, ModelError> {
    if matches!(cur.peek_kind(), TokenKind::Ident(s) if s == "transcendental") {
        cur.bump();
        cur.expect(TokenKind::LParen, "`(`")?;
        let (arity, aspan) = cur.integer()?;
        if arity < 1 {
            return Err(ModelError::Parse {
                span: aspan,
                expected: "arity of at least 1".into(),
                found: format!("`{arity}`"),
            });
        }
        cur.expect(TokenKind::RParen, "`)`")?;
        return Ok(FuncSig {
            name,
            arity: arity as usize,
            kind: FuncKind::Transcendental,
            span,
        });
    }
    cur.expect(TokenKind::LParen, "`(` or `transcendental`")?;
    let mut args = vec![dim_expr(cur, sys)?];
    while *cur.peek_kind() == TokenKind::Comma {
        cur.bump();
        args.push(dim_expr(cur, sys)?);
    }
    cur.expect(TokenKind::RParen, "`,` or `)`")?;
    cur.expect(TokenKind::Arrow, "`->`")?;
    let result = dim_expr(cur, sys)?;
    Ok(FuncSig {
        name,
        arity: args.len(),
        kind: FuncKind::Declared { args, result },
        span,
    })
}

fn declare(model: &ModelSpec, name: &str, span: Span) -> Result<(), ModelError> {
    if model.symbol(name).is_some() {
        Err(ModelError::DuplicateName {
            name: name.to_string(),
            span,
        })
    } else {
        Ok(())
    }
}

/// Parses a single expression against the declarations of `spec`.
pub fn parse_expr(text: &str, spec: &ModelSpec) -> Result<Expr, ModelError> {
    let toks = tokenize(1, text)?;
    let mut cur = Cursor::new(&toks);
    let mut ep = ExprParser {
        spec,
        cur: &mut cur,
    };
    let e = ep.expr()?;
    ep.cur.end()?;
    Ok(e)
}

struct ExprParser<'a, 't> {
    spec: &'a ModelSpec,
    cur: &'a mut Cursor<'t>,
}

impl ExprParser<'_, '_> {
    // expr := signed (('+' | '-') signed)*
    fn expr(&mut self) -> Result<Expr, ModelError> {
        let mut acc = self.signed()?;
        // Only sums built in this loop are extended, so `(a + b) + c` keeps
        // its nesting.
        let mut open_sum = false;
        loop {
            match self.cur.peek_kind() {
                TokenKind::Plus => {
                    self.cur.bump();
                    let rhs = self.signed()?;
                    let span = acc.span.to(rhs.span);
                    match (&mut acc.kind, open_sum) {
                        (ExprKind::Add(terms), true) => {
                            terms.push(rhs);
                            acc.span = span;
                        }
                        _ => {
                            acc = Expr::new(ExprKind::Add(vec![acc, rhs]), span);
                            open_sum = true;
                        }
                    }
                }
                TokenKind::Minus => {
                    self.cur.bump();
                    let rhs = self.signed()?;
                    let span = acc.span.to(rhs.span);
                    acc = Expr::new(ExprKind::Sub(Box::new(acc), Box::new(rhs)), span);
                    open_sum = false;
                }
                _ => return Ok(acc),
            }
        }
    }

    // signed := '-' signed | term
    fn signed(&mut self) -> Result<Expr, ModelError> {
        if *self.cur.peek_kind() == TokenKind::Minus {
            let start = self.cur.bump().span;
            let inner = self.signed()?;
            let span = start.to(inner.span);
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        self.term()
    }

    // term := power (('*' | '/') power)*
    fn term(&mut self) -> Result<Expr, ModelError> {
        let mut acc = self.power()?;
        let mut open_product = false;
        loop {
            match self.cur.peek_kind() {
                TokenKind::Star => {
                    self.cur.bump();
                    let rhs = self.power()?;
                    let span = acc.span.to(rhs.span);
                    match (&mut acc.kind, open_product) {
                        (ExprKind::Mul(factors), true) => {
                            factors.push(rhs);
                            acc.span = span;
                        }
                        _ => {
                            acc = Expr::new(ExprKind::Mul(vec![acc, rhs]), span);
                            open_product = true;
                        }
                    }
                }
                TokenKind::Slash => {
                    self.cur.bump();
                    let rhs = self.power()?;
                    let span = acc.span.to(rhs.span);
                    acc = Expr::new(ExprKind::Div(Box::new(acc), Box::new(rhs)), span);
                    open_product = false;
                }
                _ => return Ok(acc),
            }
        }
    }

    // power := primary ['^' exponent]
    fn power(&mut self) -> Result<Expr, ModelError> {
        let base = self.primary()?;
        if *self.cur.peek_kind() != TokenKind::Caret {
            return Ok(base);
        }
        self.cur.bump();
        let (exp, exp_span) = self.exponent()?;
        if *self.cur.peek_kind() == TokenKind::Caret {
            return Err(self
                .cur
                .error("end of exponent (parenthesize the base to chain powers)"));
        }
        let span = base.span.to(exp_span);
        Ok(Expr::new(ExprKind::Pow(Box::new(base), exp), span))
    }

    fn exponent(&mut self) -> Result<(Exponent, Span), ModelError> {
        if let TokenKind::Ident(name) = self.cur.peek_kind() {
            let span = self.cur.peek().span;
            return match self.spec.symbol(name) {
                Some(Symbol::Param(_)) => {
                    self.cur.bump();
                    Ok((Exponent::Param(name.clone()), span))
                }
                None if !is_keyword(name) => Err(ModelError::UndeclaredIdentifier {
                    name: name.clone(),
                    span,
                }),
                _ => Err(self.cur.error("rational literal or parameter name")),
            };
        }
        let (r, span) = self.cur.rational_exponent()?;
        Ok((Exponent::Rational(r), span))
    }

    fn primary(&mut self) -> Result<Expr, ModelError> {
        let tok = self.cur.peek();
        match &tok.kind {
            TokenKind::Number(text) => {
                self.cur.bump();
                let v: f64 = text.parse().map_err(|_| ModelError::Parse {
                    span: tok.span,
                    expected: "number".into(),
                    found: format!("`{text}`"),
                })?;
                Ok(Expr::new(ExprKind::Num(v), tok.span))
            }
            TokenKind::LParen => {
                self.cur.bump();
                let e = self.expr()?;
                self.cur.expect(TokenKind::RParen, "`)`")?;
                Ok(e)
            }
            TokenKind::Ident(name) if name == "der" || name == "integ" => {
                self.cur.bump();
                if self.spec.system.time_index().is_none() {
                    return Err(ModelError::UnknownBaseDimension {
                        name: crate::dim::TIME_BASE.to_string(),
                        span: tok.span,
                    });
                }
                self.cur.expect(TokenKind::LParen, "`(`")?;
                let inner = self.expr()?;
                let close = self.cur.expect(TokenKind::RParen, "`)`")?;
                let span = tok.span.to(close);
                let kind = if name == "der" {
                    ExprKind::Der(Box::new(inner))
                } else {
                    ExprKind::Integ(Box::new(inner))
                };
                Ok(Expr::new(kind, span))
            }
            TokenKind::Ident(name) if !is_keyword(name) => {
                self.cur.bump();
                let is_call = *self.cur.peek_kind() == TokenKind::LParen;
                match (self.spec.symbol(name), is_call) {
                    (None, _) => Err(ModelError::UndeclaredIdentifier {
                        name: name.clone(),
                        span: tok.span,
                    }),
                    (Some(Symbol::Func(sig)), true) => self.call(sig, tok.span),
                    (Some(Symbol::Func(_)), false) => Err(self.cur.error("`(` after function name")),
                    (Some(_), true) => Err(ModelError::Parse {
                        span: tok.span,
                        expected: "function name".into(),
                        found: format!("`{name}`"),
                    }),
                    (Some(_), false) => Ok(Expr::new(ExprKind::Var(name.clone()), tok.span)),
                }
            }
            _ => Err(self.cur.error("expression")),
        }
    }

    fn call(&mut self, sig: &FuncSig, name_span: Span) -> Result<Expr, ModelError> {
        self.cur.bump();
        let mut args = vec![self.expr()?];
        while *self.cur.peek_kind() == TokenKind::Comma {
            self.cur.bump();
            args.push(self.expr()?);
        }
        let close = self.cur.expect(TokenKind::RParen, "`,` or `)`")?;
        if args.len() != sig.arity {
            return Err(ModelError::Parse {
                span: name_span,
                expected: format!("{} argument(s) for `{}`", sig.arity, sig.name),
                found: format!("{}", args.len()),
            });
        }
        Ok(Expr::new(
            ExprKind::Call(sig.name.clone(), args),
            name_span.to(close),
        ))
    }
}
