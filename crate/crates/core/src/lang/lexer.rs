use std::fmt;

use super::{ModelError, Span};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Colon,
    Equals,
    Arrow,
    Eol,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::Number(s) => write!(f, "`{s}`"),
            TokenKind::Plus => f.write_str("`+`"),
            TokenKind::Minus => f.write_str("`-`"),
            TokenKind::Star => f.write_str("`*`"),
            TokenKind::Slash => f.write_str("`/`"),
            TokenKind::Caret => f.write_str("`^`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Colon => f.write_str("`:`"),
            TokenKind::Equals => f.write_str("`=`"),
            TokenKind::Arrow => f.write_str("`->`"),
            TokenKind::Eol => f.write_str("end of line"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

/// Splits one source line (comment already removed) into tokens. The result
/// always ends with an `Eol` token positioned just past the last character.
pub fn tokenize(line_no: usize, text: &str) -> Result<Vec<Token>, ModelError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = |kind| Token {
            kind,
            span: Span::new(line_no, start, start + 1),
        };
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push(single(TokenKind::Plus)),
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Token {
                    kind: TokenKind::Arrow,
                    span: Span::new(line_no, start, start + 2),
                });
                i += 2;
                continue;
            }
            '-' => out.push(single(TokenKind::Minus)),
            '*' => out.push(single(TokenKind::Star)),
            '/' => out.push(single(TokenKind::Slash)),
            '^' => out.push(single(TokenKind::Caret)),
            '(' => out.push(single(TokenKind::LParen)),
            ')' => out.push(single(TokenKind::RParen)),
            ',' => out.push(single(TokenKind::Comma)),
            ':' => out.push(single(TokenKind::Colon)),
            '=' => out.push(single(TokenKind::Equals)),
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    kind: TokenKind::Ident(chars[start..i].iter().collect()),
                    span: Span::new(line_no, start, i),
                });
                continue;
            }
            c if c.is_ascii_digit() => {
                i = scan_number(&chars, i);
                out.push(Token {
                    kind: TokenKind::Number(chars[start..i].iter().collect()),
                    span: Span::new(line_no, start, i),
                });
                continue;
            }
            other => {
                return Err(ModelError::Parse {
                    span: Span::new(line_no, start, start + 1),
                    expected: "a token".into(),
                    found: format!("`{other}`"),
                })
            }
        }
        i += 1;
    }
    out.push(Token {
        kind: TokenKind::Eol,
        span: Span::new(line_no, chars.len(), chars.len() + 1),
    });
    Ok(out)
}

fn scan_number(chars: &[char], mut i: usize) -> usize {
    let digits = |mut i: usize| {
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(i);
    if chars.get(i) == Some(&'.') && chars.get(i + 1).is_some_and(|c| c.is_ascii_digit()) {
        i = digits(i + 1);
    }
    if matches!(chars.get(i), Some('e' | 'E')) {
        let mut j = i + 1;
        if matches!(chars.get(j), Some('+' | '-')) {
            j += 1;
        }
        if chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
            i = digits(j);
        }
    }
    i
}
