//! Exact rational exponents.
//!
//! Backed by `num_rational::Rational64`, which keeps values normalized
//! (`gcd(|num|, den) == 1`, `den > 0`).

use num_traits::{CheckedMul, ToPrimitive, Zero};

pub type Rational = num_rational::Rational64;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p`, `p/q`, or a finite decimal such as `0.05` or `1.5e-2` into an
/// exact rational. Returns `None` on malformed text, a zero denominator, or
/// overflow of 64-bit components.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let mut value = Rational::from_integer(digits.parse::<i64>().ok()?);
    let scale = exp - frac.len() as i32;
    let ten = Rational::from_integer(10);
    let step = if scale >= 0 { ten } else { ten.recip() };
    for _ in 0..scale.unsigned_abs() {
        value = value.checked_mul(&step)?;
    }
    Some(if neg { -value } else { value })
}

/// `p/q` form, or just `p` when the denominator is one.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
