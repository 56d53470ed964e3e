//! Exact rationals (GMP-backed) and their `"p/q"` string form.

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Parses `"p/q"` or `"p"`; no decimal points or exponents.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("not an exact rational: {s:?}")));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Integer = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den: Integer = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if den == 0 {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::from((num, den)))
}

/// Canonical lowest-terms form, `"p"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}
