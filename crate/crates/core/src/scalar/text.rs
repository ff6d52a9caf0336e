//! Parsing of the canonical scalar renderings produced by `Display`.

use std::str::FromStr;

use num::{BigInt, One, Zero};
use thiserror::Error;

use super::{QPoly, QRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar {input:?}: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: &'static str,
}

fn err(input: &str, reason: &'static str) -> ParseScalarError {
    ParseScalarError { input: input.to_string(), reason }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).ok()?;
            let q = BigInt::from_str(q).ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// One unsigned term: `c`, `q`, `q^e`, `c*q`, `c*q^e`.
fn parse_term(t: &str) -> Option<(Rational, usize)> {
    let (coeff, var) = match t.split_once('*') {
        Some((c, v)) => (parse_rational(c)?, v),
        None if t.starts_with('q') => (Rational::one(), t),
        None => return Some((parse_rational(t)?, 0)),
    };
    let exp = match var.strip_prefix('q')? {
        "" => 1,
        rest => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some((coeff, exp))
}

pub(super) fn parse_qpoly(input: &str) -> Result<QPoly, ParseScalarError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(&compact);
    if body.is_empty() {
        return Err(err(input, "empty polynomial"));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut start = 0;
    let bytes = body.as_bytes();
    let mut i = 1;
    let mut bounds = Vec::new();
    while i <= bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            bounds.push((start, i));
            start = i;
        }
        i += 1;
    }
    for (a, b) in bounds {
        let tok = &body[a..b];
        let (neg, mag) = match tok.as_bytes()[0] {
            b'-' => (true, &tok[1..]),
            b'+' => (false, &tok[1..]),
            _ => (false, tok),
        };
        let (c, e) = parse_term(mag).ok_or_else(|| err(input, "malformed term"))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rational::zero());
        }
        coeffs[e] += if neg { -c } else { c };
    }
    Ok(QPoly::from_rationals(&coeffs))
}

impl FromStr for QPoly {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_qpoly(s)
    }
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' if depth == 0 && s[i..].starts_with(" / ") => {
                return Some((&s[..i], &s[i + 3..]));
            }
            _ => {}
        }
    }
    None
}

impl FromStr for QRat {
    type Err = ParseScalarError;
    /// Accepts the `Display` form: `num` or `num / den`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match split_top_level_slash(s) {
            Some((n, d)) => {
                let den = parse_qpoly(d)?;
                if den.is_zero() {
                    return Err(err(s, "zero denominator"));
                }
                Ok(QRat::new(parse_qpoly(n)?, den))
            }
            None => Ok(QRat::from_poly(parse_qpoly(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn parses_display_forms() {
        for text in ["0", "1 + q - 1/2*q^3", "-q", "q / (1 + q)", "(1/2) / (1 + q)", "1 / q^2"] {
            let r: QRat = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
    }

    #[test]
    fn parses_loose_whitespace() {
        let p: QPoly = "2*q^2+q-3".parse().unwrap();
        assert_eq!(p, QPoly::from_ints(&[-3, 1, 2]));
        let c: QPoly = "-3/4".parse().unwrap();
        assert_eq!(c, QPoly::constant(ratio(-3, 4)));
    }

    #[test]
    fn rejects_garbage() {
        assert!("x + 1".parse::<QPoly>().is_err());
        assert!("1 / 0".parse::<QRat>().is_err());
    }
}
