use std::fmt;

use num::One;
use thiserror::Error;

use super::{ClassicalFamily, QFamily};
use crate::algebra::Poly;
use crate::scalar::{QRat, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown functional `{0}`")]
    UnknownFunctional(String),
    #[error("invalid parameter s = `{0}`")]
    InvalidS(String),
}

/// Any family, selected by its command-line name.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Classical(ClassicalFamily),
    Q(QFamily),
}

/// A polynomial over either scalar field.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Rational(Poly<Rational>),
    Q(Poly<QRat>),
}

impl AnyPoly {
    pub fn degree(&self) -> Option<usize> {
        match self {
            AnyPoly::Rational(p) => p.degree(),
            AnyPoly::Q(p) => p.degree(),
        }
    }

    /// Canonical rendering of the coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> String {
        match self {
            AnyPoly::Rational(p) => p.coeff(k).render(),
            AnyPoly::Q(p) => p.coeff(k).render(),
        }
    }
}

impl fmt::Display for AnyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPoly::Rational(p) => p.fmt(f),
            AnyPoly::Q(p) => p.fmt(f),
        }
    }
}

/// Canonical family name and whether it takes `s` and `m`.
pub fn family_key(name: &str) -> Option<(&'static str, bool, bool)> {
    Some(match name {
        "lucas" => ("lucas", false, false),
        "fibonacci" => ("fibonacci", false, false),
        "cheb_t" => ("cheb_t", false, false),
        "cheb_u" => ("cheb_u", false, false),
        "l" | "l_classical" => ("l", true, true),
        "v" | "v_classical" => ("v", true, true),
        "lq" | "l_q" => ("lq", true, true),
        "hq" | "h_q" => ("hq", true, false),
        "vq" | "v_q" => ("vq", true, true),
        "Hq" | "H_q" => ("Hq", true, false),
        "Rq" | "R_q" => ("Rq", false, true),
        "rq" | "r_q" => ("rq", false, false),
        _ => return None,
    })
}

/// Functional name → family whose functional it is, and the default `s`.
pub fn functional_key(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "lambda" => ("lucas", "1"),
        "lambda_star" => ("fibonacci", "1"),
        "cheb_t" => ("cheb_t", "1"),
        "cheb_u" => ("cheb_u", "1"),
        "lambda_m" => ("l", "-1"),
        "v_m" => ("v", "1"),
        "lambda_q" => ("lq", "-1"),
        "phi_q" => ("vq", "1"),
        "h_q" => ("hq", "1"),
        "hermite_q" => ("Hq", "1"),
        "r_q" => ("Rq", "1"),
        "r_inf" => ("rq", "1"),
        _ => return None,
    })
}

impl FamilySpec {
    /// `s` defaults to 1. Classical families parse `s` as a rational,
    /// q-families as a q-rational such as `-q^2` or `1 / q`.
    pub fn parse(name: &str, m: usize, s: Option<&str>) -> Result<Self, SpecError> {
        let (key, _, _) = family_key(name).ok_or_else(|| SpecError::UnknownFamily(name.to_string()))?;
        let bad = || SpecError::InvalidS(s.unwrap_or_default().to_string());
        let rs = || s.map_or(Ok(Rational::one()), |t| t.trim().parse::<Rational>().map_err(|_| bad()));
        let qs = || s.map_or(Ok(QRat::one()), |t| t.parse::<QRat>().map_err(|_| bad()));
        Ok(match key {
            "lucas" => FamilySpec::Classical(ClassicalFamily::Lucas),
            "fibonacci" => FamilySpec::Classical(ClassicalFamily::Fibonacci),
            "cheb_t" => FamilySpec::Classical(ClassicalFamily::ChebT),
            "cheb_u" => FamilySpec::Classical(ClassicalFamily::ChebU),
            "l" => FamilySpec::Classical(ClassicalFamily::L { m, s: rs()? }),
            "v" => FamilySpec::Classical(ClassicalFamily::V { m, s: rs()? }),
            "lq" => FamilySpec::Q(QFamily::L { m, s: qs()? }),
            "hq" => FamilySpec::Q(QFamily::LittleH { s: qs()? }),
            "vq" => FamilySpec::Q(QFamily::V { m, s: qs()? }),
            "Hq" => FamilySpec::Q(QFamily::BigH { s: qs()? }),
            "Rq" => FamilySpec::Q(QFamily::R { m }),
            _ => FamilySpec::Q(QFamily::LittleR),
        })
    }

    /// The family whose functional is `name`, with that functional's default `s`.
    pub fn for_functional(name: &str, m: usize, s: Option<&str>) -> Result<Self, SpecError> {
        let (key, default_s) = functional_key(name).ok_or_else(|| SpecError::UnknownFunctional(name.to_string()))?;
        Self::parse(key, m, Some(s.unwrap_or(default_s)))
    }

    pub fn closed_form(&self, n: usize) -> AnyPoly {
        match self {
            FamilySpec::Classical(f) => AnyPoly::Rational(f.closed_form(n)),
            FamilySpec::Q(f) => AnyPoly::Q(f.closed_form(n)),
        }
    }

    /// Canonical rendering of the moment `L(x^n)`.
    pub fn moment(&self, n: usize) -> String {
        match self {
            FamilySpec::Classical(f) => f.moment(n).render(),
            FamilySpec::Q(f) => f.moment(n).render(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names_and_parameters() {
        let l = FamilySpec::parse("l_classical", 2, Some("-1")).unwrap();
        assert_eq!(l.closed_form(2).to_string(), FamilySpec::parse("l", 2, Some("-1")).unwrap().closed_form(2).to_string());
        assert_eq!(l.closed_form(2).coeff(0), "-2/3");
        let v = FamilySpec::parse("vq", 0, Some("1 / q")).unwrap();
        assert_eq!(v.closed_form(2).degree(), Some(2));
        assert!(matches!(FamilySpec::parse("nope", 0, None), Err(SpecError::UnknownFamily(_))));
        assert!(matches!(FamilySpec::parse("l", 0, Some("x")), Err(SpecError::InvalidS(_))));
    }

    #[test]
    fn functional_defaults() {
        let f = FamilySpec::for_functional("lambda_m", 2, None).unwrap();
        assert_eq!(f.moment(2), "2/3");
        let phi = FamilySpec::for_functional("phi_q", 0, None).unwrap();
        assert_eq!(phi.moment(2), "q / (1 + q)");
        assert_eq!(FamilySpec::for_functional("lambda", 0, None).unwrap().moment(4), "6");
    }
}
