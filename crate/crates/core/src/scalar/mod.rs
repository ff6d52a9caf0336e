//! Exact scalar tower: big rationals, dense polynomials in `q`, and the
//! field of rational functions in `q`, plus the q-combinatorial primitives
//! (q-integers, q-factorials, Gaussian binomials, q-Pochhammer symbols).

mod gcd;
mod qcomb;
mod qpoly;
mod qrat;
mod text;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, One, Zero};

pub use gcd::{gcd_modular, gcd_primitive_prs};
pub use qcomb::{
    q_binomial, q_binomial_or_zero, q_double_factorial, q_factorial, q_int, q_pochhammer,
    q_pochhammer_step, BinomialRangeError, SignedQMonomial,
};
pub use qpoly::QPoly;
pub use qrat::{EvalError, QRat};
pub use text::ParseScalarError;

/// Arbitrary-precision exact rational, always fully reduced.
pub type Rational = num::BigRational;

/// Common interface of the two scalar fields used throughout the crate.
///
/// Both [`Rational`] and [`QRat`] are fields; division by zero panics, as it
/// does for `BigRational`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + 'static
{
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    /// Canonical single-line rendering, stable across runs.
    fn render(&self) -> String {
        self.to_string()
    }

    /// `self^e` for a non-negative exponent.
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for QRat {
    fn from_rational(r: &Rational) -> Self {
        QRat::constant(r.clone())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Binomial coefficient with the convention `C(n, k) = 0` outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `(-1)^e` as an `i64`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Whether a rational is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Deterministic sample points `1, -1, 2, -2, 3, …` used to verify
/// identities that are polynomial in a parameter.
pub fn sample_points(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|i| {
            let mag = (i / 2 + 1) as i64;
            if i % 2 == 0 {
                int(mag)
            } else {
                int(-mag)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn samples_alternate() {
        let s = sample_points(5);
        assert_eq!(s, vec![int(1), int(-1), int(2), int(-2), int(3)]);
    }
}
