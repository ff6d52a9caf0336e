use std::fmt;

use num::{BigInt, One};
use thiserror::Error;

use crate::scalar::{factorial, q_factorial, QRat, Rational, Scalar};

/// How the stored coefficients are meant to be read: the plain coefficient
/// of `z^n` is always stored; the tag records whether callers view it as a
/// multiple of `z^n`, `z^n/n!` or `z^n/[n]!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    Ordinary,
    Factorial,
    QFactorial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("normalization mismatch: {0:?} vs {1:?}")]
    TagMismatch(Normalization, Normalization),
    #[error("series has a zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("coefficient of z^{0} is nonzero; cannot divide by z^{1}")]
    NotDivisible(usize, usize),
    #[error("{0:?} normalization is not available over this scalar field")]
    Unsupported(Normalization),
}

/// Scalars that can express the factorial weights of each normalization.
pub trait SeriesScalar: Scalar {
    fn weight(norm: Normalization, n: usize) -> Option<Self>;
}

impl SeriesScalar for Rational {
    fn weight(norm: Normalization, n: usize) -> Option<Self> {
        match norm {
            Normalization::Ordinary => Some(Rational::from_integer(BigInt::from(1))),
            Normalization::Factorial => Some(Rational::from_integer(factorial(n as u32))),
            Normalization::QFactorial => None,
        }
    }
}

impl SeriesScalar for QRat {
    fn weight(norm: Normalization, n: usize) -> Option<Self> {
        match norm {
            Normalization::Ordinary => Some(QRat::one()),
            Normalization::Factorial => Some(QRat::constant(Rational::from_integer(factorial(n as u32)))),
            Normalization::QFactorial => Some(QRat::from_poly(q_factorial(n))),
        }
    }
}

/// Power series in `z` truncated after `z^order`.
#[derive(Clone, PartialEq)]
pub struct Series<S: SeriesScalar> {
    coeffs: Vec<S>,
    norm: Normalization,
}

pub const DEFAULT_ORDER: usize = 16;

impl<S: SeriesScalar> Series<S> {
    /// Plain coefficients; padded with zeros or truncated to `order + 1` terms.
    pub fn from_plain(mut coeffs: Vec<S>, order: usize, norm: Normalization) -> Self {
        coeffs.resize(order + 1, S::zero());
        Series { coeffs, norm }
    }

    /// Coefficients given in the tagged normalization (`a_n` of `a_n z^n/n!`).
    pub fn from_normalized(
        coeffs: Vec<S>,
        order: usize,
        norm: Normalization,
    ) -> Result<Self, SeriesError> {
        let plain = coeffs
            .into_iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, c)| {
                S::weight(norm, n)
                    .map(|w| c / w)
                    .ok_or(SeriesError::Unsupported(norm))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_plain(plain, order, norm))
    }

    pub fn one(order: usize, norm: Normalization) -> Self {
        Self::from_plain(vec![S::one()], order, norm)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    /// Plain coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient in the tagged normalization.
    pub fn normalized_coeff(&self, n: usize) -> S {
        let w = S::weight(self.norm, n).expect("tag is valid for this scalar");
        self.coeff(n) * w
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Same coefficients viewed under another normalization.
    pub fn retag(&self, norm: Normalization) -> Self {
        Series { coeffs: self.coeffs.clone(), norm }
    }

    fn check(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.norm != other.norm {
            return Err(SeriesError::TagMismatch(self.norm, other.norm));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        let c = (0..=n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_plain(c, n, self.norm))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        let c = (0..=n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::from_plain(c, n, self.norm))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        let mut out = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    let t = a.clone() * b;
                    out[i + j] = std::mem::replace(&mut out[i + j], S::zero()) + t;
                }
            }
        }
        Ok(Self::from_plain(out, n, self.norm))
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = S::one() / c0;
        let n = self.order();
        let mut out: Vec<S> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = S::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc = acc + a.clone() * &out[k - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self::from_plain(out, n, self.norm))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn scalar_mul(&self, c: &S) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.clone() * c).collect(), norm: self.norm }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(), norm: self.norm }
    }

    /// `S(-z)`.
    pub fn negate_argument(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Series { coeffs, norm: self.norm }
    }

    /// `S(c·z)`.
    pub fn scale_argument(&self, c: &S) -> Self {
        let mut power = S::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * &power);
            power = power * c;
        }
        Series { coeffs, norm: self.norm }
    }

    /// `S(z) / z^k`; the order drops by `k`.
    pub fn div_z_power(&self, k: usize) -> Result<Self, SeriesError> {
        if let Some(i) = (0..k.min(self.coeffs.len())).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(SeriesError::NotDivisible(i, k));
        }
        let order = self.order().checked_sub(k).ok_or(SeriesError::NotDivisible(0, k))?;
        Ok(Self::from_plain(self.coeffs[k..].to_vec(), order, self.norm))
    }

    /// `S(z) · z^k`, keeping the order.
    pub fn mul_z_power(&self, k: usize) -> Self {
        let mut c = vec![S::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::from_plain(c, self.order(), self.norm)
    }

    pub fn powi(&self, e: u32) -> Result<Self, SeriesError> {
        let mut acc = Self::one(self.order(), self.norm);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Index of the first differing coefficient up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl Series<Rational> {
    /// `e^z`, tagged factorial.
    pub fn exp(order: usize) -> Self {
        let ones = vec![Rational::from_integer(BigInt::from(1)); order + 1];
        Self::from_normalized(ones, order, Normalization::Factorial).expect("factorial weights")
    }
}

impl Series<QRat> {
    /// `e_q(z) = Σ z^n/[n]!`, tagged q-factorial.
    pub fn e_q(order: usize) -> Self {
        Self::from_normalized(vec![QRat::one(); order + 1], order, Normalization::QFactorial)
            .expect("q-factorial weights")
    }
}

impl<S: SeriesScalar> fmt::Debug for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series<{:?}, O(z^{})>[", self.norm, self.order() + 1)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q_pochhammer, SignedQMonomial};

    #[test]
    fn self_quotient_is_one() {
        let e = Series::e_q(6);
        let one = e.div(&e).unwrap();
        assert_eq!(one, Series::one(6, Normalization::QFactorial));
    }

    #[test]
    fn negation_is_an_involution() {
        let e = Series::exp(9);
        assert_eq!(e.negate_argument().negate_argument(), e);
        assert_ne!(e.negate_argument(), e);
    }

    #[test]
    fn q_exponential_ratio_is_pochhammer() {
        let e = Series::e_q(8);
        let ratio = e.div(&e.negate_argument()).unwrap();
        for n in 0..=8 {
            let expected = QRat::from_poly(q_pochhammer(SignedQMonomial::minus(0), n));
            assert_eq!(ratio.normalized_coeff(n), expected, "n = {n}");
        }
    }

    #[test]
    fn tag_mismatch_is_rejected() {
        let a = Series::exp(4);
        let b = a.retag(Normalization::Ordinary);
        assert_eq!(a.mul(&b), Err(SeriesError::TagMismatch(Normalization::Factorial, Normalization::Ordinary)));
    }

    #[test]
    fn zero_constant_term_is_not_invertible() {
        let z = Series::from_plain(vec![int(0), int(1)], 4, Normalization::Ordinary);
        assert_eq!(z.inverse(), Err(SeriesError::NotInvertible));
        assert_eq!(Series::one(4, Normalization::Ordinary).div(&z), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn exp_times_exp_of_negation() {
        let e = Series::exp(10);
        let p = e.mul(&e.negate_argument()).unwrap();
        assert_eq!(p, Series::one(10, Normalization::Factorial));
    }

    #[test]
    fn shifting_by_z_powers() {
        let s = Series::from_plain(vec![int(0), int(0), int(3), int(4)], 5, Normalization::Ordinary);
        let d = s.div_z_power(2).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(d.coeff(0), int(3));
        assert!(s.div_z_power(3).is_err());
        assert!(q_factorial_free_rational());
    }

    fn q_factorial_free_rational() -> bool {
        Series::<Rational>::from_normalized(vec![int(1)], 2, Normalization::QFactorial).is_err()
    }
}
