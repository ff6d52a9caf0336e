use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{q_int, QRat, Scalar};

/// Dense polynomial in `x` over a scalar field, ascending powers, no
/// trailing zeros. The zero polynomial has no degree.
#[derive(Clone, PartialEq)]
pub struct Poly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn x() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// All nonzero coefficients sit at indices `≡ parity (mod 2)`.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % 2 == parity % 2)
    }

    pub fn scalar_mul(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c).collect())
    }

    /// `f(c·x)`.
    pub fn compose_scale(&self, c: &S) -> Self {
        let mut power = S::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &power);
            power = power * c;
        }
        Self::new(out)
    }

    pub fn evaluate(&self, x0: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x0 + c)
    }

    /// `x^k · f`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<QRat> {
    /// q-derivative `(f(x) - f(qx)) / ((1-q)x)`: maps `x^n` to `[n] x^{n-1}`.
    pub fn d_q(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.mul_poly(&q_int(n)))
                .collect(),
        )
    }
}

fn add_impl<S: Scalar>(a: &Poly<S>, b: &Poly<S>, negate_b: bool) -> Poly<S> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.coeff(i);
            let y = b.coeff(i);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect();
    Poly::new(coeffs)
}

fn mul_impl<S: Scalar>(a: &Poly<S>, b: &Poly<S>) -> Poly<S> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![S::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                let t = x.clone() * y;
                out[i + j] = std::mem::replace(&mut out[i + j], S::zero()) + t;
            }
        }
    }
    Poly::new(out)
}

impl<'a, S: Scalar> Add<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &'a Poly<S>) -> Poly<S> {
        add_impl(self, rhs, false)
    }
}

impl<'a, S: Scalar> Sub<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &'a Poly<S>) -> Poly<S> {
        add_impl(self, rhs, true)
    }
}

impl<'a, S: Scalar> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &'a Poly<S>) -> Poly<S> {
        mul_impl(self, rhs)
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Poly<S>) -> Poly<S> {
        add_impl(&self, &rhs, false)
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Poly<S>) -> Poly<S> {
        add_impl(&self, &rhs, true)
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Poly<S>) -> Poly<S> {
        mul_impl(&self, &rhs)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    /// Descending powers of `x` with coefficients in parentheses, e.g.
    /// `x^2 + (-2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if c.is_one() && k > 0 {
                write!(f, "{var}")?;
            } else if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, QPoly, Rational};
    use num::{One, Zero};

    fn rp(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn product_and_evaluation() {
        let a = rp(&[1, 0, 1]);
        let b = rp(&[-1, 1]);
        assert_eq!(&a * &b, rp(&[-1, 1, -1, 1]));
        // f_3(x) = x^3 - 2x
        assert_eq!(rp(&[0, -2, 0, 1]).evaluate(&int(1)), int(-1));
    }

    #[test]
    fn compose_scale_substitutes() {
        let q = QRat::from_poly(QPoly::q());
        let f: Poly<QRat> = Poly::new(vec![QRat::from_int(0), QRat::from_int(1), QRat::from_int(1)]);
        let g = f.compose_scale(&q);
        assert_eq!(g.coeff(1), q);
        assert_eq!(g.coeff(2), QRat::q_pow(2));
    }

    #[test]
    fn q_derivative_monomials() {
        for n in 0..=20usize {
            let f = Poly::monomial(QRat::one(), n);
            let d = f.d_q();
            if n == 0 {
                assert!(d.is_zero());
            } else {
                assert_eq!(d, Poly::monomial(QRat::from_poly(q_int(n)), n - 1));
            }
        }
        // x^3 + x -> [3]x^2 + 1
        let f = Poly::new(vec![QRat::zero(), QRat::one(), QRat::zero(), QRat::one()]);
        let expected = Poly::new(vec![QRat::one(), QRat::zero(), QRat::from_poly(q_int(3))]);
        assert_eq!(f.d_q(), expected);
    }

    #[test]
    fn q_derivative_matches_definition() {
        // (f(x) - f(qx)) / ((1-q)x), computed coefficientwise
        let f = Poly::new(vec![QRat::from_int(5), QRat::from_int(-2), QRat::from_int(3), QRat::from_int(7)]);
        let q = QRat::from_poly(QPoly::q());
        let diff = &f - &f.compose_scale(&q);
        let one_minus_q = QRat::one() - q;
        let expected: Vec<QRat> = diff.coeffs()[1..].iter().map(|c| c.clone() / one_minus_q.clone()).collect();
        assert_eq!(f.d_q(), Poly::new(expected));
    }

    #[test]
    fn parity_predicate() {
        assert!(rp(&[0, -2, 0, 1]).has_parity(1));
        assert!(!rp(&[1, -2, 0, 1]).has_parity(1));
        assert!(Poly::<Rational>::zero().has_parity(0));
    }
}
