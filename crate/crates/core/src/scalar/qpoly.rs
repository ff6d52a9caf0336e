use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::gcd;
use super::Rational;

/// Dense univariate polynomial in `q` with rational coefficients.
///
/// Stored content-managed: integer numerators over one shared positive
/// denominator, with `gcd(numerators, denominator) = 1` and no trailing
/// zeros. The zero polynomial has no coefficients and denominator 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    nums: Vec<BigInt>,
    den: BigInt,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { nums: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_big_ints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_big_ints(nums: Vec<BigInt>) -> Self {
        Self::from_parts(nums, BigInt::one())
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(nums, den)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_rationals(&[c])
    }

    /// `c·q^e`.
    pub fn monomial(c: i64, e: usize) -> Self {
        let mut nums = vec![BigInt::zero(); e + 1];
        nums[e] = BigInt::from(c);
        Self::from_big_ints(nums)
    }

    pub(crate) fn from_parts(mut nums: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator in QPoly");
        while nums.last().is_some_and(Zero::is_zero) {
            nums.pop();
        }
        if nums.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in nums.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &nums {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                den /= &g;
                for c in nums.iter_mut() {
                    *c /= &g;
                }
            }
        }
        QPoly { nums, den }
    }

    pub fn is_zero(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.nums.len() == 1 && self.den.is_one() && self.nums[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.nums.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.nums.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        match self.nums.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.nums.len()).map(|i| self.coeff(i)).collect()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => Rational::zero(),
        }
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.nums.iter().position(|c| !c.is_zero())
    }

    /// Integer numerators and shared denominator.
    pub fn parts(&self) -> (&[BigInt], &BigInt) {
        (&self.nums, &self.den)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let nums = self.nums.iter().map(|x| x * c.numer()).collect();
        Self::from_parts(nums, &self.den * c.denom())
    }

    /// `self · q^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut nums = vec![BigInt::zero(); e];
        nums.extend(self.nums.iter().cloned());
        QPoly { nums, den: self.den.clone() }
    }

    /// `self / q^e`; panics unless `q^e` divides `self`.
    pub fn shift_down(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        assert!(
            self.low_degree().unwrap_or(0) >= e,
            "q^{e} does not divide the polynomial"
        );
        QPoly { nums: self.nums[e..].to_vec(), den: self.den.clone() }
    }

    /// `f(q^b)`.
    pub fn substitute_power(&self, b: usize) -> Self {
        assert!(b >= 1);
        if self.is_constant() || b == 1 {
            return self.clone();
        }
        let mut nums = vec![BigInt::zero(); (self.nums.len() - 1) * b + 1];
        for (i, c) in self.nums.iter().enumerate() {
            nums[i * b] = c.clone();
        }
        QPoly { nums, den: self.den.clone() }
    }

    /// `f(-q)`.
    pub fn negate_variable(&self) -> Self {
        let nums = self
            .nums
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        QPoly { nums, den: self.den.clone() }
    }

    pub fn eval(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.nums.iter().rev() {
            acc = acc * q0 + Rational::from_integer(c.clone());
        }
        acc / Rational::from_integer(self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    /// Division with remainder over the rationals.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs();
        let dcoeffs = divisor.coeffs();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in dcoeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_rationals(&quot), Self::from_rationals(&rem))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_constant() {
            return Some(self.scale(&divisor.coeff(0).recip()));
        }
        // self = (a/da), divisor = (b/db); a = b·t over Z[q] up to content.
        let b_prim = gcd::primitive(&divisor.nums);
        let t = gcd::exact_div_z(&self.nums, &b_prim)?;
        // divisor = (cont(b)/db)·b_prim, so self/divisor = t·db / (da·cont(b)).
        let cont_b = gcd::content(&divisor.nums);
        let sign = if divisor.nums.last().unwrap().is_negative() { -1 } else { 1 };
        let nums = t.into_iter().map(|c| c * &divisor.den * sign).collect();
        Some(Self::from_parts(nums, &self.den * cont_b))
    }

    /// Greatest common divisor, monic; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        Self::from_big_ints(gcd::gcd_modular(&self.nums, &other.nums)).monic()
    }
}

impl Default for QPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_impl(a: &QPoly, b: &QPoly, negate_b: bool) -> QPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let (fa, fb, den) = if a.den == b.den {
        (BigInt::one(), BigInt::one(), a.den.clone())
    } else {
        let l = a.den.lcm(&b.den);
        (&l / &a.den, &l / &b.den, l)
    };
    let n = a.nums.len().max(b.nums.len());
    let mut nums = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.nums.get(i).map(|c| c * &fa).unwrap_or_default();
        let y = b.nums.get(i).map(|c| c * &fb).unwrap_or_default();
        nums.push(if negate_b { x - y } else { x + y });
    }
    QPoly::from_parts(nums, den)
}

fn mul_impl(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let nums = gcd::mul_z(&a.nums, &b.nums);
    let den = &a.den * &b.den;
    if den.is_one() {
        QPoly { nums, den }
    } else {
        QPoly::from_parts(nums, den)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a QPoly> for &'a QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &'a QPoly) -> QPoly {
                $body(self, rhs)
            }
        }
        impl $trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &'a QPoly) -> QPoly {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { nums: self.nums.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers: `1 + q - 1/2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{var}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn multiplication_and_degree() {
        let a = QPoly::from_ints(&[1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let p = &a * &b;
        assert_eq!(p, QPoly::from_ints(&[-1, 1, -1, 1]));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn rational_coefficients_are_canonical() {
        let p = QPoly::from_rationals(&[ratio(1, 2), ratio(2, 4)]);
        let r = QPoly::from_ints(&[1, 1]).scale(&ratio(1, 2));
        assert_eq!(p, r);
        assert_eq!(p.coeff(1), ratio(1, 2));
        assert_eq!((&p + &p), QPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(QPoly::from_ints(&[1, 1])));
        assert_eq!(b.div_exact(&a), None);
        let half = b.scale(&ratio(-3, 2));
        assert_eq!(a.div_exact(&half).unwrap(), QPoly::from_ints(&[1, 1]).scale(&ratio(-2, 3)));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = QPoly::from_ints(&[3, 1, 4, 1, 5]);
        let b = QPoly::from_ints(&[2, 0, 3]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn display_ascending() {
        let p = QPoly::from_rationals(&[int(1), int(1), int(0), ratio(-1, 2)]);
        assert_eq!(p.to_string(), "1 + q - 1/2*q^3");
        assert_eq!((-QPoly::q()).to_string(), "-q");
    }

    #[test]
    fn substitution_and_eval() {
        let p = QPoly::from_ints(&[1, 1]);
        assert_eq!(p.substitute_power(2), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(p.eval(&int(3)), int(4));
    }
}
