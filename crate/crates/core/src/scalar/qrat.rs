use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};
use thiserror::Error;

use super::{QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("pole at q = {0}")]
    Pole(Rational),
}

/// Rational function in `q` over the rationals, in canonical form:
/// `gcd(num, den) = 1` and `den` is monic. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Reduce `num / den` to canonical form. Panics on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in QRat");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.coeff(0);
            return QRat { num: num.scale(&c.recip()), den: QPoly::one() };
        }
        let (num, den) = if num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        Self::monic_unchecked(num, den)
    }

    /// Normalize the sign/scale only; callers guarantee coprimality.
    fn monic_unchecked(num: QPoly, den: QPoly) -> Self {
        let lc = den.leading();
        if lc.is_one() {
            QRat { num, den }
        } else {
            let inv = lc.recip();
            QRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat { num: p, den: QPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QPoly::from_ints(&[n]))
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(QPoly::monomial(1, e as usize))
        } else {
            QRat { num: QPoly::one(), den: QPoly::monomial(1, (-e) as usize) }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.num.is_zero(), "reciprocal of zero");
        Self::monic_unchecked(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, q0: &Rational) -> Result<Rational, EvalError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(EvalError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// `f(q^b)`.
    pub fn substitute_power(&self, b: usize) -> Self {
        Self::new(self.num.substitute_power(b), self.den.substitute_power(b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        self * &Self::from_poly(p.clone())
    }

    pub fn div_poly(&self, p: &QPoly) -> Self {
        self / &Self::from_poly(p.clone())
    }
}

fn add_impl(a: &QRat, b: &QRat, negate_b: bool) -> QRat {
    let b_num = if negate_b { -&b.num } else { b.num.clone() };
    if b.num.is_zero() {
        return a.clone();
    }
    if a.num.is_zero() {
        return QRat { num: b_num, den: b.den.clone() };
    }
    if a.den == b.den {
        return QRat::new(&a.num + &b_num, a.den.clone());
    }
    if a.den.is_one() {
        return QRat::monic_unchecked(&a.num * &b.den + &b_num, b.den.clone());
    }
    if b.den.is_one() {
        return QRat::monic_unchecked(&a.num + &(&b_num * &a.den), a.den.clone());
    }
    // Henrici: with g = gcd(b1, b2), only g can share factors with the sum.
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = &a.num * &b.den + &b_num * &a.den;
        return QRat::monic_unchecked(num, &a.den * &b.den);
    }
    let da = a.den.div_exact(&g).unwrap();
    let db = b.den.div_exact(&g).unwrap();
    let num = &a.num * &db + &b_num * &da;
    if num.is_zero() {
        return QRat::zero();
    }
    let h = num.gcd(&g);
    if h.is_one() {
        QRat::monic_unchecked(num, &(&da * &db) * &g)
    } else {
        let num = num.div_exact(&h).unwrap();
        let g = g.div_exact(&h).unwrap();
        QRat::monic_unchecked(num, &(&da * &db) * &g)
    }
}

fn cancel(x: &QPoly, y: &QPoly) -> (QPoly, QPoly) {
    if x.is_constant() || y.is_constant() {
        return (x.clone(), y.clone());
    }
    let g = x.gcd(y);
    if g.is_one() {
        (x.clone(), y.clone())
    } else {
        (x.div_exact(&g).unwrap(), y.div_exact(&g).unwrap())
    }
}

fn mul_impl(a: &QRat, b: &QRat) -> QRat {
    if a.num.is_zero() || b.num.is_zero() {
        return QRat::zero();
    }
    let (an, bd) = cancel(&a.num, &b.den);
    let (bn, ad) = cancel(&b.num, &a.den);
    QRat::monic_unchecked(&an * &bn, &ad * &bd)
}

fn div_impl(a: &QRat, b: &QRat) -> QRat {
    assert!(!b.num.is_zero(), "division by zero QRat");
    mul_impl(a, &b.recip())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a QRat> for &'a QRat {
            type Output = QRat;
            fn $method(self, rhs: &'a QRat) -> QRat {
                $body(self, rhs)
            }
        }
        impl $trait<QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &'a QRat) -> QRat {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -self.num, den: self.den }
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat { num: QPoly::zero(), den: QPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRat {
    fn one() -> Self {
        Self::from_poly(QPoly::one())
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::zero(), |acc, x| acc + x)
    }
}

impl Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::one(), |acc, x| acc * x)
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

fn wrap(p: &QPoly) -> String {
    let multi_term = p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
    let s = p.to_string();
    if multi_term || (s.contains('/') && !s.contains('*')) {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for QRat {
    /// `num` alone when the denominator is 1, otherwise `num / den` with
    /// multi-term sides parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}
