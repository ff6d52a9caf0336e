//! Small exact-arithmetic shorthands shared by the identity checks.

use num::{One, Zero};

use crate::families::neg_q_poch;
use crate::scalar::{
    binomial, factorial, int, q_binomial_or_zero, q_factorial, q_int, q_pochhammer, sample_points, QPoly, QRat,
    Rational, SignedQMonomial,
};

pub(crate) type Run = Result<(), Box<dyn std::error::Error + Send + Sync>>;

pub(crate) fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u32))
}

/// `C(n,k)`, zero outside `0 ≤ k ≤ n`.
pub(crate) fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub(crate) fn sgn(k: usize) -> Rational {
    int(if k.is_multiple_of(2) { 1 } else { -1 })
}

pub(crate) fn qsgn(k: usize) -> QRat {
    QRat::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

pub(crate) fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub(crate) fn qindicator(b: bool) -> QRat {
    if b {
        QRat::one()
    } else {
        QRat::zero()
    }
}

pub(crate) fn qp(p: QPoly) -> QRat {
    QRat::from_poly(p)
}

pub(crate) fn qpow(e: usize) -> QRat {
    QRat::q_pow(e as i64)
}

pub(crate) fn qint(n: usize) -> QRat {
    qp(q_int(n))
}

pub(crate) fn qfact(n: usize) -> QRat {
    qp(q_factorial(n))
}

/// Gaussian binomial, zero out of range.
pub(crate) fn qbinom(n: i64, k: i64) -> QRat {
    qp(q_binomial_or_zero(n, k))
}

/// `[n]_{q^2}`.
pub(crate) fn qint2(n: usize) -> QRat {
    qp(q_int(n).substitute_power(2))
}

/// `[n]_{q^2}!`.
pub(crate) fn qfact2(n: usize) -> QRat {
    qp(q_factorial(n).substitute_power(2))
}

/// Gaussian binomial in base `q^2`, zero out of range.
pub(crate) fn qbinom2(n: i64, k: i64) -> QRat {
    qp(q_binomial_or_zero(n, k).substitute_power(2))
}

/// `(-q^e; q)_n`; `e = 0` gives `(-1; q)_n`.
pub(crate) fn npoch(e: usize, n: usize) -> QRat {
    qp(neg_q_poch(e as u32, n))
}

/// `(q^e; q)_n`.
pub(crate) fn ppoch(e: usize, n: usize) -> QRat {
    qp(q_pochhammer(SignedQMonomial::plus(e as u32), n))
}

pub(crate) fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `count` distinct integer sample values for a free parameter.
pub(crate) fn samples(count: usize) -> Vec<i64> {
    sample_points(count)
        .into_iter()
        .map(|r| i64::try_from(r.to_integer()).expect("small sample"))
        .collect()
}

/// `[n]!/([k]![n-2k]!) · [n+m-2k]!/[n+m-k]!`.
pub(crate) fn a_q(n: usize, k: usize, m: usize) -> QRat {
    crate::families::a_coeff_q(n, k, m)
}
