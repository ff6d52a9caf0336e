//! Tangent, Genocchi and q-tangent numbers, extracted from exact series
//! quotients.

use num::{BigInt, One};
use thiserror::Error;

use super::series::{Series, SeriesError};
use crate::scalar::{factorial, is_integral, QPoly, QRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumbersError {
    #[error("count must be at least 1")]
    EmptyRequest,
    #[error("coefficient {index} is not integral: {value}")]
    NotIntegral { index: usize, value: String },
    #[error("q-tangent coefficient {index} is not a polynomial: {value}")]
    NotPolynomial { index: usize, value: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `(e^z - e^{-z}) / (e^z + e^{-z})` to the given order.
pub fn tanh_series(order: usize) -> Result<Series<Rational>, SeriesError> {
    let e = Series::exp(order);
    let e_neg = e.negate_argument();
    e.sub(&e_neg)?.div(&e.add(&e_neg)?)
}

/// `(e_q(z) - e_q(-z)) / (e_q(z) + e_q(-z))` to the given order.
pub fn q_tanh_series(order: usize) -> Result<Series<QRat>, SeriesError> {
    let e = Series::e_q(order);
    let e_neg = e.negate_argument();
    e.sub(&e_neg)?.div(&e.add(&e_neg)?)
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `T_1, T_3, T_5, …` (`count` values).
pub fn tangent_numbers(count: usize) -> Result<Vec<BigInt>, NumbersError> {
    if count == 0 {
        return Err(NumbersError::EmptyRequest);
    }
    let series = tanh_series(2 * count - 1)?;
    (0..count)
        .map(|n| {
            let t = series.normalized_coeff(2 * n + 1) * sign(n);
            if !is_integral(&t) {
                return Err(NumbersError::NotIntegral { index: 2 * n + 1, value: t.to_string() });
            }
            Ok(t.to_integer())
        })
        .collect()
}

/// `G_0, G_2, G_4, …` (`count` values) from `z·tanh z`.
pub fn genocchi_numbers(count: usize) -> Result<Vec<BigInt>, NumbersError> {
    if count == 0 {
        return Err(NumbersError::EmptyRequest);
    }
    let order = 2 * (count - 1);
    let series = tanh_series(order.max(1))?.mul_z_power(1);
    (0..count)
        .map(|n| {
            let c = series.coeff(2 * n) * Rational::from_integer(factorial(2 * n as u32));
            // (-1)^{n-1} 2^{2n-1} G_{2n} / (2n)! is the z^{2n} coefficient
            let two_pow = Rational::new(BigInt::one() << (2 * n), BigInt::from(2));
            let g = c * sign(n + 1) / two_pow;
            if !is_integral(&g) {
                return Err(NumbersError::NotIntegral { index: 2 * n, value: g.to_string() });
            }
            Ok(g.to_integer())
        })
        .collect()
}

/// Checks `G_{2n+2} = (n+1) T_{2n+1} / 2^{2n}` for the first `count` values of `n`.
pub fn genocchi_tangent_relation(count: usize) -> Result<bool, NumbersError> {
    let t = tangent_numbers(count)?;
    let g = genocchi_numbers(count + 1)?;
    Ok((0..count).all(|n| {
        let rhs = Rational::new(&t[n] * BigInt::from(n + 1), BigInt::one() << (2 * n));
        Rational::from_integer(g[n + 1].clone()) == rhs
    }))
}

/// `T_1(q), T_3(q), …` (`count` values); each is verified to be a polynomial.
pub fn q_tangent_numbers(count: usize) -> Result<Vec<QPoly>, NumbersError> {
    if count == 0 {
        return Err(NumbersError::EmptyRequest);
    }
    let series = q_tanh_series(2 * count - 1)?;
    (0..count)
        .map(|n| {
            let t = series.normalized_coeff(2 * n + 1).scale(&sign(n));
            match t.as_poly() {
                Some(p) => Ok(p.clone()),
                None => Err(NumbersError::NotPolynomial { index: 2 * n + 1, value: t.to_string() }),
            }
        })
        .collect()
}
