use std::cell::RefCell;

use thiserror::Error;

use super::QPoly;

/// `[n] = 1 + q + ⋯ + q^{n-1}`; `[0] = 0`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_ints(&vec![1; n])
}

thread_local! {
    static FACTORIALS: RefCell<Vec<QPoly>> = RefCell::new(vec![QPoly::one()]);
}

/// `[n]! = [1][2]⋯[n]`.
pub fn q_factorial(n: usize) -> QPoly {
    FACTORIALS.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() <= n {
            let k = cache.len();
            let next = &cache[k - 1] * &q_int(k);
            cache.push(next);
        }
        cache[n].clone()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("q-binomial index out of range: [{n} choose {k}]")]
pub struct BinomialRangeError {
    pub n: i64,
    pub k: i64,
}

/// Gaussian binomial `[n choose k]`, computed as an exact quotient of
/// q-factorials.
pub fn q_binomial(n: i64, k: i64) -> Result<QPoly, BinomialRangeError> {
    if n < 0 || k < 0 || k > n {
        return Err(BinomialRangeError { n, k });
    }
    let (n, k) = (n as usize, k as usize);
    let den = &q_factorial(k) * &q_factorial(n - k);
    Ok(q_factorial(n).div_exact(&den).expect("q-binomial division is exact"))
}

/// Gaussian binomial with the summation convention: zero out of range.
pub fn q_binomial_or_zero(n: i64, k: i64) -> QPoly {
    q_binomial(n, k).unwrap_or_else(|_| QPoly::zero())
}

/// `[1][3]⋯[2n-1]`, the q-double factorial `[2n-1]!!`; empty product for `n = 0`.
pub fn q_double_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, j| &acc * &q_int(2 * j - 1))
}

/// Pochhammer base `±q^e`; `SignedQMonomial::minus(0)` is `a = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedQMonomial {
    pub negative: bool,
    pub exponent: u32,
}

impl SignedQMonomial {
    pub fn plus(exponent: u32) -> Self {
        SignedQMonomial { negative: false, exponent }
    }

    pub fn minus(exponent: u32) -> Self {
        SignedQMonomial { negative: true, exponent }
    }
}

/// `(a;q)_n = (1-a)(1-qa)⋯(1-q^{n-1}a)`.
pub fn q_pochhammer(a: SignedQMonomial, n: usize) -> QPoly {
    q_pochhammer_step(a, 1, n)
}

/// `(a;q^step)_n = ∏_{j<n} (1 - a·q^{step·j})`.
pub fn q_pochhammer_step(a: SignedQMonomial, step: u32, n: usize) -> QPoly {
    let sign = if a.negative { 1 } else { -1 };
    (0..n).fold(QPoly::one(), |acc, j| {
        let e = (a.exponent + step * j as u32) as usize;
        let factor = &QPoly::one() + &QPoly::monomial(sign, e);
        &acc * &factor
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{binomial, int};

    fn pascal(n: i64, k: i64) -> QPoly {
        // [n k] = q^k [n-1 k] + [n-1 k-1]
        if k < 0 || k > n {
            return QPoly::zero();
        }
        if k == 0 || k == n {
            return QPoly::one();
        }
        &pascal(n - 1, k).shift_up(k as usize) + &pascal(n - 1, k - 1)
    }

    #[test]
    fn q_int_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), QPoly::one());
        assert_eq!(q_int(3), QPoly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_three() {
        let expected = &(&q_int(1) * &q_int(2)) * &q_int(3);
        assert_eq!(q_factorial(3), expected);
    }

    #[test]
    fn q_binomial_matches_pascal_oracle() {
        assert_eq!(q_binomial(4, 2).unwrap(), QPoly::from_ints(&[1, 1, 2, 1, 1]));
        for n in 0..=12 {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                assert_eq!(b, pascal(n, k));
                assert_eq!(b, q_binomial(n, n - k).unwrap());
                assert_eq!(b.eval(&int(1)), int(1) * binomial(n, k));
            }
        }
        assert_eq!(q_binomial(5, 0).unwrap(), QPoly::one());
        assert!(q_binomial(3, 4).is_err());
        assert!(q_binomial(3, -1).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let got = q_pochhammer(SignedQMonomial::minus(1), 2);
        assert_eq!(got, QPoly::from_ints(&[1, 1, 1, 1]));
        assert_eq!(q_pochhammer(SignedQMonomial::plus(3), 0), QPoly::one());
        for n in 1..=12 {
            let direct = q_pochhammer(SignedQMonomial::minus(0), n);
            let factored = q_pochhammer(SignedQMonomial::minus(1), n - 1).scale(&int(2));
            assert_eq!(direct, factored);
            assert_eq!(direct.eval(&int(1)), int(1 << n));
        }
        assert_eq!(q_pochhammer(SignedQMonomial::minus(0), 0).eval(&int(1)), int(1));
    }

    #[test]
    fn pochhammer_with_step() {
        // (q;q^2)_2 = (1-q)(1-q^3)
        let got = q_pochhammer_step(SignedQMonomial::plus(1), 2, 2);
        assert_eq!(got, QPoly::from_ints(&[1, -1, 0, -1, 1]));
    }
}
