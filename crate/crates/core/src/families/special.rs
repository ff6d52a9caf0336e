//! Claimed closed forms for values at `x = 1`, and the generating-function
//! check for `l_n(x,m,s)`. The polynomials themselves live in the family
//! modules; callers compare the two.

use super::classical::ClassicalFamily;
use crate::algebra::{Normalization, Series, SeriesError};
use crate::scalar::{binomial, int, q_int, QPoly, QRat, Rational};

/// `(-1)^n q^e` as an exact value.
fn signed_q_power(negative: bool, e: usize) -> QPoly {
    QPoly::monomial(if negative { -1 } else { 1 }, e)
}

/// `l_n(1,0,-1)` with `l_0` replaced by 2: period 6.
pub fn lucas_at_one_periodic(n: usize) -> Rational {
    int([2, 1, -1, -2, -1, 1][n % 6])
}

/// `l_n(1,1,-1)`: period 6.
pub fn fibonacci_at_one_periodic(n: usize) -> Rational {
    int([1, 1, 0, -1, -1, 0][n % 6])
}

/// `l_n(1,2,-1)·(n+1)` from the residue-class closed forms.
pub fn l_m2_at_one_scaled(n: usize) -> Rational {
    let (t, i) = (n / 3, n % 3);
    let sign = if t % 2 == 0 { 1 } else { -1 };
    let base = sign * (t as i64 + 1);
    int(if i == 1 { 2 * base } else { base })
}

/// `l_n(1,m,-1/4) = ∏_{i=1}^{n-1} (2m+i) / ∏_{i=1}^{n-1} (2m+2i)`.
pub fn chebyshev_like_at_one(m: usize, n: usize) -> Rational {
    (1..n).fold(int(1), |acc, i| acc * Rational::new((2 * m + i).into(), (2 * m + 2 * i).into()))
}

/// Second printed form: `∏_{j=1}^{⌊n/2⌋} (2m+2j-1) / (2(m+j+⌊(n-1)/2⌋))`.
pub fn chebyshev_like_at_one_folded(m: usize, n: usize) -> Rational {
    let shift = n.saturating_sub(1) / 2;
    (1..=n / 2).fold(int(1), |acc, j| {
        acc * Rational::new((2 * m + 2 * j - 1).into(), (2 * (m + j + shift)).into())
    })
}

/// Pentagonal number `r(n) = n(3n-1)/2` for any integer `n`.
pub fn pentagonal(n: i64) -> i64 {
    n * (3 * n - 1) / 2
}

/// `l_n(1,1,-1,q)`: `(-1)^t q^{r(t)}`, `(-1)^t q^{r(-t)}`, `0` for
/// `n = 3t, 3t+1, 3t+2`.
pub fn q_fibonacci_at_one(n: usize) -> QPoly {
    let t = (n / 3) as i64;
    let negative = t % 2 == 1;
    match n % 3 {
        0 => signed_q_power(negative, pentagonal(t) as usize),
        1 => signed_q_power(negative, pentagonal(-t) as usize),
        _ => QPoly::zero(),
    }
}

/// `l_n(1,2,-1,q)·[n+1]` from the residue-class closed forms.
pub fn q_l_m2_at_one_scaled(n: usize) -> QPoly {
    let t = n / 3;
    let negative = t % 2 == 1;
    let bracket = q_int(t + 1);
    match n % 3 {
        0 => &signed_q_power(negative, t * (3 * t).saturating_sub(1) / 2) * &bracket,
        1 => {
            let tail = &QPoly::one() + &QPoly::monomial(1, t + 1);
            &(&signed_q_power(negative, t * (3 * t + 1) / 2) * &bracket) * &tail
        }
        _ => &signed_q_power(negative, (3 * t * t + 5 * t + 4) / 2) * &bracket,
    }
}

/// `v_n(1,m,1/q,q) = q^{C(n,2)} ∏_{i=1}^{n-1} [2m+i] / ∏_{i=1}^{n-1} [2m+2i]`.
pub fn v_q_at_one(m: usize, n: usize) -> QRat {
    let mut num = QPoly::monomial(1, n * n.saturating_sub(1) / 2);
    let mut den = QPoly::one();
    for i in 1..n {
        num = &num * &q_int(2 * m + i);
        den = &den * &q_int(2 * m + 2 * i);
    }
    QRat::new(num, den)
}

/// Outcome of comparing `Σ l_n(x,m,s) C(n+m-1,m-1) z^n` against
/// `(1-xz-sz^2)^{-m}` and against `(Σ l_n(x,1,s) z^n)^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenfunCheck {
    /// First index where the series differs from the rational function.
    pub rational_mismatch: Option<usize>,
    /// First index where it differs from the m-th power of the `m = 1` series.
    pub power_mismatch: Option<usize>,
}

impl GenfunCheck {
    pub fn passed(&self) -> bool {
        self.rational_mismatch.is_none() && self.power_mismatch.is_none()
    }
}

/// Requires `m ≥ 1`.
pub fn genfun_convolution_check(
    m: usize,
    s: &Rational,
    x: &Rational,
    order: usize,
) -> Result<GenfunCheck, SeriesError> {
    assert!(m >= 1, "generating function needs m ≥ 1");
    let fam = ClassicalFamily::L { m, s: s.clone() };
    let base = ClassicalFamily::L { m: 1, s: s.clone() };
    let lhs = Series::from_plain(
        (0..=order)
            .map(|n| {
                let weight = Rational::from_integer(binomial((n + m - 1) as i64, (m - 1) as i64));
                fam.closed_form(n).evaluate(x) * weight
            })
            .collect(),
        order,
        Normalization::Ordinary,
    );
    let denominator = Series::from_plain(vec![int(1), -x.clone(), -s.clone()], order, Normalization::Ordinary);
    let rational = denominator.powi(m as u32)?.inverse()?;
    let fib = Series::from_plain(
        (0..=order).map(|n| base.closed_form(n).evaluate(x)).collect(),
        order,
        Normalization::Ordinary,
    );
    let power = fib.powi(m as u32)?;
    Ok(GenfunCheck {
        rational_mismatch: lhs.first_difference(&rational),
        power_mismatch: lhs.first_difference(&power),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn periodic_sequences_match_polynomials() {
        for n in 0..12 {
            let l0 = ClassicalFamily::L { m: 0, s: int(-1) }.closed_form(n).evaluate(&int(1));
            let expected = if n == 0 { int(1) } else { lucas_at_one_periodic(n) };
            assert_eq!(l0, expected);
            let l1 = ClassicalFamily::L { m: 1, s: int(-1) }.closed_form(n).evaluate(&int(1));
            assert_eq!(l1, fibonacci_at_one_periodic(n));
            let l2 = ClassicalFamily::L { m: 2, s: int(-1) }.closed_form(n).evaluate(&int(1));
            assert_eq!(l2 * int(n as i64 + 1), l_m2_at_one_scaled(n));
        }
    }

    #[test]
    fn chebyshev_like_products() {
        for m in 0..5 {
            for n in 0..10 {
                let v = ClassicalFamily::L { m, s: ratio(-1, 4) }.closed_form(n).evaluate(&int(1));
                assert_eq!(v, chebyshev_like_at_one(m, n), "m={m} n={n}");
                assert_eq!(v, chebyshev_like_at_one_folded(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn pentagonal_exponents() {
        assert_eq!((0..5).map(pentagonal).collect::<Vec<_>>(), vec![0, 1, 5, 12, 22]);
        assert_eq!(pentagonal(-2), 7);
    }

    #[test]
    fn genfun_examples() {
        assert!(genfun_convolution_check(1, &int(-1), &int(1), 10).unwrap().passed());
        assert!(genfun_convolution_check(2, &int(1), &int(2), 10).unwrap().passed());
        assert!(genfun_convolution_check(4, &ratio(-2, 3), &ratio(1, 5), 12).unwrap().passed());
    }
}
