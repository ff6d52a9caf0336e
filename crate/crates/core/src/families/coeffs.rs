use num::{BigInt, One};

use crate::scalar::{
    binomial, factorial, q_factorial, q_int, q_pochhammer, QPoly, QRat, Rational, SignedQMonomial,
};

/// Normalized super Catalan number `(2n)! m! / (n! (m+n)!)`.
pub fn sigma(m: usize, n: usize) -> Rational {
    Rational::new(
        factorial(2 * n as u32) * factorial(m as u32),
        factorial(n as u32) * factorial((m + n) as u32),
    )
}

/// `[2n]! [m]! / ([n]! [m+n]!)`.
pub fn sigma_q(m: usize, n: usize) -> QRat {
    QRat::new(
        &q_factorial(2 * n) * &q_factorial(m),
        &q_factorial(n) * &q_factorial(m + n),
    )
}

/// `λ_n(m)`, with `λ_0(m) = 2/(m+1)` for every `m`.
pub fn lambda(n: usize, m: usize) -> Rational {
    if n == 0 {
        return Rational::new(BigInt::from(2), BigInt::from(m + 1));
    }
    Rational::new(
        BigInt::from((n + 1) * (n + 2 * m)),
        BigInt::from((n + m) * (n + m + 1)),
    )
}

/// `λ_n(m,q) = [n+1][n+2m] / ([n+m][n+m+1])`; at `n = 0` this is
/// `(1+q^m)/[m+1]` for every `m`.
pub fn lambda_q(n: usize, m: usize) -> QRat {
    if n == 0 {
        return QRat::new(one_plus_q_pow(m), q_int(m + 1));
    }
    QRat::new(&q_int(n + 1) * &q_int(n + 2 * m), &q_int(n + m) * &q_int(n + m + 1))
}

/// `μ_j(m,q) = λ_j(m,q) q^{j+1} / ((1+q^{j+m})(1+q^{j+m+1}))`.
pub fn mu_q(j: usize, m: usize) -> QRat {
    let den = &one_plus_q_pow(j + m) * &one_plus_q_pow(j + m + 1);
    lambda_q(j, m).mul_poly(&QPoly::monomial(1, j + 1)).div_poly(&den)
}

/// `a(n,k,m) = n! (n+m-2k)! / (k! (n-2k)! (n+m-k)!)`; zero unless `0 ≤ 2k ≤ n`.
pub fn a_coeff(n: usize, k: usize, m: usize) -> Rational {
    if 2 * k > n {
        return Rational::from_integer(BigInt::from(0));
    }
    Rational::new(
        factorial(n as u32) * factorial((n + m - 2 * k) as u32),
        factorial(k as u32) * factorial((n - 2 * k) as u32) * factorial((n + m - k) as u32),
    )
}

/// q-analogue of [`a_coeff`] with q-factorials; zero unless `0 ≤ 2k ≤ n`.
pub fn a_coeff_q(n: usize, k: usize, m: usize) -> QRat {
    if 2 * k > n {
        return QRat::from_int(0);
    }
    QRat::new(
        &multinomial_q(n, k) * &q_factorial(n + m - 2 * k),
        q_factorial(n + m - k),
    )
}

/// `[n]! / ([k]! [n-2k]!)` as an exact polynomial.
pub fn multinomial_q(n: usize, k: usize) -> QPoly {
    let top = q_binomial_poly(n, k);
    &top * &q_falling(n - k, k)
}

/// `n! / (k! (n-2k)!)`.
pub fn multinomial(n: usize, k: usize) -> BigInt {
    binomial(n as i64, k as i64) * falling(n - k, k)
}

/// `[top][top-1]⋯[top-count+1]`.
pub fn q_falling(top: usize, count: usize) -> QPoly {
    (0..count).fold(QPoly::one(), |acc, j| &acc * &q_int(top - j))
}

/// `top (top-1) ⋯ (top-count+1)`.
pub fn falling(top: usize, count: usize) -> BigInt {
    (0..count).fold(BigInt::one(), |acc, j| acc * (top - j))
}

/// `1 + q^e`.
pub fn one_plus_q_pow(e: usize) -> QPoly {
    &QPoly::one() + &QPoly::monomial(1, e)
}

/// `(-q^e; q)_n`.
pub fn neg_q_poch(e: u32, n: usize) -> QPoly {
    q_pochhammer(SignedQMonomial::minus(e), n)
}

fn q_binomial_poly(n: usize, k: usize) -> QPoly {
    crate::scalar::q_binomial_or_zero(n as i64, k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn sigma_two_row() {
        let row: Vec<Rational> = (0..8).map(|n| sigma(2, n)).collect();
        let expected = vec![int(1), ratio(2, 3), int(1), int(2), ratio(14, 3), int(12), int(33), ratio(286, 3)];
        assert_eq!(row, expected);
        assert_eq!(sigma(1, 3), int(5));
        assert_eq!(sigma(0, 4), int(70));
    }

    #[test]
    fn lambda_special_cases() {
        for m in 0..6 {
            assert_eq!(lambda(0, m), ratio(2, m as i64 + 1));
            let mi = m as i64;
            assert_eq!(lambda(1, m), ratio(2 * (2 * mi + 1), (mi + 1) * (mi + 2)));
        }
        // generic formula at n = 0 agrees with the special case when m ≥ 1
        for m in 1..6usize {
            assert_eq!(lambda(0, m), Rational::new(BigInt::from(2 * m), BigInt::from(m * (m + 1))));
        }
    }

    #[test]
    fn q_coefficients_degenerate_at_one() {
        let one = int(1);
        for m in 0..5 {
            for n in 0..7 {
                assert_eq!(lambda_q(n, m).eval(&one).unwrap(), lambda(n, m), "λ n={n} m={m}");
                assert_eq!(sigma_q(m, n).eval(&one).unwrap(), sigma(m, n));
                assert_eq!(a_coeff_q(n, n / 2, m).eval(&one).unwrap(), a_coeff(n, n / 2, m));
            }
        }
        assert_eq!(lambda_q(1, 1).eval(&one).unwrap(), int(1));
    }

    #[test]
    fn mu_zero_closed_form() {
        for m in 0..5 {
            let expected = QRat::new(QPoly::q(), &q_int(m + 1) * &one_plus_q_pow(m + 1));
            assert_eq!(mu_q(0, m), expected);
        }
    }

    #[test]
    fn a_coeff_low_m() {
        for n in 0..9 {
            for k in 0..=n / 2 {
                let c = |j: i64| Rational::from_integer(binomial(n as i64, j));
                assert_eq!(a_coeff(n, k, 0), c(k as i64));
                assert_eq!(a_coeff(n, k, 1), c(k as i64) - c(k as i64 - 1));
            }
        }
    }

    #[test]
    fn multinomials_agree() {
        for n in 0..9 {
            for k in 0..=n / 2 {
                let q1 = multinomial_q(n, k).eval(&int(1));
                assert_eq!(q1, Rational::from_integer(multinomial(n, k)));
            }
        }
    }
}
