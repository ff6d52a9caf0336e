use std::fmt;

use num::{BigInt, One, Zero};

use super::coeffs::{falling, lambda, multinomial, sigma};
use crate::algebra::Poly;
use crate::scalar::{binomial, int, ratio, Rational, Scalar};

/// Polynomial families with rational coefficients. `L` is `l_n(x,m,s)`,
/// `V` is `v_n(x,m,s) = l_n(x,m,-s/4)`.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassicalFamily {
    Lucas,
    Fibonacci,
    ChebT,
    ChebU,
    L { m: usize, s: Rational },
    V { m: usize, s: Rational },
}

impl ClassicalFamily {
    /// Coefficient of `x^{n-2k}` in the closed form.
    pub fn coefficient(&self, n: usize, k: usize) -> Rational {
        if 2 * k > n {
            return Rational::zero();
        }
        let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
        let quarter_k = Rational::new(BigInt::one(), BigInt::from(4).pow(k as u32));
        match self {
            ClassicalFamily::Lucas => lucas_coefficient(n, k) * sign,
            ClassicalFamily::Fibonacci => big(binomial((n - k) as i64, k as i64)) * sign,
            ClassicalFamily::ChebT => lucas_coefficient(n, k) * sign * quarter_k,
            ClassicalFamily::ChebU => big(binomial((n - k) as i64, k as i64)) * sign * quarter_k,
            ClassicalFamily::L { m, s } => l_coefficient(n, k, *m) * Scalar::pow(s, k as u32),
            ClassicalFamily::V { m, s } => {
                l_coefficient(n, k, *m) * Scalar::pow(s, k as u32) * sign * quarter_k
            }
        }
    }

    pub fn closed_form(&self, n: usize) -> Poly<Rational> {
        from_coefficients(n, |k| self.coefficient(n, k))
    }

    /// `w(j)` in `p_n = x p_{n-1} - w(n-2) p_{n-2}`.
    pub fn recurrence_weight(&self, j: usize) -> Rational {
        match self {
            ClassicalFamily::Lucas => int(if j == 0 { 2 } else { 1 }),
            ClassicalFamily::Fibonacci => int(1),
            ClassicalFamily::ChebT => {
                if j == 0 {
                    ratio(1, 2)
                } else {
                    ratio(1, 4)
                }
            }
            ClassicalFamily::ChebU => ratio(1, 4),
            ClassicalFamily::L { m, s } => -(s.clone() * lambda(j, *m)),
            ClassicalFamily::V { m, s } => s.clone() * lambda(j, *m) * ratio(1, 4),
        }
    }

    /// `p_0, …, p_{n_max}` from the three-term recurrence.
    pub fn by_recurrence(&self, n_max: usize) -> Vec<Poly<Rational>> {
        three_term(n_max, |j| self.recurrence_weight(j))
    }

    /// Closed-form moment `L(x^n)` of the functional with `L(p_k) = [k=0]`.
    pub fn moment(&self, n: usize) -> Rational {
        if n % 2 == 1 {
            return Rational::zero();
        }
        let h = n / 2;
        let central = big(binomial(n as i64, h as i64));
        let quarter = Rational::new(BigInt::one(), BigInt::from(4).pow(h as u32));
        let catalan = central.clone() / int(h as i64 + 1);
        match self {
            ClassicalFamily::Lucas => central,
            ClassicalFamily::Fibonacci => catalan,
            ClassicalFamily::ChebT => central * quarter,
            ClassicalFamily::ChebU => catalan * quarter,
            ClassicalFamily::L { m, s } => Scalar::pow(&-s.clone(), h as u32) * sigma(*m, h),
            ClassicalFamily::V { m, s } => Scalar::pow(&(s.clone() * ratio(1, 4)), h as u32) * sigma(*m, h),
        }
    }

    /// Short name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalFamily::Lucas => "lucas",
            ClassicalFamily::Fibonacci => "fibonacci",
            ClassicalFamily::ChebT => "cheb_t",
            ClassicalFamily::ChebU => "cheb_u",
            ClassicalFamily::L { .. } => "l",
            ClassicalFamily::V { .. } => "v",
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalFamily::L { m, s } | ClassicalFamily::V { m, s } => {
                write!(f, "{}(m={m}, s={s})", self.name())
            }
            _ => write!(f, "{}", self.name()),
        }
    }
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `n/(n-k) C(n-k,k)`, with the `n = 0` value 1.
fn lucas_coefficient(n: usize, k: usize) -> Rational {
    if n == 0 {
        return int(1);
    }
    big(binomial((n - k) as i64, k as i64)) * Rational::new(BigInt::from(n), BigInt::from(n - k))
}

/// `n!/(k!(n-2k)!) / ∏_{j=1}^k (m+n-j)`.
fn l_coefficient(n: usize, k: usize, m: usize) -> Rational {
    if k == 0 {
        return int(1);
    }
    Rational::new(multinomial(n, k), falling(m + n - 1, k))
}

/// Polynomial with `coeff(k)` at `x^{n-2k}`.
pub(crate) fn from_coefficients<S: Scalar>(n: usize, coeff: impl Fn(usize) -> S) -> Poly<S> {
    let mut c = vec![S::zero(); n + 1];
    for k in 0..=n / 2 {
        c[n - 2 * k] = coeff(k);
    }
    Poly::new(c)
}

/// `p_0 = 1`, `p_1 = x`, `p_n = x p_{n-1} - w(n-2) p_{n-2}`.
pub(crate) fn three_term<S: Scalar>(n_max: usize, w: impl Fn(usize) -> S) -> Vec<Poly<S>> {
    let mut out: Vec<Poly<S>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let p = match n {
            0 => Poly::one(),
            1 => Poly::x(),
            _ => &out[n - 1].shift(1) - &out[n - 2].scalar_mul(&w(n - 2)),
        };
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[Rational]) -> Poly<Rational> {
        Poly::new(c.to_vec())
    }

    #[test]
    fn printed_l_list() {
        // x^2 + 2s/(m+1), x^4 + 12s/(m+3) x^2 + 12 s^2/((m+2)(m+3))
        for m in 0..4i64 {
            for s in [int(1), int(-1), ratio(-1, 4), ratio(3, 2)] {
                let f = ClassicalFamily::L { m: m as usize, s: s.clone() };
                let two = rp(&[s.clone() * ratio(2, m + 1), int(0), int(1)]);
                assert_eq!(f.closed_form(2), two);
                let four = rp(&[
                    s.clone() * s.clone() * ratio(12, (m + 2) * (m + 3)),
                    int(0),
                    s.clone() * ratio(12, m + 3),
                    int(0),
                    int(1),
                ]);
                assert_eq!(f.closed_form(4), four);
            }
        }
    }

    #[test]
    fn printed_v_list() {
        // x^5 - 5s x^3/(m+4) + 15 s^2 x/((2m+6)(2m+8))
        for m in 0..4i64 {
            let s = ratio(7, 3);
            let f = ClassicalFamily::V { m: m as usize, s: s.clone() };
            let five = rp(&[
                int(0),
                s.clone() * s.clone() * ratio(15, (2 * m + 6) * (2 * m + 8)),
                int(0),
                -(s.clone() * ratio(5, m + 4)),
                int(0),
                int(1),
            ]);
            assert_eq!(f.closed_form(5), five);
        }
    }

    #[test]
    fn closed_form_matches_recurrence() {
        let families = [
            ClassicalFamily::Lucas,
            ClassicalFamily::Fibonacci,
            ClassicalFamily::ChebT,
            ClassicalFamily::ChebU,
            ClassicalFamily::L { m: 0, s: int(-1) },
            ClassicalFamily::L { m: 3, s: ratio(5, 2) },
            ClassicalFamily::V { m: 2, s: int(-3) },
        ];
        for f in &families {
            let rec = f.by_recurrence(10);
            for (n, p) in rec.iter().enumerate() {
                assert_eq!(&f.closed_form(n), p, "{f} n={n}");
            }
        }
    }

    #[test]
    fn specialization_web() {
        for n in 0..11 {
            let l = |m, s| ClassicalFamily::L { m, s }.closed_form(n);
            assert_eq!(l(0, int(-1)), ClassicalFamily::Lucas.closed_form(n));
            assert_eq!(l(1, int(-1)), ClassicalFamily::Fibonacci.closed_form(n));
            assert_eq!(l(0, ratio(-1, 4)), ClassicalFamily::ChebT.closed_form(n));
            assert_eq!(l(1, ratio(-1, 4)), ClassicalFamily::ChebU.closed_form(n));
            let s = ratio(2, 7);
            assert_eq!(ClassicalFamily::V { m: 3, s: s.clone() }.closed_form(n), l(3, -s * ratio(1, 4)));
            if n >= 2 {
                let f = |k| ClassicalFamily::Fibonacci.closed_form(k);
                assert_eq!(ClassicalFamily::Lucas.closed_form(n), &f(n) - &f(n - 2));
            }
        }
    }
}
