use std::fmt;

use num::{One, Zero};

use super::classical::{from_coefficients, three_term};
use super::coeffs::{lambda_q, mu_q, multinomial_q, neg_q_poch, q_falling, sigma_q};
use crate::algebra::Poly;
use crate::scalar::{q_binomial_or_zero, q_factorial, q_int, QPoly, QRat, Scalar};

/// Polynomial families over `Q(q)`.
///
/// * `L`: `l_n(x,m,s,q)`, nice q-coefficients, generated by a q-difference
///   operator recurrence rather than a three-term one.
/// * `LittleH`: `h_n(x,s,q)`, the `m → ∞` limit of `L` after `s → s/(1-q)`.
/// * `V`: `v_n(x,m,s,q)`, orthogonal with three-term weights `s·μ_j(m,q)`.
/// * `BigH`: `H_n(x,s,q)`, discrete q-Hermite, the `m → ∞` limit of `V`.
/// * `R`: moments `[m]!/[m+n]!`.
/// * `LittleR`: `m → ∞` limit of `R`, all moments 1.
#[derive(Debug, Clone, PartialEq)]
pub enum QFamily {
    L { m: usize, s: QRat },
    LittleH { s: QRat },
    V { m: usize, s: QRat },
    BigH { s: QRat },
    R { m: usize },
    LittleR,
}

fn q_pow(e: usize) -> QPoly {
    QPoly::monomial(1, e)
}

fn sign(k: usize) -> QRat {
    QRat::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl QFamily {
    /// Coefficient of `x^{n-2k}` in the closed form.
    pub fn coefficient(&self, n: usize, k: usize) -> QRat {
        if 2 * k > n {
            return QRat::zero();
        }
        if k == 0 {
            return QRat::one();
        }
        match self {
            QFamily::L { m, s } => {
                let num = &q_pow(binom2(k)) * &multinomial_q(n, k);
                QRat::new(num, q_falling(m + n - 1, k)) * Scalar::pow(s, k as u32)
            }
            QFamily::LittleH { s } => {
                let num = &q_pow(binom2(k)) * &multinomial_q(n, k);
                QRat::from_poly(num) * Scalar::pow(s, k as u32)
            }
            QFamily::V { m, s } => {
                let num = &q_pow(k * k) * &multinomial_q(n, k);
                let den = &(&q_falling(m + n - 1, k) * &neg_q_poch(1, k))
                    * &neg_q_poch((n + m - k) as u32, k);
                QRat::new(num, den) * Scalar::pow(&-s.clone(), k as u32)
            }
            QFamily::BigH { s } => {
                let num = &q_pow(k * k) * &multinomial_q(n, k);
                QRat::new(num, neg_q_poch(1, k)) * Scalar::pow(&-s.clone(), k as u32)
            }
            QFamily::R { m } => {
                let num = &q_pow(binom2(k)) * &q_binomial_or_zero((n / 2) as i64, k as i64);
                QRat::new(num, q_falling(m + n - 1, k)) * sign(k)
            }
            QFamily::LittleR => {
                let num = &q_pow(binom2(k)) * &q_binomial_or_zero((n / 2) as i64, k as i64);
                QRat::from_poly(num) * sign(k)
            }
        }
    }

    pub fn closed_form(&self, n: usize) -> Poly<QRat> {
        from_coefficients(n, |k| self.coefficient(n, k))
    }

    /// Three-term weight `w(j)` in `p_n = x p_{n-1} - w(n-2) p_{n-2}`, for
    /// the families that are orthogonal.
    pub fn recurrence_weight(&self, j: usize) -> Option<QRat> {
        match self {
            QFamily::V { m, s } => Some(s.clone() * mu_q(j, *m)),
            QFamily::BigH { s } => Some(s.clone() * QRat::from_poly(&q_pow(j + 1) * &q_int(j + 1))),
            _ => None,
        }
    }

    /// `p_0, …, p_{n_max}` built without the closed form: the q-operator
    /// recurrence for `L`, the four-term recurrence for `LittleH`, three-term
    /// recurrences for `V` and `BigH`, inversion of the monomial expansion
    /// for `R`, and the product form for `LittleR`.
    pub fn by_recurrence(&self, n_max: usize) -> Vec<Poly<QRat>> {
        match self {
            QFamily::L { m, s } => operator_recurrence(*m, s, n_max),
            QFamily::LittleH { s } => four_term(s, n_max),
            QFamily::V { .. } | QFamily::BigH { .. } => {
                three_term(n_max, |j| self.recurrence_weight(j).expect("orthogonal family"))
            }
            QFamily::R { m } => invert_expansion(*m, n_max),
            QFamily::LittleR => (0..=n_max).map(product_form).collect(),
        }
    }

    /// Closed-form moment `L(x^n)`.
    pub fn moment(&self, n: usize) -> QRat {
        if n % 2 == 1 {
            return QRat::zero();
        }
        let h = n / 2;
        let central = QRat::new(q_factorial(2 * h), q_factorial(h));
        match self {
            QFamily::L { m, s } => Scalar::pow(&-s.clone(), h as u32) * sigma_q(*m, h),
            QFamily::LittleH { s } => Scalar::pow(&-s.clone(), h as u32) * central,
            QFamily::V { m, s } => {
                let den = &neg_q_poch(1, h) * &neg_q_poch((m + 1) as u32, h);
                (Scalar::pow(s, h as u32) * sigma_q(*m, h)).mul_poly(&q_pow(h)).div_poly(&den)
            }
            QFamily::BigH { s } => {
                let qs = s.clone() * QRat::from_poly(QPoly::q());
                Scalar::pow(&qs, h as u32) * central.div_poly(&neg_q_poch(1, h))
            }
            QFamily::R { m } => QRat::new(q_factorial(*m), q_factorial(m + h)),
            QFamily::LittleR => QRat::one(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            QFamily::L { .. } => "lq",
            QFamily::LittleH { .. } => "hq",
            QFamily::V { .. } => "vq",
            QFamily::BigH { .. } => "Hq",
            QFamily::R { .. } => "Rq",
            QFamily::LittleR => "rq",
        }
    }
}

impl fmt::Display for QFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFamily::L { m, s } | QFamily::V { m, s } => write!(f, "{}(m={m}, s={s})", self.name()),
            QFamily::LittleH { s } | QFamily::BigH { s } => write!(f, "{}(s={s})", self.name()),
            QFamily::R { m } => write!(f, "{}(m={m})", self.name()),
            QFamily::LittleR => write!(f, "{}", self.name()),
        }
    }
}

/// `l_n = (x - (1-q) s q^{-m} D_q) l_{n-1} + s q^{-m} λ_{n-2}(m,q) l_{n-2}`.
fn operator_recurrence(m: usize, s: &QRat, n_max: usize) -> Vec<Poly<QRat>> {
    let t = s.clone() * QRat::q_pow(-(m as i64));
    let one_minus_q = QRat::from_poly(QPoly::from_ints(&[1, -1]));
    let d_scale = one_minus_q * &t;
    let mut out: Vec<Poly<QRat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let p = match n {
            0 => Poly::one(),
            1 => Poly::x(),
            _ => {
                let prev = &out[n - 1];
                let step = &prev.shift(1) - &prev.d_q().scalar_mul(&d_scale);
                let w = t.clone() * lambda_q(n - 2, m);
                &step + &out[n - 2].scalar_mul(&w)
            }
        };
        out.push(p);
    }
    out
}

/// `h_n = x h_{n-1} + q^{n-2}(1+q)[n-1] s h_{n-2}
///        + (1-q) q^{n-3} s^2 [n-1][n-2][n-3] h_{n-4}`.
fn four_term(s: &QRat, n_max: usize) -> Vec<Poly<QRat>> {
    let s2 = s.clone() * s;
    let mut out: Vec<Poly<QRat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let p = match n {
            0 => Poly::one(),
            1 => Poly::x(),
            _ => {
                let c2 = QRat::from_poly(&(&q_pow(n - 2) * &QPoly::from_ints(&[1, 1])) * &q_int(n - 1)) * s;
                let mut p = &out[n - 1].shift(1) + &out[n - 2].scalar_mul(&c2);
                if n >= 4 {
                    let brackets = &(&q_int(n - 1) * &q_int(n - 2)) * &q_int(n - 3);
                    let c4 = QRat::from_poly(&(&QPoly::from_ints(&[1, -1]) * &q_pow(n - 3)) * &brackets) * &s2;
                    p = &p + &out[n - 4].scalar_mul(&c4);
                }
                p
            }
        };
        out.push(p);
    }
    out
}

/// Solves `x^n = Σ_k [⌊n/2⌋ k] / ∏_{j<k} [m+n-k-j] · R_{n-2k}` for `R_n`.
fn invert_expansion(m: usize, n_max: usize) -> Vec<Poly<QRat>> {
    let mut out: Vec<Poly<QRat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut p = Poly::monomial(QRat::one(), n);
        for k in 1..=n / 2 {
            let c = QRat::new(
                q_binomial_or_zero((n / 2) as i64, k as i64),
                q_falling(m + n - k, k),
            );
            p = &p - &out[n - 2 * k].scalar_mul(&c);
        }
        out.push(p);
    }
    out
}

/// `r_{2n} = ∏_{j<n} (x^2 - q^j)`, `r_{2n+1} = x r_{2n}`.
fn product_form(n: usize) -> Poly<QRat> {
    let mut p = Poly::one();
    for j in 0..n / 2 {
        let factor = Poly::new(vec![-QRat::q_pow(j as i64), QRat::zero(), QRat::one()]);
        p = &p * &factor;
    }
    if n % 2 == 1 {
        p = p.shift(1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn qr(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn printed_l_q_list() {
        for m in 0..4usize {
            let s = -QRat::q_pow(m as i64);
            let f = QFamily::L { m, s };
            // x^2 - q^m [2]/[m+1]
            let c = -QRat::new(&q_pow(m) * &q_int(2), q_int(m + 1));
            assert_eq!(f.closed_form(2), Poly::new(vec![c, QRat::zero(), QRat::one()]));
            // x^4 - q^m[3][4]/[m+3] x^2 + q^{2m+1}[3][4]/([m+2][m+3])
            let b34 = &q_int(3) * &q_int(4);
            let c2 = -QRat::new(&q_pow(m) * &b34, q_int(m + 3));
            let c0 = QRat::new(&q_pow(2 * m + 1) * &b34, &q_int(m + 2) * &q_int(m + 3));
            let four = Poly::new(vec![c0, QRat::zero(), c2, QRat::zero(), QRat::one()]);
            assert_eq!(f.closed_form(4), four);
        }
    }

    #[test]
    fn printed_v_q_list() {
        for m in 0..3usize {
            let s = qr("2 + q");
            let f = QFamily::V { m, s: s.clone() };
            // x^2 - qs/[2m+2]
            let c = -(QRat::new(QPoly::q(), q_int(2 * m + 2)) * &s);
            assert_eq!(f.closed_form(2), Poly::new(vec![c, QRat::zero(), QRat::one()]));
            // x^4 - q(1+q^2)[3]/[2m+6] s x^2 + q^4 [3] s^2/([2m+4][2m+6])
            let c2 = -(QRat::new(&QPoly::from_ints(&[0, 1, 0, 1]) * &q_int(3), q_int(2 * m + 6)) * &s);
            let c0 = QRat::new(&q_pow(4) * &q_int(3), &q_int(2 * m + 4) * &q_int(2 * m + 6)) * &(s.clone() * &s);
            assert_eq!(f.closed_form(4), Poly::new(vec![c0, QRat::zero(), c2, QRat::zero(), QRat::one()]));
        }
    }

    #[test]
    fn dual_construction() {
        let families = [
            QFamily::L { m: 0, s: QRat::from_int(-1) },
            QFamily::L { m: 2, s: qr("1 + q") },
            QFamily::LittleH { s: qr("-1 + 2*q") },
            QFamily::V { m: 1, s: QRat::from_int(1) },
            QFamily::BigH { s: qr("3") },
            QFamily::R { m: 2 },
            QFamily::LittleR,
        ];
        for f in &families {
            for (n, p) in f.by_recurrence(8).iter().enumerate() {
                assert_eq!(&f.closed_form(n), p, "{f} n={n}");
            }
        }
    }

    #[test]
    fn q_to_one_degeneration() {
        use super::super::classical::ClassicalFamily;
        let one = int(1);
        for n in 0..8 {
            for m in 0..3usize {
                let q = QFamily::L { m, s: QRat::from_int(-1) }.closed_form(n);
                let c = ClassicalFamily::L { m, s: int(-1) }.closed_form(n);
                for i in 0..=n {
                    assert_eq!(q.coeff(i).eval(&one).unwrap(), c.coeff(i));
                }
            }
        }
    }

    #[test]
    fn relation_between_m_zero_and_one() {
        // l_n(x,0,-1,q) = l_n(x,1,-1,q) - q^{n-1} l_{n-2}(x,1,-1,q)
        let s = QRat::from_int(-1);
        let l0 = QFamily::L { m: 0, s: s.clone() };
        let l1 = QFamily::L { m: 1, s };
        for n in 2..9 {
            let rhs = &l1.closed_form(n) - &l1.closed_form(n - 2).scalar_mul(&QRat::q_pow(n as i64 - 1));
            assert_eq!(l0.closed_form(n), rhs, "n={n}");
        }
    }
}
