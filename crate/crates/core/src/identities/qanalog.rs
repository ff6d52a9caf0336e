//! The q-analogues `l_n(x,m,s,q)`, `h_n(x,s,q)`, `R(n,m,q)` and `r_n(x,q)`.

use num::{One, Zero};

use super::report::Ctx;
use super::util::{a_q, binom2, qbinom, qfact, qint, qp, qpow, qsgn, samples, Run};
use super::{Params, Ranges};
use crate::algebra::Poly;
use crate::families::special::{q_fibonacci_at_one, q_l_m2_at_one_scaled};
use crate::families::{lambda, lambda_q, sigma, sigma_q, Functional, QFamily};
use crate::params;
use crate::scalar::{int, QPoly, QRat, Scalar};

type QPolyX = Poly<QRat>;

fn x_pow(n: usize) -> QPolyX {
    Poly::monomial(QRat::one(), n)
}

fn basis(f: &QFamily, n_max: usize) -> Vec<QPolyX> {
    (0..=n_max).map(|n| f.closed_form(n)).collect()
}

fn expansion(n: usize, basis: &[QPolyX], c: impl Fn(usize) -> QRat) -> QPolyX {
    (0..=n / 2).fold(Poly::zero(), |acc, k| &acc + &basis[n - 2 * k].scalar_mul(&c(k)))
}

pub(super) fn dual(cx: &mut Ctx, f: &QFamily, n_max: usize, extra: &[(&'static str, i64)]) {
    for (n, p) in f.by_recurrence(n_max).iter().enumerate() {
        let mut ps = extra.to_vec();
        ps.push(("n", n as i64));
        cx.eq_poly(Params(ps), &f.closed_form(n), p);
    }
}

/// Moments `x^0 … x^{2N}` of the functional annihilating `f`.
pub(super) fn moments(
    cx: &mut Ctx,
    f: &QFamily,
    n_max: usize,
    extra: &[(&'static str, i64)],
    expected: impl Fn(usize) -> QRat,
) -> Run {
    let func = Functional::from_basis(&basis(f, 2 * n_max + 1))?;
    for n in 0..=n_max {
        let mut ps = extra.to_vec();
        ps.push(("n", n as i64));
        cx.eq(Params(ps.clone()), func.moments()[2 * n].clone(), expected(n));
        ps.push(("odd", 1));
        cx.eq(Params(ps), func.moments()[2 * n + 1].clone(), QRat::zero());
    }
    Ok(())
}

fn neg_qm(m: usize) -> QRat {
    -qpow(m)
}

fn one() -> crate::scalar::Rational {
    int(1)
}

pub(super) fn eq_2_1(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for n in 0..=r.max_n {
            let sq = sigma_q(m, n);
            let product = qfact(2 * n) / qfact(n) * (qfact(m) / qfact(m + n));
            cx.eq(params![m = m, n = n], sq.clone(), product);
            cx.eq(params![m = m, n = n, q1 = 1], sq.eval(&one())?, sigma(m, n));
        }
    }
    Ok(())
}

pub(super) fn eq_2_3(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            dual(cx, &QFamily::L { m, s: QRat::from_int(s) }, r.max_n, &[("m", m as i64), ("s", s)]);
        }
        dual(cx, &QFamily::L { m, s: neg_qm(m) }, r.max_n, &[("m", m as i64), ("s_neg_qm", 1)]);
    }
    Ok(())
}

pub(super) fn eq_2_4(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for n in 0..=r.max_n {
            cx.eq(params![m = m, n = n], lambda_q(n, m).eval(&one())?, lambda(n, m));
        }
    }
    Ok(())
}

/// `c(n,k)` of `l_n(x,m,-q^m,q)`.
fn c_closed(n: usize, k: usize, m: usize) -> QRat {
    if 2 * k > n {
        return QRat::zero();
    }
    if k == 0 {
        return QRat::one();
    }
    qsgn(k) * qpow(binom2(k) + m * k) * qbinom((n - k) as i64, k as i64) * qfact(n) / qfact(n - k) * qfact(m + n - k - 1)
        / qfact(m + n - 1)
}

pub(super) fn eq_2_5(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let f = QFamily::L { m, s: neg_qm(m) };
        let b = basis(&f, r.max_n);
        for n in 0..=r.max_n {
            for k in 0..=n / 2 {
                if m + n == 0 {
                    continue;
                }
                cx.eq(params![m = m, n = n, k = k, closed = 1], b[n].coeff(n - 2 * k), c_closed(n, k, m));
            }
            if n < 2 {
                continue;
            }
            let prev = &b[n - 1];
            let one_minus_q = qp(&QPoly::one() - &QPoly::q());
            let op = &(&prev.shift(1) + &prev.d_q().scalar_mul(&one_minus_q)) - &b[n - 2].scalar_mul(&lambda_q(n - 2, m));
            cx.eq_poly(params![m = m, n = n], &op, &b[n]);
            for k in 1..=n / 2 {
                let rhs = c_closed(n - 1, k, m) + qp(&QPoly::one() - &QPoly::monomial(1, n + 1 - 2 * k)) * c_closed(n - 1, k - 1, m)
                    - lambda_q(n - 2, m) * c_closed(n - 2, k - 1, m);
                cx.eq(params![m = m, n = n, k = k, rec = 1], c_closed(n, k, m), rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_2_6(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let b = basis(&QFamily::L { m, s: QRat::from_int(s) }, r.max_n);
            for n in 0..=r.max_n {
                let rhs = expansion(n, &b, |k| Scalar::pow(&QRat::from_int(-s), k as u32) * a_q(n, k, m));
                cx.eq_poly(params![m = m, s = s, n = n], &x_pow(n), &rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_2_7(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let f = QFamily::L { m, s: neg_qm(m) };
        moments(cx, &f, r.max_n, &[("m", m as i64)], |n| qpow(m * n) * sigma_q(m, n))?;
    }
    Ok(())
}

pub(super) fn eq_2_8(r: &Ranges, cx: &mut Ctx) -> Run {
    let top = r.max_n.max(1) + 1;
    let b = basis(&QFamily::L { m: 1, s: -qpow(1) }, top);
    let ballot = |top: usize, low: i64| qbinom(top as i64, low) - qbinom(top as i64, low - 1);
    for n in 0..=top / 2 {
        let mut sum_a = Poly::zero();
        let mut sum_b = Poly::zero();
        for k in 0..=n {
            let a = qpow(n - k) * qfact(2 * n) * qint(2 * k + 1) / (qfact(n - k) * qfact(n + 1 + k));
            let bb = ballot(2 * n, (n - k) as i64);
            cx.eq(params![n = n, k = k, even = 1], a.clone(), bb.clone());
            sum_a = &sum_a + &b[2 * k].scalar_mul(&a);
            sum_b = &sum_b + &b[2 * k].scalar_mul(&bb);
        }
        cx.eq_poly(params![n = n, even = 1], &x_pow(2 * n), &sum_a);
        cx.eq_poly(params![n = n, even = 1, ballot = 1], &x_pow(2 * n), &sum_b);
        if n == 0 {
            continue;
        }
        let mut odd = Poly::zero();
        for k in 1..=n {
            let a = qpow(n - k) * qfact(2 * n - 1) * qint(2 * k) / (qfact(n - k) * qfact(n + k));
            let bb = ballot(2 * n - 1, (n - k) as i64);
            cx.eq(params![n = n, k = k, odd = 1], a.clone(), bb);
            odd = &odd + &b[2 * k - 1].scalar_mul(&a);
        }
        cx.eq_poly(params![n = n, odd = 1], &x_pow(2 * n - 1), &odd);
    }
    Ok(())
}

/// `[n]!/([k]![n-2k]!)`.
fn c_nk(n: usize, k: usize) -> QRat {
    qp(crate::families::multinomial_q(n, k))
}

pub(super) fn eq_2_9(r: &Ranges, cx: &mut Ctx) -> Run {
    for s in samples(r.max_n / 2 + 1) {
        let b = basis(&QFamily::LittleH { s: QRat::from_int(s) }, r.max_n);
        for n in 0..=r.max_n {
            let rhs = expansion(n, &b, |k| Scalar::pow(&QRat::from_int(-s), k as u32) * c_nk(n, k));
            cx.eq_poly(params![s = s, n = n], &x_pow(n), &rhs);
        }
    }
    let f = QFamily::LittleH { s: QRat::from_int(-1) };
    moments(cx, &f, r.max_n, &[("moment", 1)], |n| qfact(2 * n) / qfact(n))
}

pub(super) fn eq_2_10(r: &Ranges, cx: &mut Ctx) -> Run {
    for s in samples(r.max_n / 2 + 1) {
        dual(cx, &QFamily::LittleH { s: QRat::from_int(s) }, r.max_n, &[("s", s)]);
    }
    Ok(())
}

pub(super) fn rem_r_big(r: &Ranges, cx: &mut Ctx) -> Run {
    cx.note("bracket top read as floor(n/2)");
    for m in 0..=r.max_m {
        let f = QFamily::R { m };
        dual(cx, &f, r.max_n, &[("m", m as i64)]);
        let b = basis(&f, r.max_n);
        for n in 0..=r.max_n {
            let rhs = expansion(n, &b, |k| {
                let den = (0..k).fold(QRat::one(), |acc, j| acc * qint(m + n - k - j));
                qbinom((n / 2) as i64, k as i64) / den
            });
            cx.eq_poly(params![m = m, n = n, inverse = 1], &x_pow(n), &rhs);
        }
        moments(cx, &f, r.max_n, &[("m", m as i64), ("moment", 1)], |n| qfact(m) / qfact(m + n))?;
    }
    Ok(())
}

pub(super) fn rem_r_small(r: &Ranges, cx: &mut Ctx) -> Run {
    let f = QFamily::LittleR;
    dual(cx, &f, r.max_n, &[]);
    for n in 0..=r.max_n {
        let mut p: QPolyX = if n % 2 == 1 { Poly::x() } else { Poly::one() };
        for j in 0..n / 2 {
            p = &p * &Poly::new(vec![-qpow(j), QRat::zero(), QRat::one()]);
        }
        cx.eq_poly(params![n = n, product = 1], &f.closed_form(n), &p);
    }
    moments(cx, &f, r.max_n, &[("moment", 1)], |_| QRat::one())
}

fn lq_at_one(m: usize, n: usize) -> QRat {
    QFamily::L { m, s: QRat::from_int(-1) }.closed_form(n).evaluate(&QRat::one())
}

fn q_list(printed: &[&str]) -> Vec<QRat> {
    printed.iter().map(|p| p.parse().expect("printed value parses")).collect()
}

fn printed_q_sequence(cx: &mut Ctx, printed: &[QRat], computed: &[QRat]) {
    for (n, p) in printed.iter().enumerate() {
        if computed[n] == *p {
            cx.eq(params![n = n, printed = 1], computed[n].clone(), p.clone());
        } else {
            cx.flag(params![n = n], "printed sequence entry differs", p.to_string(), computed[n].to_string());
        }
    }
}

pub(super) fn eq_2_11(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = q_list(&["1", "1", "0", "-q", "-q^2", "0", "q^5", "q^7", "0", "-q^12", "-q^15", "0"]);
    let count = printed.len().max(r.max_n + 1);
    let computed: Vec<QRat> = (0..count).map(|n| lq_at_one(1, n)).collect();
    printed_q_sequence(cx, &printed, &computed);
    Ok(())
}

pub(super) fn eq_2_12(r: &Ranges, cx: &mut Ctx) -> Run {
    let top = 3 * r.max_n + 2;
    let values: Vec<QRat> = (0..=top).map(|n| lq_at_one(1, n)).collect();
    for t in 0..=r.max_n {
        for i in 0..3 {
            let n = 3 * t + i;
            cx.eq(params![n = t, i = i], values[n].clone(), qp(q_fibonacci_at_one(n)));
            if t >= 1 {
                let rec = values[n].clone() + qpow(3 * t + i - 2) * values[n - 3].clone();
                cx.eq(params![n = t, i = i, rec = 1], rec, QRat::zero());
            }
        }
    }
    Ok(())
}

pub(super) fn eq_2_13(r: &Ranges, cx: &mut Ctx) -> Run {
    let l0 = basis(&QFamily::L { m: 0, s: QRat::from_int(-1) }, r.max_n.max(7));
    let l1 = basis(&QFamily::L { m: 1, s: QRat::from_int(-1) }, r.max_n.max(7));
    for n in 2..l0.len() {
        let rhs = &l1[n] - &l1[n - 2].scalar_mul(&qpow(n - 1));
        cx.eq_poly(params![n = n], &l0[n], &rhs);
    }
    let printed = q_list(&["1", "1", "-q", "-q - q^2", "-q^2", "q^5", "q^5 + q^7", "-q^12"]);
    let computed: Vec<QRat> = l0.iter().map(|p| p.evaluate(&QRat::one())).collect();
    printed_q_sequence(cx, &printed, &computed);
    Ok(())
}

pub(super) fn eq_2_14(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = q_list(&[
        "1",
        "1 + q",
        "q^2",
        "-q - q^2",
        "-q^2 - q^3 - q^4 - q^5",
        "-q^6 - q^7",
        "q^5 + q^6 + q^7",
    ]);
    let top = (3 * r.max_n + 2).max(printed.len() - 1);
    let f: Vec<QRat> = (0..=top).map(|n| lq_at_one(2, n) * qint(n + 1)).collect();
    printed_q_sequence(cx, &printed, &f);
    let q3 = qint(3);
    for t in 0..=r.max_n {
        for i in 0..3 {
            let n = 3 * t + i;
            cx.eq(params![n = t, i = i], f[n].clone(), qp(q_l_m2_at_one_scaled(n)));
            if t >= 3 {
                let rec = f[n].clone()
                    + qpow(3 * t - 2 + i) * q3.clone() * f[n - 3].clone()
                    + qpow(6 * t - 6 + 2 * i) * q3.clone() * f[n - 6].clone()
                    + qpow(9 * t - 12 + 3 * i) * f[n - 9].clone();
                cx.eq(params![n = t, i = i, rec = 1], rec, QRat::zero());
            }
        }
    }
    Ok(())
}
