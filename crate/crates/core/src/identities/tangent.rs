//! Odd-degree expansions through tangent numbers, the series `V_m(z)` and
//! their q-analogues.

use num::{BigInt, One, Zero};

use super::report::Ctx;
use super::util::{binom, binom2, fact, npoch, qbinom, qfact, qint, qp, qpow, qsgn, samples, sgn, Run};
use super::{Params, Ranges};
use crate::algebra::{
    genocchi_numbers, q_tangent_numbers, q_tanh_series, tangent_numbers, Normalization, Poly, Series,
};
use crate::families::{ClassicalFamily, QFamily};
use crate::params;
use crate::scalar::{int, q_double_factorial, q_factorial, QRat, Rational, Scalar};

fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn v(m: usize, s: i64) -> ClassicalFamily {
    ClassicalFamily::V { m, s: int(s) }
}

fn vq(m: usize, s: i64) -> QFamily {
    QFamily::V { m, s: QRat::from_int(s) }
}

fn pow2(e: usize) -> Rational {
    int(2).pow(e as i32)
}

/// eq-4.7 coefficient for `m > 0`.
fn a_tangent(n: usize, k: usize, m: usize, t: &[BigInt]) -> Rational {
    sgn(k) * binom(2 * n as i64 + 1, 2 * k as i64 + 1) * fact(m + 2 * n - 2 * k - 1) * fact(2 * m + 2 * n) * big(&t[k])
        / (fact(m + 2 * n) * fact(2 * m + 2 * n - 2 * k - 1) * pow2(2 * k + 1))
}

/// `m = 0` coefficients.
fn a_tangent_zero(n: usize, k: usize, t: &[BigInt]) -> Rational {
    if k == n {
        return sgn(n) * big(&t[n]) / pow2(2 * n);
    }
    sgn(k) * binom(2 * n as i64 + 1, 2 * k as i64 + 1) * big(&t[k]) / pow2(2 * k + 1)
}

fn odd_expansion(cx: &mut Ctx, r: &Ranges, m: usize, a: impl Fn(usize, usize) -> Rational) {
    for s in samples(r.max_n + 1) {
        let f = v(m, s);
        let b: Vec<Poly<Rational>> = (0..=2 * r.max_n + 1).map(|n| f.closed_form(n)).collect();
        for n in 0..=r.max_n {
            let rhs = (0..=n).fold(Poly::zero(), |acc, k| &acc + &b[2 * n - 2 * k].shift(2 * k + 1).scalar_mul(&a(n, k)));
            cx.eq_poly(params![m = m, s = s, n = n], &b[2 * n + 1], &rhs);
        }
    }
}

pub(super) fn eq_4_1(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let l = ClassicalFamily::L { m, s: int(-s) / int(4) };
            for n in 0..=r.max_n {
                cx.eq_poly(params![m = m, s = s, n = n], &v(m, s).closed_form(n), &l.closed_form(n));
            }
        }
    }
    Ok(())
}

pub(super) fn eq_4_3(r: &Ranges, cx: &mut Ctx) -> Run {
    let t = tangent_numbers(r.max_n + 1)?;
    for m in 1..=r.max_m {
        odd_expansion(cx, r, m, |n, k| a_tangent(n, k, m, &t));
    }
    Ok(())
}

pub(super) fn eq_4_5(r: &Ranges, cx: &mut Ctx) -> Run {
    let t = tangent_numbers(r.max_n + 1)?;
    odd_expansion(cx, r, 0, |n, k| a_tangent_zero(n, k, &t));
    Ok(())
}

/// `v_5(1,m,s) = c_4 v_4(1,m,s) + c_2 v_2(1,m,s) + c_0` at several `s`.
fn v5_example(cx: &mut Ctx, m: usize, c: [Rational; 3]) -> Run {
    let t = tangent_numbers(3)?;
    for s in samples(4) {
        let f = v(m, s);
        let at = |n: usize| f.closed_form(n).evaluate(&int(1));
        let rhs = c[0].clone() * at(4) + c[1].clone() * at(2) + c[2].clone();
        cx.eq(params![m = m, n = 2, s = s], at(5), rhs);
    }
    for (k, ck) in c.iter().enumerate() {
        let general = if m == 0 { a_tangent_zero(2, k, &t) } else { a_tangent(2, k, m, &t) };
        cx.eq(params![m = m, n = 2, k = k], general, ck.clone());
    }
    Ok(())
}

pub(super) fn eq_4_3_example(_: &Ranges, cx: &mut Ctx) -> Run {
    v5_example(cx, 0, [Rational::new(5.into(), 2.into()), Rational::new((-5).into(), 2.into()), int(1)])
}

pub(super) fn eq_4_14_example(_: &Ranges, cx: &mut Ctx) -> Run {
    v5_example(cx, 1, [int(3), int(-5), int(3)])
}

pub(super) fn eq_4_4(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = [1, 2, 16, 272, 7936];
    let t = tangent_numbers(printed.len().max(r.max_n + 1))?;
    for (n, p) in printed.iter().enumerate() {
        cx.eq(params![n = n], big(&t[n]), int(*p));
    }
    // Independent oracle: Euler zigzag numbers.
    let zig = zigzag(2 * t.len());
    for (n, tn) in t.iter().enumerate() {
        cx.eq(params![n = n, zigzag = 1], big(tn), big(&zig[2 * n + 1]));
    }
    Ok(())
}

/// Euler zigzag numbers `E_0 … E_{len-1}` by the boustrophedon transform.
fn zigzag(len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for n in 1..len {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

pub(super) fn eq_4_14(r: &Ranges, cx: &mut Ctx) -> Run {
    let t = tangent_numbers(r.max_n + 1)?;
    let g = genocchi_numbers(r.max_n + 2)?;
    for n in 0..=r.max_n {
        for k in 0..=n {
            let general = a_tangent(n, k, 1, &t);
            let tangent_form = sgn(k) * binom(2 * n as i64 + 2, 2 * k as i64 + 1) * big(&t[k]) / pow2(2 * k + 1);
            let genocchi_form =
                sgn(k) * binom(2 * n as i64 + 2, 2 * k as i64 + 2) * big(&g[k + 1]) / int(2 * (n - k) as i64 + 1);
            cx.eq(params![n = n, k = k], general.clone(), tangent_form);
            cx.eq(params![n = n, k = k, genocchi = 1], general, genocchi_form);
        }
    }
    Ok(())
}

pub(super) fn eq_4_15(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = [0, 1, 1, 3, 17, 155, 2073];
    let count = printed.len().max(r.max_n + 2);
    let g = genocchi_numbers(count)?;
    let t = tangent_numbers(count)?;
    for (n, p) in printed.iter().enumerate() {
        cx.eq(params![n = n], big(&g[n]), int(*p));
    }
    for n in 0..count - 1 {
        let rhs = int(n as i64 + 1) * big(&t[n]) / pow2(2 * n);
        cx.eq(params![n = n, tangent = 1], big(&g[n + 1]), rhs);
    }
    Ok(())
}

/// `V_m(z) = Σ (m+n-1)!/(2m+n-1)! v_n(1,m,s) z^n/n!` for `m ≥ 1`.
fn v_series(m: usize, s: &Rational, order: usize) -> Result<Series<Rational>, crate::algebra::SeriesError> {
    let f = ClassicalFamily::V { m, s: s.clone() };
    let coeffs = (0..=order)
        .map(|n| fact(m + n - 1) / fact(2 * m + n - 1) * f.closed_form(n).evaluate(&int(1)))
        .collect();
    Series::from_normalized(coeffs, order, Normalization::Factorial)
}

fn compare_series<S: crate::algebra::SeriesScalar>(cx: &mut Ctx, tag: &[(&'static str, i64)], lhs: &Series<S>, rhs: &Series<S>) {
    for n in 0..=lhs.order().min(rhs.order()) {
        let mut ps = tag.to_vec();
        ps.push(("n", n as i64));
        cx.eq(Params(ps), lhs.normalized_coeff(n), rhs.normalized_coeff(n));
    }
}

fn series_s_samples(r: &Ranges) -> Vec<i64> {
    let mut out = vec![0];
    out.extend(samples(r.order / 2 + 1));
    out
}

fn half_tanh(order: usize) -> Result<Series<Rational>, crate::algebra::SeriesError> {
    let e_neg = Series::exp(order).negate_argument();
    let one = Series::one(order, Normalization::Factorial);
    one.sub(&e_neg)?.div(&one.add(&e_neg)?)
}

pub(super) fn eq_4_8(r: &Ranges, cx: &mut Ctx) -> Run {
    let th = half_tanh(r.order)?;
    for m in 1..=r.max_m {
        for s in series_s_samples(r) {
            let vs = v_series(m, &int(s), r.order)?;
            let odd = vs.sub(&vs.negate_argument())?.scalar_mul(&Rational::new(1.into(), 2.into()));
            let even = vs.add(&vs.negate_argument())?.scalar_mul(&Rational::new(1.into(), 2.into()));
            compare_series(cx, &[("m", m as i64), ("s", s)], &odd, &th.mul(&even)?);
        }
    }
    Ok(())
}

pub(super) fn eq_4_10(r: &Ranges, cx: &mut Ctx) -> Run {
    cx.note("checked with V_m(z) + V_m(-z) on the right; the displayed form repeats the difference");
    let th = half_tanh(r.order)?;
    let mut flagged = false;
    for m in 1..=r.max_m {
        for s in series_s_samples(r) {
            let vs = v_series(m, &int(s), r.order)?;
            let vn = vs.negate_argument();
            let diff = vs.sub(&vn)?;
            compare_series(cx, &[("m", m as i64), ("s", s)], &diff, &th.mul(&vs.add(&vn)?)?);
            let printed = th.mul(&diff)?;
            if let (Some(i), false) = (diff.first_difference(&printed), flagged) {
                flagged = true;
                cx.flag(
                    params![m = m, s = s, n = i],
                    "displayed form has the difference on both sides",
                    printed.normalized_coeff(i).to_string(),
                    diff.normalized_coeff(i).to_string(),
                );
            }
        }
    }
    Ok(())
}

pub(super) fn eq_4_11(r: &Ranges, cx: &mut Ctx) -> Run {
    let e = Series::exp(r.order);
    let e_neg = e.negate_argument();
    for m in 1..=r.max_m {
        for s in series_s_samples(r) {
            let vs = v_series(m, &int(s), r.order)?;
            compare_series(cx, &[("m", m as i64), ("s", s)], &vs.negate_argument(), &e_neg.mul(&vs)?);
        }
    }
    Ok(())
}

pub(super) fn eq_4_12(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let f = v(m, s);
            let w: Vec<Rational> = (0..=r.max_n)
                .map(|k| fact(m + k - 1) / fact(2 * m + k - 1) * f.closed_form(k).evaluate(&int(1)))
                .collect();
            for n in 0..=r.max_n {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| acc + sgn(k) * binom(n as i64, k as i64) * w[k].clone());
                cx.eq(params![m = m, s = s, n = n], lhs, w[n].clone());
            }
        }
    }
    Ok(())
}

pub(super) fn eq_4_13(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for n in 0..=r.max_n {
            for j in 0..=r.max_j.min(n / 2) {
                let sum = (2 * j..=n).fold(Rational::zero(), |acc, k| {
                    acc + sgn(k) * fact(2 * m + n - 1) * fact(n - 2 * j) * fact(m + k - j - 1)
                        / (fact(n - k) * fact(2 * m + k - 1) * fact(k - 2 * j) * fact(m + n - j - 1))
                });
                cx.eq_classical(params![m = m, n = n, j = j], sum, Rational::one());
            }
        }
        for n in 0..=r.max_n {
            for j in 0..=r.max_j {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + sgn(k) * fact(m + k + j - 1) / (fact(n - k) * fact(2 * m + k + 2 * j - 1) * fact(k))
                });
                let rhs = fact(m + n + j - 1) / (fact(2 * m + n + 2 * j - 1) * fact(n));
                cx.eq(params![m = m, n = n, j = j, gauss = 1], lhs, rhs);
            }
        }
    }
    Ok(())
}

fn double_factorial_odd(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(2 * i as i64 - 1))
}

pub(super) fn eq_4_16(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        let wide = r.order + 2 * m - 1;
        let e = Series::exp(wide);
        let mut num = Series::from_plain(vec![], wide, Normalization::Factorial);
        for k in 0..m {
            let c = sgn(k) * binom((m + k - 1) as i64, 2 * k as i64) * pow2(k) * double_factorial_odd(k);
            let shifted = e.add(&Series::one(wide, Normalization::Factorial).scalar_mul(&sgn(m + k)))?;
            num = num.add(&shifted.mul_z_power(m - 1 - k).scalar_mul(&c))?;
        }
        let closed = num.div_z_power(2 * m - 1)?;
        compare_series(cx, &[("m", m as i64)], &v_series(m, &int(0), r.order)?, &closed);
    }
    Ok(())
}

/// Odd expansion over `Q(q)`: `p_{2n+1} = Σ_k c(n,k) x^{2k+1} p_{2n-2k}`.
fn q_odd_expansion(
    cx: &mut Ctx,
    tag: &[(&'static str, i64)],
    basis: &[Poly<QRat>],
    n_max: usize,
    c: impl Fn(usize, usize) -> QRat,
) {
    for n in 0..=n_max {
        let rhs = (0..=n).fold(Poly::zero(), |acc, k| &acc + &basis[2 * n - 2 * k].shift(2 * k + 1).scalar_mul(&c(n, k)));
        let mut ps = tag.to_vec();
        ps.push(("n", n as i64));
        cx.eq_poly(Params(ps), &basis[2 * n + 1], &rhs);
    }
}

/// Half-index bound for the odd q-expansions.
fn q_half(r: &Ranges) -> usize {
    r.max_n / 2 + 1
}

pub(super) fn eq_4_19(r: &Ranges, cx: &mut Ctx) -> Run {
    let half = q_half(r);
    let tq: Vec<QRat> = q_tangent_numbers(half + 1)?.into_iter().map(qp).collect();
    for m in 1..=r.max_m {
        for s in samples(half + 1) {
            let f = vq(m, s);
            let b: Vec<Poly<QRat>> = (0..=2 * half + 1).map(|n| f.closed_form(n)).collect();
            q_odd_expansion(cx, &[("m", m as i64), ("s", s)], &b, half, |n, k| {
                qsgn(k) * qbinom(2 * n as i64 + 1, 2 * k as i64 + 1) * qfact(2 * m + 2 * n) * qfact(m + 2 * n - 2 * k - 1)
                    / (qfact(m + 2 * n) * qfact(2 * m + 2 * n - 2 * k - 1))
                    * tq[k].clone()
                    / npoch(m + 2 * n - 2 * k, 2 * k + 1)
            });
        }
    }
    Ok(())
}

pub(super) fn eq_4_20(r: &Ranges, cx: &mut Ctx) -> Run {
    let f = |p: &str| p.parse::<QRat>();
    let printed = [
        f("1")?,
        f("q")? * f("1 + q")?,
        f("q^2")? * Scalar::pow(&f("1 + q")?, 2) * Scalar::pow(&f("1 + q^2")?, 2),
        f("q^3")?
            * Scalar::pow(&f("1 + q")?, 2)
            * f("1 + q^2")?
            * f("1 + q^3")?
            * f("1 + q + 3*q^2 + 2*q^3 + 3*q^4 + 2*q^5 + 3*q^6 + q^7 + q^8")?,
    ];
    let count = printed.len().max(q_half(r) + 1);
    let tq = q_tangent_numbers(count)?;
    let t = tangent_numbers(count)?;
    for (n, p) in printed.iter().enumerate() {
        cx.eq(params![n = n], qp(tq[n].clone()), p.clone());
    }
    for (n, tn) in tq.iter().enumerate() {
        cx.eq(params![n = n, q1 = 1], tn.eval(&int(1)), big(&t[n]));
    }
    let series = q_tanh_series(2 * count - 1)?;
    for (n, tn) in tq.iter().enumerate() {
        let c = series.normalized_coeff(2 * n + 1) * qsgn(n);
        cx.eq(params![n = n, series = 1], c, qp(tn.clone()));
    }
    Ok(())
}

/// `V_m(z,q)` with q-factorial normalization.
fn vq_series(m: usize, s: &QRat, order: usize) -> Result<Series<QRat>, crate::algebra::SeriesError> {
    let f = QFamily::V { m, s: s.clone() };
    let coeffs = (0..=order)
        .map(|n| qfact(m + n - 1) * npoch(m, n) / qfact(2 * m + n - 1) * f.closed_form(n).evaluate(&QRat::one()))
        .collect();
    Series::from_normalized(coeffs, order, Normalization::QFactorial)
}

fn big_e(order: usize) -> Result<Series<QRat>, crate::algebra::SeriesError> {
    let e = Series::e_q(order);
    e.div(&e.negate_argument())
}

pub(super) fn eq_4_22(r: &Ranges, cx: &mut Ctx) -> Run {
    let th = q_tanh_series(r.order)?;
    for m in 1..=r.max_m {
        for s in series_s_samples(r) {
            let vs = vq_series(m, &QRat::from_int(s), r.order)?;
            let vn = vs.negate_argument();
            compare_series(cx, &[("m", m as i64), ("s", s)], &vs.sub(&vn)?, &th.mul(&vs.add(&vn)?)?);
        }
    }
    Ok(())
}

pub(super) fn eq_4_23(r: &Ranges, cx: &mut Ctx) -> Run {
    let e = big_e(r.order)?;
    for m in 1..=r.max_m {
        for s in series_s_samples(r) {
            let vs = vq_series(m, &QRat::from_int(s), r.order)?;
            compare_series(cx, &[("m", m as i64), ("s", s)], &e.mul(&vs.negate_argument())?, &vs);
        }
    }
    Ok(())
}

pub(super) fn eq_4_24(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let f = vq(m, s);
            let w: Vec<QRat> = (0..=r.max_n)
                .map(|k| qfact(m + k - 1) / qfact(2 * m + k - 1) * f.closed_form(k).evaluate(&QRat::one()))
                .collect();
            for n in 0..=r.max_n {
                let lhs = (0..=n).fold(QRat::zero(), |acc, k| {
                    acc + qsgn(k) * qbinom(n as i64, k as i64) * npoch(0, n - k) * npoch(m, k) * w[k].clone()
                });
                cx.eq(params![m = m, s = s, n = n], lhs, npoch(m, n) * w[n].clone());
            }
        }
    }
    Ok(())
}

pub(super) fn eq_4_25(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for n in 0..=r.max_n {
            for j in 0..=r.max_j.min(n / 2) {
                let sum = (2 * j..=n).fold(QRat::zero(), |acc, k| {
                    acc + qsgn(k) * npoch(0, n - k) * npoch(m, k) * npoch(n + m - j, j)
                        / (npoch(m, n) * npoch(k + m - j, j))
                        * qfact(2 * m + n - 1)
                        * qfact(m + k - j - 1)
                        * qfact(n - 2 * j)
                        / (qfact(n - k) * qfact(2 * m + k - 1) * qfact(k - 2 * j) * qfact(m + n - j - 1))
                });
                cx.eq_q(params![m = m, n = n, j = j], sum.clone(), QRat::one(), sum);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_4_27(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        let wide = r.order + 2 * m - 1;
        let e = big_e(wide)?;
        let one = Series::one(wide, Normalization::QFactorial);
        let mut num = Series::from_plain(vec![], wide, Normalization::QFactorial);
        for k in 0..m {
            let c = qsgn(k) * qpow(binom2(m - 1 - k)) * qbinom((m + k - 1) as i64, 2 * k as i64) * qp(q_double_factorial(k));
            let shifted = e.add(&one.scalar_mul(&qsgn(m + k)))?;
            num = num.add(&shifted.mul_z_power(m - 1 - k).scalar_mul(&c))?;
        }
        let den = qpow((m - 1) * (m - 1)) * npoch(0, m);
        let closed = num.div_z_power(2 * m - 1)?.scalar_mul(&(QRat::one() / den));
        compare_series(cx, &[("m", m as i64)], &vq_series(m, &QRat::zero(), r.order)?, &closed);
    }
    Ok(())
}

pub(super) fn eq_4_28(r: &Ranges, cx: &mut Ctx) -> Run {
    let half = q_half(r);
    let tq: Vec<QRat> = q_tangent_numbers(half + 1)?.into_iter().map(qp).collect();
    for s in samples(half + 1) {
        let f = QFamily::BigH { s: QRat::from_int(s) };
        let b: Vec<Poly<QRat>> = (0..=2 * half + 1).map(|n| f.closed_form(n)).collect();
        q_odd_expansion(cx, &[("s", s)], &b, half, |n, k| {
            qsgn(k) * qbinom(2 * n as i64 + 1, 2 * k as i64 + 1) * tq[k].clone()
        });
    }
    Ok(())
}

pub(super) fn rem_h_genfun(r: &Ranges, cx: &mut Ctx) -> Run {
    cx.note("series read with z^n/[n]! on the left");
    for s in series_s_samples(r) {
        let f = QFamily::BigH { s: QRat::from_int(s) };
        let lhs = Series::from_normalized(
            (0..=r.order).map(|n| f.closed_form(n).evaluate(&QRat::one())).collect(),
            r.order,
            Normalization::QFactorial,
        )?;
        let w = QRat::from_int(s) * qpow(1) / qint(2);
        let mut c = vec![QRat::zero(); r.order + 1];
        for j in 0..=r.order / 2 {
            c[2 * j] = Scalar::pow(&w, j as u32) / qp(q_factorial(j).substitute_power(2));
        }
        let den = Series::from_plain(c, r.order, Normalization::QFactorial);
        compare_series(cx, &[("s", s)], &lhs, &Series::e_q(r.order).div(&den)?);
    }
    Ok(())
}
