//! Lucas, Fibonacci, Chebyshev and the super Catalan family `l_n(x,m,s)`,
//! together with the lattice-path sums built on them.

use num::{One, Zero};

use super::report::Ctx;
use super::util::{binom, fact, indicator, samples, sgn, Run};
use super::Ranges;
use crate::algebra::Poly;
use crate::families::special::{
    chebyshev_like_at_one, chebyshev_like_at_one_folded, fibonacci_at_one_periodic, genfun_convolution_check,
    l_m2_at_one_scaled, lucas_at_one_periodic,
};
use crate::families::{a_coeff, lambda, sigma, ClassicalFamily, Functional};
use crate::lattice::{brute_force_between, lucas_weights, PathTable, Weights};
use crate::params;
use crate::scalar::{int, ratio, Rational};

type RPoly = Poly<Rational>;

fn l_family(m: usize, s: i64) -> ClassicalFamily {
    ClassicalFamily::L { m, s: int(s) }
}

fn x_pow(n: usize) -> RPoly {
    Poly::monomial(int(1), n)
}

/// `Σ_k c(k) p_{n-2k}` over `0 ≤ 2k ≤ n`.
fn expansion(n: usize, basis: &[RPoly], c: impl Fn(usize) -> Rational) -> RPoly {
    (0..=n / 2).fold(Poly::zero(), |acc, k| &acc + &basis[n - 2 * k].scalar_mul(&c(k)))
}

fn basis(f: &ClassicalFamily, n_max: usize) -> Vec<RPoly> {
    (0..=n_max).map(|n| f.closed_form(n)).collect()
}

/// Moments of the functional annihilating `f` against `expected`, both
/// parities, for `x^0 … x^{2N}`.
fn moments(cx: &mut Ctx, f: &ClassicalFamily, n_max: usize, expected: impl Fn(usize) -> Rational) -> Run {
    let func = Functional::from_basis(&basis(f, 2 * n_max + 1))?;
    for n in 0..=n_max {
        cx.eq(params![n = n], func.moments()[2 * n].clone(), expected(n));
        cx.eq(params![n = n, odd = 1], func.moments()[2 * n + 1].clone(), Rational::zero());
    }
    Ok(())
}

fn dual(cx: &mut Ctx, f: &ClassicalFamily, n_max: usize, extra: &[(&'static str, i64)]) {
    for (n, p) in f.by_recurrence(n_max).iter().enumerate() {
        let mut ps = extra.to_vec();
        ps.push(("n", n as i64));
        cx.eq_poly(super::Params(ps), &f.closed_form(n), p);
    }
}

fn catalan(n: usize) -> Rational {
    binom(2 * n as i64, n as i64) / int(n as i64 + 1)
}

pub(super) fn eq_0_2(r: &Ranges, cx: &mut Ctx) -> Run {
    dual(cx, &ClassicalFamily::Lucas, r.max_n, &[]);
    dual(cx, &ClassicalFamily::Fibonacci, r.max_n, &[("fib", 1)]);
    Ok(())
}

pub(super) fn eq_0_3(r: &Ranges, cx: &mut Ctx) -> Run {
    let b = basis(&ClassicalFamily::Lucas, r.max_n);
    for n in 0..=r.max_n {
        let rhs = expansion(n, &b, |k| binom(n as i64, k as i64));
        cx.eq_poly(params![n = n], &x_pow(n), &rhs);
    }
    Ok(())
}

pub(super) fn eq_0_4(r: &Ranges, cx: &mut Ctx) -> Run {
    moments(cx, &ClassicalFamily::Lucas, r.max_n, |n| binom(2 * n as i64, n as i64))
}

pub(super) fn eq_0_6(r: &Ranges, cx: &mut Ctx) -> Run {
    let b = basis(&ClassicalFamily::Fibonacci, r.max_n);
    for n in 0..=r.max_n {
        let n64 = n as i64;
        let rhs = expansion(n, &b, |k| binom(n64, k as i64) - binom(n64, k as i64 - 1));
        cx.eq_poly(params![n = n], &x_pow(n), &rhs);
    }
    Ok(())
}

pub(super) fn eq_0_7(r: &Ranges, cx: &mut Ctx) -> Run {
    moments(cx, &ClassicalFamily::Fibonacci, r.max_n, catalan)?;
    for n in 2..=r.max_n {
        let f = ClassicalFamily::Fibonacci;
        let diff = &f.closed_form(n) - &f.closed_form(n - 2);
        cx.eq_poly(params![n = n, lucas = 1], &ClassicalFamily::Lucas.closed_form(n), &diff);
    }
    Ok(())
}

pub(super) fn eq_0_8(r: &Ranges, cx: &mut Ctx) -> Run {
    dual(cx, &ClassicalFamily::ChebT, r.max_n, &[("dual", 1)]);
    moments(cx, &ClassicalFamily::ChebT, r.max_n, |n| binom(2 * n as i64, n as i64) / int(4).pow(n as i32))
}

pub(super) fn eq_0_9(r: &Ranges, cx: &mut Ctx) -> Run {
    dual(cx, &ClassicalFamily::ChebU, r.max_n, &[("dual", 1)]);
    moments(cx, &ClassicalFamily::ChebU, r.max_n, |n| catalan(n) / int(4).pow(n as i32))
}

pub(super) fn eq_1_1(r: &Ranges, cx: &mut Ctx) -> Run {
    let super_catalan = |m: usize, n: usize| fact(2 * m) * fact(2 * n) / (fact(m) * fact(n) * fact(m + n));
    for m in 0..=r.max_m {
        for n in 0..=r.max_n {
            cx.eq(params![m = m, n = n], sigma(m, n), super_catalan(m, n) / super_catalan(m, 0));
        }
    }
    let printed = [int(1), ratio(2, 3), int(1), int(2), ratio(14, 3), int(12), int(33), ratio(286, 3)];
    for (n, p) in printed.into_iter().enumerate() {
        cx.eq(params![m = 2, n = n, printed = 1], sigma(2, n), p);
    }
    Ok(())
}

pub(super) fn eq_1_3(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            dual(cx, &l_family(m, s), r.max_n, &[("m", m as i64), ("s", s)]);
        }
    }
    Ok(())
}

fn printed_sequence(
    cx: &mut Ctx,
    printed: &[i64],
    computed: impl Fn(usize) -> Rational,
    closed: impl Fn(usize) -> Rational,
    count: usize,
) {
    for n in 0..count.max(printed.len()) {
        let value = computed(n);
        cx.eq(params![n = n], value.clone(), closed(n));
        if let Some(&p) = printed.get(n) {
            if value != int(p) {
                cx.flag(params![n = n], "printed sequence entry differs", p.to_string(), value.to_string());
            }
        }
    }
}

fn l_at_one(m: usize, n: usize) -> Rational {
    l_family(m, -1).closed_form(n).evaluate(&int(1))
}

pub(super) fn eq_1_5(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = [1, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1];
    let closed = |n: usize| if n == 0 { int(1) } else { lucas_at_one_periodic(n) };
    printed_sequence(cx, &printed, |n| l_at_one(0, n), closed, 2 * r.max_n);
    Ok(())
}

pub(super) fn eq_1_6(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0];
    printed_sequence(cx, &printed, |n| l_at_one(1, n), fibonacci_at_one_periodic, 2 * r.max_n);
    Ok(())
}

pub(super) fn eq_1_7(r: &Ranges, cx: &mut Ctx) -> Run {
    let printed = [1, 2, 1, -2, -4, -2, 3, 6, 3, -4, -8, 4];
    let scaled = |n: usize| l_at_one(2, n) * int(n as i64 + 1);
    printed_sequence(cx, &printed, scaled, l_m2_at_one_scaled, 2 * r.max_n);
    Ok(())
}

pub(super) fn eq_1_8(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let f = ClassicalFamily::L { m, s: ratio(-1, 4) };
        for n in 0..=r.max_n {
            let v = f.closed_form(n).evaluate(&int(1));
            cx.eq(params![m = m, n = n], v.clone(), chebyshev_like_at_one(m, n));
            cx.eq(params![m = m, n = n, folded = 1], v, chebyshev_like_at_one_folded(m, n));
        }
    }
    Ok(())
}

pub(super) fn eq_1_10(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for n in 0..r.max_n {
            for k in 1..=n.div_ceil(2) {
                let rhs = a_coeff(n, k, m) + lambda(n + 1 - 2 * k, m) * a_coeff(n, k - 1, m);
                cx.eq(params![m = m, n = n + 1, k = k], a_coeff(n + 1, k, m), rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_11(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let b = basis(&l_family(m, s), r.max_n);
            for n in 0..=r.max_n {
                let rhs = expansion(n, &b, |k| a_coeff(n, k, m) * int(-s).pow(k as i32));
                cx.eq_poly(params![m = m, s = s, n = n], &x_pow(n), &rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_11_moments(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        for s in samples(r.max_n + 1) {
            let f = l_family(m, s);
            let func = Functional::from_basis(&basis(&f, 2 * r.max_n))?;
            for n in 0..=r.max_n {
                let expected = int(-s).pow(n as i32) * sigma(m, n);
                cx.eq(params![m = m, s = s, n = n], func.moments()[2 * n].clone(), expected);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_13(r: &Ranges, cx: &mut Ctx) -> Run {
    cx.note("down-step weight r(j) = -s·λ_j(m) so that x·l_k = l_{k+1} - s·λ_{k-1}·l_{k-1} is respected");
    for m in 0..=r.max_m {
        for s in samples(r.max_n / 2 + 1) {
            let b = basis(&l_family(m, s), r.max_n);
            let w = Weights::lambda(m, &int(s), r.max_n + 1);
            let table = PathTable::build(&w, r.max_n)?;
            for n in 0..=r.max_n {
                let mut rhs = Poly::zero();
                for (k, bk) in b.iter().enumerate().take(n + 1) {
                    rhs = &rhs + &bk.scalar_mul(&table.get(n, k)?);
                }
                cx.eq_poly(params![m = m, s = s, n = n], &x_pow(n), &rhs);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_14(r: &Ranges, cx: &mut Ctx) -> Run {
    let mut flagged = false;
    for m in 0..=r.max_m {
        for s in samples(r.max_n + 1) {
            let w = Weights::lambda(m, &int(s), 2 * r.max_n + 1);
            let table = PathTable::build(&w, 2 * r.max_n)?;
            let ms = int(-s);
            for n in 0..=r.max_n {
                for k in 0..=n {
                    let b = table.get(2 * n, 2 * k)?;
                    let via_a = a_coeff(2 * n, n - k, m) * ms.pow((n - k) as i32);
                    let middle = fact(2 * n) * fact(m + 2 * k) * ms.pow((n - k) as i32)
                        / (fact(n - k) * fact(2 * k) * fact(n + m + k));
                    let via_sigma = binom(2 * n as i64, 2 * k as i64) * sigma(m + 2 * k, n - k);
                    let p = params![m = m, s = s, n = n, k = k];
                    cx.eq(p.clone(), b.clone(), via_a);
                    cx.eq(p.clone(), b.clone(), middle);
                    cx.eq(p.clone(), b.clone(), via_sigma.clone() * ms.pow((n - k) as i32));
                    let printed = via_sigma * ms.pow(k as i32);
                    if printed != b && !flagged {
                        flagged = true;
                        cx.flag(p, "printed last form uses (-s)^k; the table needs (-s)^(n-k)", printed.to_string(), b.to_string());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Weight sequence with the parameters that name it.
type TaggedWeights = (Vec<(&'static str, i64)>, Weights<Rational>);

/// `λ(m)` weights at each `s`, ones, and the Lucas weights.
fn weight_families(m_max: usize, s_values: &[i64], len: usize) -> Vec<TaggedWeights> {
    let mut out = Vec::new();
    for m in 0..=m_max {
        for &s in s_values {
            out.push((vec![("w", 0), ("m", m as i64), ("s", s)], Weights::lambda(m, &int(s), len)));
        }
    }
    out.push((vec![("w", 1)], Weights::ones(len)));
    out.push((vec![("w", 2)], lucas_weights(len)));
    out
}

pub(super) fn eq_1_15(r: &Ranges, cx: &mut Ctx) -> Run {
    let n_max = (2 * r.max_n).min(14);
    for (tag, w) in weight_families(r.max_m.min(3), &[-1], n_max + 1) {
        let table = PathTable::build(&w, n_max)?;
        for n in 0..=n_max {
            for k in (n % 2..=n).step_by(2) {
                let mut ps = tag.clone();
                ps.extend([("n", n as i64), ("k", k as i64)]);
                cx.eq(super::Params(ps), table.get(n, k)?, brute_force_between(&w, 0, n, k)?);
            }
        }
        for n in 0..=n_max / 2 {
            for k in 0..=n {
                let mut ps = tag.clone();
                ps.extend([("n", 2 * n as i64), ("k", 2 * k as i64), ("reverse", 1)]);
                cx.eq(super::Params(ps), table.c_entry(&w, n, k)?, brute_force_between(&w, 2 * k, 2 * n, 0)?);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_16(r: &Ranges, cx: &mut Ctx) -> Run {
    let top = 2 * (r.max_n + r.max_l);
    for (tag, w) in weight_families(r.max_m, &samples(3), top + 1) {
        let table = PathTable::build(&w, top)?;
        for n in 0..=r.max_n {
            for l in 0..=r.max_l {
                let (lhs, rhs) = table.convolution(&w, n, l)?;
                let mut ps = tag.clone();
                ps.extend([("n", n as i64), ("l", l as i64)]);
                cx.eq(super::Params(ps), lhs, rhs);
            }
        }
    }
    Ok(())
}

fn lambda_table(m: usize, n_max: usize) -> Result<(Weights<Rational>, PathTable<Rational>), crate::lattice::LatticeError> {
    let w = Weights::lambda(m, &int(-1), 2 * n_max + 1);
    let t = PathTable::build(&w, 2 * n_max)?;
    Ok((w, t))
}

pub(super) fn eq_1_17(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let (w, t) = lambda_table(m, r.max_n + r.max_l)?;
        for n in 0..=r.max_n {
            for l in 0..=r.max_l {
                let (lhs, _) = t.convolution(&w, n, l)?;
                cx.eq(params![m = m, n = n, l = l], lhs, sigma(m, n + l));
            }
        }
    }
    Ok(())
}

fn c(n: usize, k: i64) -> Rational {
    binom(n as i64, k)
}

pub(super) fn eq_1_18(r: &Ranges, cx: &mut Ctx) -> Run {
    for n in 0..=r.max_n {
        for l in 0..=r.max_l {
            let (n6, l6) = (n as i64, l as i64);
            let mut lhs = c(2 * n, n6) * c(2 * l, l6);
            for k in 1..=n6.min(l6) {
                lhs += int(2) * c(2 * n, n6 + k) * c(2 * l, l6 + k);
            }
            cx.eq_classical(params![n = n, l = l], lhs, c(2 * (n + l), n6 + l6));
        }
    }
    Ok(())
}

pub(super) fn eq_1_19(r: &Ranges, cx: &mut Ctx) -> Run {
    for n in 0..=r.max_n {
        for l in 0..=r.max_l {
            let (n6, l6) = (n as i64, l as i64);
            let lhs = (-n6..=n6).fold(Rational::zero(), |acc, k| acc + c(2 * n, n6 - k) * c(2 * l, l6 - k));
            cx.eq_classical(params![n = n, l = l], lhs, c(2 * (n + l), n6 + l6));
        }
    }
    Ok(())
}

pub(super) fn eq_1_20(r: &Ranges, cx: &mut Ctx) -> Run {
    cx.note("m = 1 convolution taken from the path table and compared with the displayed closed form");
    let (w, t) = lambda_table(1, r.max_n + r.max_l)?;
    for n in 0..=r.max_n {
        for l in 0..=r.max_l {
            let (n6, l6) = (n as i64, l as i64);
            let rhs = c(2 * (n + l), n6 + l6) / int(n6 + l6 + 1);
            let (lattice, _) = t.convolution(&w, n, l)?;
            let p = params![n = n, l = l];
            cx.eq(p.clone(), lattice.clone(), rhs);
            let printed = (0..=n6).fold(Rational::zero(), |acc, k| {
                acc + c(2 * n, n6 - k) * c(2 * l, l6 - k) * int((2 * k + 1) * (2 * k + 1))
                    / int((n6 + k + 1) * (l6 + k + 1))
            });
            if printed != lattice {
                cx.flag(p, "displayed m = 1 convolution differs from the path table", printed.to_string(), lattice.to_string());
            } else {
                cx.eq(params![n = n, l = l, printed = 1], printed, lattice);
            }
        }
    }
    Ok(())
}

pub(super) fn eq_1_21(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let (w, t) = lambda_table(m, r.max_n)?;
        for n in 0..=r.max_n {
            cx.eq_classical(params![m = m, n = n], t.alternating_sum(&w, n)?, indicator(n == 0));
        }
    }
    Ok(())
}

pub(super) fn eq_1_22(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let start = usize::from(m == 0);
        for k in start..=r.max_n {
            let prod = (0..k).fold(Rational::one(), |acc, j| acc * lambda(2 * j, m));
            cx.eq(params![m = m, k = k], prod, sigma(m + k - 1, k));
        }
    }
    Ok(())
}

pub(super) fn eq_1_23(r: &Ranges, cx: &mut Ctx) -> Run {
    for n in 0..=r.max_n {
        let n6 = n as i64;
        let lhs = (-n6..=n6).fold(Rational::zero(), |acc, k| acc + sgn(k.unsigned_abs() as usize) * c(2 * n, n6 - k));
        cx.eq_classical(params![n = n], lhs, indicator(n == 0));
    }
    Ok(())
}

pub(super) fn eq_1_24(r: &Ranges, cx: &mut Ctx) -> Run {
    for n in 0..=r.max_n {
        let n6 = n as i64;
        let lhs = (0..=n6).fold(Rational::zero(), |acc, k| {
            acc + sgn(k as usize) * c(2 * n, n6 - k) * int(2 * k + 1) / int(n6 + k + 1)
        });
        cx.eq_classical(params![n = n], lhs, indicator(n == 0));
    }
    Ok(())
}

fn super_ballot_term(n: usize, m: usize, k: usize) -> Rational {
    c(n, k as i64) * int((m + 2 * k) as i64) * fact(m + k - 1) / fact(n + m + k)
}

/// `(m+1)(m+3)⋯(m+2n-1)`.
fn odd_shifted(m: usize, n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * int((m + 2 * i - 1) as i64))
}

pub(super) fn eq_1_25(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for n in 0..=r.max_n {
            let lhs = (0..=n).fold(Rational::zero(), |acc, k| acc + sgn(k) * super_ballot_term(n, m, k));
            cx.eq_classical(params![m = m, n = n], lhs, indicator(n == 0));
        }
    }
    Ok(())
}

pub(super) fn eq_1_26(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 0..=r.max_m {
        let (w, t) = lambda_table(m, r.max_n)?;
        for n in 0..=r.max_n {
            let double_fact = (1..=n).fold(Rational::one(), |acc, i| acc * int(2 * i as i64 - 1));
            let rhs = int(4).pow(n as i32) * double_fact / odd_shifted(m, n);
            cx.eq(params![m = m, n = n], t.even_weighted_sum(&w, n)?, rhs);
        }
    }
    Ok(())
}

pub(super) fn eq_1_27(r: &Ranges, cx: &mut Ctx) -> Run {
    for m in 1..=r.max_m {
        for n in 0..=r.max_n {
            let lhs = (0..=n).fold(Rational::zero(), |acc, k| acc + super_ballot_term(n, m, k));
            cx.eq_classical(params![m = m, n = n], lhs, int(2).pow(n as i32) / odd_shifted(m, n));
        }
    }
    Ok(())
}

pub(super) fn eq_1_28(r: &Ranges, cx: &mut Ctx) -> Run {
    let xs = [int(1), int(-2), ratio(1, 3)];
    for m in 1..=r.max_m {
        for s in samples(3) {
            for (xi, x) in xs.iter().enumerate() {
                let check = genfun_convolution_check(m, &int(s), x, r.order)?;
                let witness = format!("{check:?}");
                cx.truth(params![m = m, s = s, x = xi], check.passed(), witness, "no mismatch");
            }
        }
    }
    Ok(())
}
