//! Integer polynomial kernels behind [`QPoly`](super::QPoly): content,
//! exact division, multiplication and the univariate gcd.
//!
//! Coefficient vectors are dense, ascending, without trailing zeros.
//! The production gcd is modular (images modulo 62-bit primes, CRT,
//! trial-division certificate). The primitive PRS gcd is kept as an
//! independent slow route for cross-checking.

use std::sync::OnceLock;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut g = content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        a.to_vec()
    } else {
        a.iter().map(|c| c / &g).collect()
    }
}

pub(crate) fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// `a / b` over `Z[q]` when the division is exact, else `None`.
pub(crate) fn exact_div_z(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = b.last().unwrap();
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[i + j] -= &c * bc;
            }
        }
        quot[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = b.last().unwrap();
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= lc;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] -= &top * bc;
        }
        rem.pop();
        trim(&mut rem);
    }
    rem
}

fn shift_up(a: Vec<BigInt>, k: usize) -> Vec<BigInt> {
    if k == 0 {
        return a;
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a);
    out
}

fn split_q_power(a: &[BigInt]) -> (usize, &[BigInt]) {
    let k = a.iter().position(|c| !c.is_zero()).unwrap_or(0);
    (k, &a[k..])
}

/// Primitive polynomial remainder sequence gcd. Slow on large inputs;
/// kept as an oracle for [`gcd_modular`].
pub fn gcd_primitive_prs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 512 {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    a.iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect()
}

fn trim_u64(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd of two polynomials over `F_p`.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim_u64(&mut a);
    trim_u64(&mut b);
    while !b.is_empty() {
        let db = b.len() - 1;
        let inv_lc = inv_mod(*b.last().unwrap(), p);
        while a.len() > db {
            let top = mul_mod(*a.last().unwrap(), inv_lc, p);
            let shift = a.len() - 1 - db;
            if top != 0 {
                for (j, &bc) in b.iter().enumerate() {
                    let t = mul_mod(top, bc, p);
                    let x = &mut a[shift + j];
                    *x = if *x >= t { *x - t } else { *x + p - t };
                }
            }
            a.pop();
            trim_u64(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for x in a.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
    }
    a
}

/// Univariate gcd over `Z[q]` via modular images and Chinese remaindering.
///
/// Returns the primitive gcd with positive leading coefficient. The result
/// is certified by exact trial division of both inputs, so it is never a
/// probabilistic answer.
pub fn gcd_modular(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let (ka, a) = split_q_power(a);
    let (kb, b) = split_q_power(b);
    let k = ka.min(kb);
    let one = vec![BigInt::one()];
    if a.len() == 1 || b.len() == 1 {
        return shift_up(one, k);
    }
    let x = primitive(a);
    let y = primitive(b);
    if x == y {
        return shift_up(x, k);
    }
    let lc_x = x.last().unwrap();
    let lc_y = y.last().unwrap();
    let lc_g = lc_x.gcd(lc_y);

    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<BigInt>> = None;

    for &p in primes() {
        let pb = BigInt::from(p);
        if (lc_x % &pb).is_zero() || (lc_y % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod_p(reduce(&x, p), reduce(&y, p), p);
        let deg = g.len() - 1;
        if deg == 0 {
            return shift_up(one, k);
        }
        if deg > best_deg {
            continue;
        }
        let scale = lc_g.mod_floor(&pb).to_u64().unwrap();
        let image: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if deg < best_deg {
            best_deg = deg;
            acc = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            previous = None;
        } else {
            let m_inv = inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p);
            for (h, &gi) in acc.iter_mut().zip(&image) {
                let h_mod = h.mod_floor(&pb).to_u64().unwrap();
                let diff = if gi >= h_mod { gi - h_mod } else { gi + p - h_mod };
                let t = mul_mod(diff, m_inv, p);
                *h += &modulus * t;
            }
            modulus *= pb;
        }
        let half = &modulus >> 1;
        let symmetric: Vec<BigInt> = acc
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let candidate = primitive(&symmetric);
        if previous.as_ref() == Some(&candidate)
            && exact_div_z(&x, &candidate).is_some()
            && exact_div_z(&y, &candidate).is_some()
        {
            return shift_up(candidate, k);
        }
        previous = Some(candidate);
    }
    shift_up(gcd_primitive_prs(&x, &y), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_gcds_agree() {
        // (q-1)(q+2) and (q-1)(q^2+1)
        let a = mul_z(&z(&[-1, 1]), &z(&[2, 1]));
        let b = mul_z(&z(&[-1, 1]), &z(&[1, 0, 1]));
        assert_eq!(gcd_modular(&a, &b), z(&[-1, 1]));
        assert_eq!(gcd_primitive_prs(&a, &b), z(&[-1, 1]));
    }

    #[test]
    fn common_q_power_is_kept() {
        let a = z(&[0, 0, 2, 2]);
        let b = z(&[0, 3, 3]);
        assert_eq!(gcd_modular(&a, &b), z(&[0, 1, 1]));
    }

    #[test]
    fn large_leading_coefficients() {
        let f = z(&[7, -3, 11]);
        let a = mul_z(&f, &z(&[1_000_003, 5, 999_999_937]));
        let b = mul_z(&f, &z(&[-4, 0, 0, 123_456_789]));
        assert_eq!(gcd_modular(&a, &b), f);
    }

    #[test]
    fn exact_division_detects_remainder() {
        assert_eq!(exact_div_z(&z(&[-1, 0, 1]), &z(&[1, 1])), Some(z(&[-1, 1])));
        assert_eq!(exact_div_z(&z(&[1, 0, 1]), &z(&[1, 1])), None);
        assert_eq!(exact_div_z(&z(&[2, 2]), &z(&[2])), Some(z(&[1, 1])));
        assert_eq!(exact_div_z(&z(&[1, 2]), &z(&[2])), None);
    }

    #[test]
    fn primes_are_prime() {
        let ps = primes();
        assert!(ps.iter().take(8).all(|&p| is_prime_u64(p) && p < 1 << 62));
        assert!(!is_prime_u64(561));
    }
}
