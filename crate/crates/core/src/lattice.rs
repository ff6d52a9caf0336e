//! Weighted non-negative lattice paths with up-steps of weight 1 and
//! down-steps from height `j+1` to `j` of weight `r(j)`.

use std::collections::HashMap;

use thiserror::Error;

use crate::families::{lambda, lambda_q, mu_q};
use crate::scalar::{int, QRat, Rational, Scalar};

/// Longest path the brute-force enumerator accepts.
pub const MAX_BRUTE_FORCE_STEPS: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("path of {steps} steps exceeds the brute-force cap of {cap}")]
    TooLong { steps: usize, cap: usize },
    #[error("entry ({n}, {k}) lies outside a table of size {n_max}")]
    OutOfTable { n: usize, k: usize, n_max: usize },
    #[error("need weights up to height {needed}, have {available}")]
    WeightsTooShort { needed: usize, available: usize },
}

/// Down-step weights `r(0), r(1), …`, materialized up to a fixed height.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights<S: Scalar> {
    values: Vec<S>,
}

impl<S: Scalar> Weights<S> {
    pub fn from_fn(len: usize, r: impl Fn(usize) -> S) -> Self {
        Weights { values: (0..len).map(r).collect() }
    }

    pub fn from_values(values: Vec<S>) -> Self {
        Weights { values }
    }

    /// `r ≡ 1`.
    pub fn ones(len: usize) -> Self {
        Self::from_fn(len, |_| S::one())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, j: usize) -> Option<&S> {
        self.values.get(j)
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// `∏_{j<count} r(j)`.
    pub fn prefix_product(&self, count: usize) -> S {
        self.values[..count].iter().fold(S::one(), |acc, r| acc * r)
    }

    /// `∏_{j<count} r(2j)`.
    pub fn even_product(&self, count: usize) -> S {
        (0..count).fold(S::one(), |acc, j| acc * &self.values[2 * j])
    }
}

impl Weights<Rational> {
    /// `r(j) = -s λ_j(m)`, the weights whose `b(2n,0)` are the moments
    /// `(-s)^n σ(m,n)`.
    pub fn lambda(m: usize, s: &Rational, len: usize) -> Self {
        Self::from_fn(len, |j| -(s.clone() * lambda(j, m)))
    }
}

impl Weights<QRat> {
    /// `r(j) = λ_j(m,q)`.
    pub fn lambda_q(m: usize, len: usize) -> Self {
        Self::from_fn(len, |j| lambda_q(j, m))
    }

    /// `r(j) = s μ_j(m,q)`.
    pub fn mu_q(m: usize, s: &QRat, len: usize) -> Self {
        Self::from_fn(len, |j| s.clone() * mu_q(j, m))
    }
}

/// Triangle `b(n,k)`, `0 ≤ k ≤ n ≤ n_max`, from
/// `b(n,k) = b(n-1,k-1) + r(k) b(n-1,k+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathTable<S: Scalar> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> PathTable<S> {
    pub fn build(weights: &Weights<S>, n_max: usize) -> Result<Self, LatticeError> {
        let needed = n_max.saturating_sub(1);
        if n_max > 0 && weights.len() < needed {
            return Err(LatticeError::WeightsTooShort { needed, available: weights.len() });
        }
        let mut rows: Vec<Vec<S>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![S::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(S::zero);
            let row = (0..=n)
                .map(|k| {
                    if (n + k) % 2 == 1 {
                        return S::zero();
                    }
                    let up = if k > 0 { at(k - 1) } else { S::zero() };
                    let down = at(k + 1);
                    if down.is_zero() {
                        up
                    } else {
                        up + down * &weights.values[k]
                    }
                })
                .collect();
            rows.push(row);
        }
        Ok(PathTable { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `b(n,k)`, zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Result<S, LatticeError> {
        let row = self
            .rows
            .get(n)
            .ok_or(LatticeError::OutOfTable { n, k, n_max: self.n_max() })?;
        Ok(row.get(k).cloned().unwrap_or_else(S::zero))
    }

    /// `c(2n,2k) = b(2n,2k) ∏_{j<2k} r(j)`: weight of paths from height
    /// `2k` down to 0 in `2n` steps.
    pub fn c_entry(&self, weights: &Weights<S>, n: usize, k: usize) -> Result<S, LatticeError> {
        Ok(self.get(2 * n, 2 * k)? * weights.prefix_product(2 * k))
    }

    /// Both sides of `Σ_k b(2n,2k) b(2ℓ,2k) ∏_{j<2k} r(j) = b(2n+2ℓ,0)`.
    pub fn convolution(&self, weights: &Weights<S>, n: usize, l: usize) -> Result<(S, S), LatticeError> {
        let mut lhs = S::zero();
        for k in 0..=n.min(l) {
            lhs = lhs + self.get(2 * n, 2 * k)? * self.get(2 * l, 2 * k)? * weights.prefix_product(2 * k);
        }
        Ok((lhs, self.get(2 * n + 2 * l, 0)?))
    }

    /// `Σ_k (-1)^k b(2n,2k) ∏_{j<k} r(2j)`.
    pub fn alternating_sum(&self, weights: &Weights<S>, n: usize) -> Result<S, LatticeError> {
        let mut acc = S::zero();
        for k in 0..=n {
            let term = self.get(2 * n, 2 * k)? * weights.even_product(k);
            acc = if k % 2 == 0 { acc + term } else { acc - term };
        }
        Ok(acc)
    }

    /// `Σ_k b(2n,2k) ∏_{j<k} r(2j)`.
    pub fn even_weighted_sum(&self, weights: &Weights<S>, n: usize) -> Result<S, LatticeError> {
        let mut acc = S::zero();
        for k in 0..=n {
            acc = acc + self.get(2 * n, 2 * k)? * weights.even_product(k);
        }
        Ok(acc)
    }
}

/// Weight of all non-negative paths from height `start` to height `end`
/// in `steps` steps, by explicit enumeration of every step sequence.
/// Paths are grouped by how many down-steps leave each height, so each
/// distinct weight monomial is multiplied out once.
pub fn brute_force_between<S: Scalar>(
    weights: &Weights<S>,
    start: usize,
    steps: usize,
    end: usize,
) -> Result<S, LatticeError> {
    if steps > MAX_BRUTE_FORCE_STEPS {
        return Err(LatticeError::TooLong { steps, cap: MAX_BRUTE_FORCE_STEPS });
    }
    let top = start + steps;
    let mut groups: HashMap<Vec<u8>, u64> = HashMap::new();
    for mask in 0u32..(1u32 << steps) {
        let mut h = start;
        let mut downs = vec![0u8; top + 1];
        let mut ok = true;
        for i in 0..steps {
            if mask >> i & 1 == 1 {
                h += 1;
            } else if h == 0 {
                ok = false;
                break;
            } else {
                h -= 1;
                downs[h] += 1;
            }
        }
        if ok && h == end {
            *groups.entry(downs).or_insert(0) += 1;
        }
    }
    let mut keys: Vec<&Vec<u8>> = groups.keys().collect();
    keys.sort();
    let mut total = S::zero();
    for key in keys {
        let mut term = S::from_i64(groups[key] as i64);
        for (j, &count) in key.iter().enumerate() {
            if count > 0 {
                let r = weights
                    .get(j)
                    .ok_or(LatticeError::WeightsTooShort { needed: j + 1, available: weights.len() })?;
                term = term * &Scalar::pow(r, count as u32);
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// `b(n,k)` by enumeration.
pub fn brute_force_weight<S: Scalar>(weights: &Weights<S>, n: usize, k: usize) -> Result<S, LatticeError> {
    brute_force_between(weights, 0, n, k)
}

/// The Lucas weights `r(0) = 2`, `r(j ≥ 1) = 1`.
pub fn lucas_weights(len: usize) -> Weights<Rational> {
    Weights::from_fn(len, |j| int(if j == 0 { 2 } else { 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{sigma, ClassicalFamily};

    #[test]
    fn dyck_and_lucas_counts() {
        let ones: Weights<Rational> = Weights::ones(8);
        let t = PathTable::build(&ones, 8).unwrap();
        assert_eq!(t.get(4, 0).unwrap(), int(2));
        assert_eq!(t.get(3, 1).unwrap(), int(2));
        let lucas = PathTable::build(&lucas_weights(8), 8).unwrap();
        assert_eq!(lucas.get(4, 0).unwrap(), int(6));
        assert_eq!(lucas.get(4, 2).unwrap(), int(4));
        assert_eq!(lucas.c_entry(&lucas_weights(8), 2, 1).unwrap(), int(8));
        assert_eq!(lucas.c_entry(&lucas_weights(8), 0, 0).unwrap(), int(1));
    }

    #[test]
    fn two_weight_example() {
        // UDUD contributes a·a, UUDD contributes b·a
        let w = Weights::from_values(vec![int(2), int(1), int(7)]);
        assert_eq!(brute_force_weight(&w, 4, 0).unwrap(), int(6));
    }

    #[test]
    fn all_up_path_is_unique() {
        let w = Weights::lambda(2, &int(-1), 12);
        for n in 0..10 {
            assert_eq!(brute_force_weight(&w, n, n).unwrap(), int(1));
        }
    }

    #[test]
    fn catalan_from_lambda_one() {
        let w = Weights::lambda(1, &int(-1), 12);
        let t = PathTable::build(&w, 12).unwrap();
        let catalan = [1, 1, 2, 5, 14, 42];
        for (n, c) in catalan.iter().enumerate() {
            assert_eq!(t.get(2 * n, 0).unwrap(), int(*c));
        }
    }

    #[test]
    fn moments_through_paths() {
        for m in 0..4 {
            for s in [int(-1), int(3)] {
                let w = Weights::lambda(m, &s, 16);
                let t = PathTable::build(&w, 16).unwrap();
                let f = ClassicalFamily::L { m, s: s.clone() };
                for n in 0..=8 {
                    assert_eq!(t.get(2 * n, 0).unwrap(), f.moment(2 * n));
                }
            }
            let t = PathTable::build(&Weights::lambda(m, &int(-1), 16), 16).unwrap();
            assert_eq!(t.get(4, 0).unwrap(), sigma(m, 2));
        }
    }

    #[test]
    fn table_matches_enumeration() {
        let w = Weights::lambda(2, &int(-1), 14);
        let t = PathTable::build(&w, 12).unwrap();
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(t.get(n, k).unwrap(), brute_force_weight(&w, n, k).unwrap(), "({n},{k})");
            }
        }
    }

    #[test]
    fn c_entries_match_reverse_paths() {
        let w = Weights::lambda(1, &int(-1), 14);
        let t = PathTable::build(&w, 10).unwrap();
        for n in 0..=5 {
            for k in 0..=n {
                let direct = brute_force_between(&w, 2 * k, 2 * n, 0).unwrap();
                assert_eq!(t.c_entry(&w, n, k).unwrap(), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn guard_rejects_long_paths() {
        let w: Weights<Rational> = Weights::ones(30);
        assert_eq!(
            brute_force_weight(&w, 20, 0),
            Err(LatticeError::TooLong { steps: 20, cap: MAX_BRUTE_FORCE_STEPS })
        );
    }
}
