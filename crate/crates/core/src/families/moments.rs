use thiserror::Error;

use crate::algebra::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionalError {
    #[error("polynomial of degree {degree} exceeds the {known} known moments")]
    DegreeTooHigh { degree: usize, known: usize },
    #[error("basis polynomial {index} is not monic of degree {index}")]
    NotMonicBasis { index: usize },
}

/// Linear functional on polynomials, stored as its moment sequence
/// `L(x^0), L(x^1), …`.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional<S: Scalar> {
    moments: Vec<S>,
}

impl<S: Scalar> Functional<S> {
    pub fn from_moments(moments: Vec<S>) -> Self {
        Functional { moments }
    }

    /// The functional with `L(p_k) = [k = 0]` for a monic basis `p_k` of
    /// degree `k`: `L(x^n) = -Σ_{i<n} [x^i]p_n · L(x^i)`.
    pub fn from_basis(basis: &[Poly<S>]) -> Result<Self, FunctionalError> {
        let mut moments: Vec<S> = Vec::with_capacity(basis.len());
        for (n, p) in basis.iter().enumerate() {
            if p.degree() != Some(n) || !p.is_monic() {
                return Err(FunctionalError::NotMonicBasis { index: n });
            }
            if n == 0 {
                moments.push(S::one());
                continue;
            }
            let mut acc = S::zero();
            for (i, m) in moments.iter().enumerate() {
                let c = p.coeff(i);
                if !c.is_zero() {
                    acc = acc + c * m;
                }
            }
            moments.push(-acc);
        }
        Ok(Functional { moments })
    }

    pub fn moments(&self) -> &[S] {
        &self.moments
    }

    pub fn moment(&self, n: usize) -> Option<&S> {
        self.moments.get(n)
    }

    pub fn apply(&self, p: &Poly<S>) -> Result<S, FunctionalError> {
        let Some(degree) = p.degree() else {
            return Ok(S::zero());
        };
        if degree >= self.moments.len() {
            return Err(FunctionalError::DegreeTooHigh { degree, known: self.moments.len() });
        }
        let mut acc = S::zero();
        for (c, m) in p.coeffs().iter().zip(&self.moments) {
            if !c.is_zero() {
                acc = acc + c.clone() * m;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::super::classical::ClassicalFamily;
    use super::super::qfamily::QFamily;
    use super::*;
    use crate::scalar::{int, ratio, QRat, Rational};

    #[test]
    fn classical_moments_by_expansion() {
        let families = [
            ClassicalFamily::Lucas,
            ClassicalFamily::Fibonacci,
            ClassicalFamily::ChebT,
            ClassicalFamily::ChebU,
            ClassicalFamily::L { m: 2, s: int(-1) },
            ClassicalFamily::L { m: 3, s: ratio(2, 3) },
            ClassicalFamily::V { m: 1, s: int(5) },
        ];
        for f in &families {
            let basis: Vec<Poly<Rational>> = (0..=12).map(|n| f.closed_form(n)).collect();
            let func = Functional::from_basis(&basis).unwrap();
            for n in 0..=12 {
                assert_eq!(func.moments()[n], f.moment(n), "{f} n={n}");
            }
        }
        assert_eq!(ClassicalFamily::Lucas.moment(4), int(6));
        assert_eq!(ClassicalFamily::L { m: 2, s: int(-1) }.moment(4), int(1));
    }

    #[test]
    fn q_moments_by_expansion() {
        let families = [
            QFamily::L { m: 1, s: -QRat::q_pow(1) },
            QFamily::LittleH { s: QRat::from_int(-1) },
            QFamily::V { m: 2, s: QRat::from_int(1) },
            QFamily::BigH { s: QRat::from_int(2) },
            QFamily::R { m: 1 },
            QFamily::LittleR,
        ];
        for f in &families {
            let basis: Vec<Poly<QRat>> = (0..=8).map(|n| f.closed_form(n)).collect();
            let func = Functional::from_basis(&basis).unwrap();
            for n in 0..=8 {
                assert_eq!(func.moments()[n], f.moment(n), "{f} n={n}");
            }
        }
    }

    #[test]
    fn phi_first_moment() {
        // q/([m+1](1+q^{m+1})), m = 0 gives q/(1+q)
        let f = QFamily::V { m: 0, s: QRat::from_int(1) };
        assert_eq!(f.moment(2), "q / (1 + q)".parse::<QRat>().unwrap());
        assert_eq!(f.recurrence_weight(0).unwrap(), f.moment(2));
    }

    #[test]
    fn annihilates_basis_and_products() {
        let f = ClassicalFamily::L { m: 2, s: ratio(-1, 3) };
        let basis: Vec<Poly<Rational>> = (0..=14).map(|n| f.closed_form(n)).collect();
        let func = Functional::from_basis(&basis).unwrap();
        for i in 0..=6 {
            assert_eq!(func.apply(&basis[i]).unwrap(), int(if i == 0 { 1 } else { 0 }));
            for j in 0..=6 {
                if i != j {
                    assert_eq!(func.apply(&(&basis[i] * &basis[j])).unwrap(), int(0));
                }
            }
        }
        assert!(func.apply(&Poly::monomial(int(1), 15)).is_err());
    }
}
