//! Polynomial families built two independent ways (closed form and
//! recurrence), their coefficient sequences, moment functionals and
//! special values.

mod classical;
mod coeffs;
mod moments;
mod qfamily;
pub mod special;
mod spec;

pub use classical::ClassicalFamily;
pub use coeffs::{
    a_coeff, a_coeff_q, falling, lambda, lambda_q, mu_q, multinomial, multinomial_q, neg_q_poch,
    one_plus_q_pow, q_falling, sigma, sigma_q,
};
pub use moments::{Functional, FunctionalError};
pub use qfamily::QFamily;
pub use spec::{family_key, functional_key, AnyPoly, FamilySpec, SpecError};
