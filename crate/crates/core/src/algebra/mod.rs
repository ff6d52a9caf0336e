//! Polynomials in `x`, truncated power series in `z`, and the number
//! sequences read off from series quotients.

mod numbers;
mod poly;
mod series;

pub use numbers::{
    genocchi_numbers, genocchi_tangent_relation, q_tangent_numbers, q_tanh_series, tangent_numbers,
    tanh_series, NumbersError,
};
pub use poly::Poly;
pub use series::{Normalization, Series, SeriesError, SeriesScalar, DEFAULT_ORDER};
