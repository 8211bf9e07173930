//! Exact rational linear algebra. Nothing in here touches floating point.

mod charpoly;
mod integer;
mod matrix;
pub mod oracle;
mod poly;
mod reflect;

pub use charpoly::{charpoly, faddeev_leverrier};
pub(crate) use integer::integer_similarity;
pub use matrix::ExactMatrix;
pub use oracle::charpoly_oracle;
pub use poly::{BiPoly, UniPoly, Var};
pub use reflect::{anti_transpose, check_block_conditions, conjugate, swap_similarity, BlockReport};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
