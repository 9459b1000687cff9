//! Exact scalars, from half-integer indices up to the rational-function
//! coefficient field over the Gaussian rationals.

mod coefficient;
mod gaussian;
pub mod gcd;
mod halfint;
mod poly;

pub use coefficient::{lambda_pow, monomial_coefficient, sign_pow, Assignment, Coefficient, Sign};
pub use gaussian::GaussianRational;
pub use halfint::HalfInt;
pub use poly::{Monomial, Poly, Var, NVARS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by the zero coefficient")]
    DivisionByZero,
    #[error("specialization makes the denominator {denominator} vanish")]
    SpecializationPole { denominator: String },
}
