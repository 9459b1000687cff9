//! Exact symbolic verification for the twisted N=2 superconformal algebra.
//!
//! The crate builds the algebra from structure constants, realizes its
//! non-weight module families with symbolic parameters, and checks the
//! algebraic identities relating them by exact rational-function arithmetic.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod expr;
pub mod repr;
pub mod scalar;
