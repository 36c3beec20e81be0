//! Exact linear algebra over a prime field.

mod field;
mod matrix;
pub mod poly;

pub use field::{PrimeField, DEFAULT_MODULUS, MAX_MODULUS};
pub use matrix::{Matrix, Rref, Solution, SpanBuilder};
