//! Exact decision procedures for the rationality of square roots of
//! integers: the remainder-by-8 method, reciprocal subtraction
//! (anthyphairesis), the perfect-square criterion, and a replay of the
//! lesson on the odd integers from 3 with its table, coverage and criteria.

pub mod anthyphairesis;
pub mod arith;
pub mod error;
pub mod lesson;
pub mod oracle;
pub mod theodorus;

pub use arith::{gnomon_decompose, isqrt, mod8, parity, triangular, Gnomon, Mod8Class, Natural, Parity, SquareRoot};
pub use error::{Error, Result};
