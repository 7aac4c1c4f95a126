//! Exact commutative algebra for differential symmetric signatures.

pub mod arith;
pub mod differentials;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
