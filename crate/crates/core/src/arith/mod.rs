//! Exact coefficient arithmetic: rationals, prime fields and cyclotomic fields.

pub mod cyclotomic;
pub mod field;
pub mod unipoly;

pub use cyclotomic::{euler_phi, CyclotomicElement, CyclotomicField, DEFAULT_CONDUCTOR_BOUND};
pub use field::{Field, FieldElement};
pub use unipoly::{cyclotomic_polynomial, UniPoly};
