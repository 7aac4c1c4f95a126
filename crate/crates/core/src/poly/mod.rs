//! Multivariate polynomials over exact fields with the standard grading.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{PolyRing, Polynomial};
