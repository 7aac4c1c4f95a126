//! Finite groups, Molien series and signatures of quotient singularities.

mod group;
mod matrix;
mod molien;
mod signature;

pub use group::{coprimality_check, group_closure, is_small, MatrixGroup, Smallness, DEFAULT_CLOSURE_CAP};
pub use matrix::Matrix;
pub use molien::{
    cumulative_ratio, molien_series, sym_trace_direct, sym_trace_newton, trace_average,
    MolienData, RationalFunction, TRACE_CHECK_DEGREE,
};
pub use signature::{quotient_signature, ConvergenceRow, QuotientSignatureReport, TABLE_DEGREES};
