//! Kähler differentials of graded quotients `R = P/I` and their free ranks.

mod checks;
mod freerank;
mod pipeline;
mod presentation;

pub use checks::{complete_intersection_check, isolated_singularity_check, jacobian_minors};
pub use freerank::{
    freerank_omega_column_test, freerank_positive_syzygy, verify_unit_syzygy, ColumnCertificate,
    ColumnOutcome, FreeRankCertificate, FreeRankMethod, FreeRankOptions, FreeRankResult,
    FreeRankVerdict,
};
pub use pipeline::{
    ci_signature, hypersurface_signature, HypersurfaceReport, SignatureOptions, SignatureReport,
    SymPowerCheck, DEFAULT_MAX_Q,
};
pub use presentation::{
    jacobian, omega_presentation, sym_power_presentation, JacobianMatrix, PresentationMatrix,
    SymPowerPresentation,
};
