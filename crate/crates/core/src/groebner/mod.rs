//! Gröbner bases of ideals and submodules of graded free modules.

mod buchberger;
mod dimension;
mod hilbert;
mod ideal;
mod syzygy;
mod vector;

pub use buchberger::{GroebnerBasis, GroebnerOptions, ModuleNormalForm, DEFAULT_PAIR_LIMIT};
pub use dimension::{krull_dimension, monomial_ideal_dimension};
pub use hilbert::{hilbert_numerator, hilbert_series, HilbertSeries};
pub use ideal::{
    check_combination, ideal_membership, module_groebner_basis, module_membership, normal_form,
    Ideal, Membership, ModuleElement, NormalForm,
};
pub use syzygy::{is_syzygy, syzygy_basis, SyzygyModule, SyzygyOptions};
pub use vector::{FreeModule, Position};
