//! Structure-constant Lie algebras and metric Lie algebras.

mod algebra;
mod forms;
mod killing;
mod metric;
mod series;

pub use algebra::{validate_constants, LieAlgebra, ValidationReport};
pub use forms::{check_perp_duality, invariant_symmetric_forms, is_derivation, is_skew_for, skew_derivations, PerpDuality};
pub use killing::{compactness_test, killing_form, CompactnessReport};
pub use metric::{
    coadjoint_intertwiner, form_ad_invariance_violation, verify_isometric_isomorphism, verify_isomorphism,
    MetricLieAlgebra,
};
pub use series::{series, SeriesReport};
