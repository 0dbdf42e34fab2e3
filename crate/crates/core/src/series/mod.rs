//! Exact formal power series and the identities checked with them.

pub mod bivariate;
pub mod closed_form;
pub mod conjecture;
pub mod functional;
pub mod relation;
pub mod system;
mod univariate;

pub use bivariate::{phi, BivariateSeries};
pub use closed_form::{f_coefficients, f_series};
pub use conjecture::{conjecture_residual, verify_conjecture_010_102};
pub use functional::{fe_series, iterate_fe, Poly2, TrivariateSeries};
pub use relation::{
    conjecture_g, minpoly_a, minpoly_b, minpoly_f, relation_residual, series_from_counts,
    PolyRelation, Residual,
};
pub use system::{
    check_system, check_system_201_210, commitment_series, commitment_slices, SystemViolation,
};
pub use univariate::TruncatedSeries;

/// Order-by-order square root; see [`TruncatedSeries::sqrt`].
pub fn series_sqrt(s: &TruncatedSeries) -> crate::Result<TruncatedSeries> {
    s.sqrt()
}
