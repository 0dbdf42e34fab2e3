//! Evidence for the conjectured cubic satisfied by the counting series of
//! `I(010,102)`. Nothing here proves the conjecture.

use num_bigint::BigInt;

use super::relation::{conjecture_g, series_from_counts, Residual};
use crate::oracle::{count_sequence, BigCount};
use crate::sequence::Basis;

pub fn basis_010_102() -> Basis {
    Basis::from_words(&["010", "102"]).expect("valid basis")
}

/// Residual of the cubic on an arbitrary list of counts.
pub fn conjecture_residual(counts: &[BigCount]) -> Residual {
    let ints: Vec<BigInt> = counts.iter().cloned().map(BigInt::from).collect();
    conjecture_g().residual(&series_from_counts(&ints))
}

/// Brute-force counts through `n_max`, then the residual of the cubic.
pub fn verify_conjecture_010_102(n_max: usize) -> bool {
    conjecture_residual(&count_sequence(&basis_010_102(), n_max)).is_zero()
}
