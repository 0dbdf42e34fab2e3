//! The algebraic generating function of `I(201,210)`:
//!
//! ```text
//! F(x) = (2 - x - x sqrt(1 - 8x)) / (2 (1 - 2x + 2x^2))
//! ```
//!
//! The radical `sqrt(x^2 - 8x^3)` is taken as `x sqrt(1 - 8x)`, which picks the
//! root with `F(0) = 1`.

use num_bigint::Sign;
use num_traits::Signed;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::oracle::BigCount;

/// `F(x)` through `x^n_max`.
pub fn f_series(n_max: usize) -> Result<TruncatedSeries> {
    let radical = TruncatedSeries::from_integers([1, -8], n_max).sqrt_sparse()?;
    let numerator = &TruncatedSeries::from_integers([2, -1], n_max) - &radical.shift(1);
    let denominator = TruncatedSeries::from_integers([2, -4, 4], n_max);
    numerator.div(&denominator)
}

/// Coefficients of `F(x)`, each checked to be a non-negative integer.
pub fn f_coefficients(n_max: usize) -> Result<Vec<BigCount>> {
    f_series(n_max)?
        .to_integers()?
        .into_iter()
        .enumerate()
        .map(|(n, c)| match c.sign() {
            Sign::Minus => Err(Error::Series(format!(
                "coefficient of x^{n} is negative ({}); wrong branch",
                -c.abs()
            ))),
            _ => Ok(c.magnitude().clone()),
        })
        .collect()
}
