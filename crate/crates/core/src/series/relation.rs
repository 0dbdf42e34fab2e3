//! Polynomial relations `sum_j c_j(x) S^j = 0` with integer polynomial
//! coefficients, evaluated on truncated series.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Integer polynomial in `x`, lowest degree first.
pub type XPoly = Vec<BigInt>;

pub fn xpoly(coeffs: &[i64]) -> XPoly {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn xpoly_mul(a: &[BigInt], b: &[BigInt]) -> XPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn product(factors: &[&[i64]]) -> XPoly {
    factors
        .iter()
        .fold(xpoly(&[1]), |acc, f| xpoly_mul(&acc, &xpoly(f)))
}

fn negate(p: XPoly) -> XPoly {
    p.into_iter().map(|c| -c).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRelation {
    name: &'static str,
    /// `coeffs[j]` multiplies `S^j`.
    coeffs: Vec<XPoly>,
}

/// Outcome of plugging a series into a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Residual {
    /// Every coefficient through `x^N` vanishes.
    ZeroThrough(usize),
    /// Lowest power of `x` with a nonzero coefficient.
    NonzeroAt(usize),
}

impl Residual {
    pub fn is_zero(self) -> bool {
        matches!(self, Residual::ZeroThrough(_))
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::ZeroThrough(n) => write!(f, "zero through x^{n}"),
            Residual::NonzeroAt(n) => write!(f, "nonzero at x^{n}"),
        }
    }
}

impl PolyRelation {
    pub fn new(name: &'static str, coeffs: Vec<XPoly>) -> Self {
        PolyRelation { name, coeffs }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coefficient_series(&self, j: usize, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(self.coeffs[j].iter().cloned(), order)
    }

    /// The relation's value at `s`, by Horner's rule in `S`.
    pub fn evaluate(&self, s: &TruncatedSeries) -> TruncatedSeries {
        let order = s.order();
        let mut acc = TruncatedSeries::zero(order);
        for j in (0..self.coeffs.len()).rev() {
            acc = &(&acc * s) + &self.coefficient_series(j, order);
        }
        acc
    }

    /// The unique series root with constant term `c0`, found by the
    /// iteration `S <- S - P(S) / d`, where `d` is `dP/dS` at `x = 0, S = c0`.
    /// Each round fixes one more coefficient.
    pub fn series_root(&self, c0: i64, order: usize) -> Result<TruncatedSeries> {
        let c0 = BigRational::from_integer(c0.into());
        let at_zero = |j: usize| {
            BigRational::from_integer(self.coeffs[j].first().cloned().unwrap_or_default())
        };
        let mut value = BigRational::zero();
        let mut slope = BigRational::zero();
        for j in (0..self.coeffs.len()).rev() {
            slope = &slope * &c0 + &value;
            value = &value * &c0 + at_zero(j);
        }
        if !value.is_zero() {
            return Err(Error::Series(format!(
                "{} does not vanish at x = 0 for that constant term",
                self.name
            )));
        }
        if slope.is_zero() {
            return Err(Error::Series(format!(
                "{} has a repeated root at x = 0",
                self.name
            )));
        }
        let step = BigRational::from_integer(1.into()) / slope;
        let mut s = TruncatedSeries::monomial(order, 0, c0);
        for _ in 0..order {
            s = &s - &self.evaluate(&s).scale(&step);
        }
        Ok(s)
    }

    pub fn residual(&self, s: &TruncatedSeries) -> Residual {
        let r = self.evaluate(s);
        match r.first_nonzero() {
            Some(i) => Residual::NonzeroAt(i),
            None => Residual::ZeroThrough(r.order()),
        }
    }
}

pub fn relation_residual(rel: &PolyRelation, s: &TruncatedSeries) -> Residual {
    rel.residual(s)
}

/// `x A^2 - A + 1`, satisfied by the FF slice `A(x,1)` (Catalan numbers).
pub fn minpoly_a() -> PolyRelation {
    PolyRelation::new("minpoly-A", vec![xpoly(&[1]), xpoly(&[-1]), xpoly(&[0, 1])])
}

/// Quartic satisfied by the TF slice `B(x,1)`.
pub fn minpoly_b() -> PolyRelation {
    let q = [1, -2, 2]; // 2x^2 - 2x + 1
    PolyRelation::new(
        "minpoly-B",
        vec![
            xpoly(&[0, 0, 0, 0, 1]),
            product(&[&[0, 1], &[-1, 1], &[-1, 6], &[-1, 3]]),
            xpoly(&[1, -8, 21, -16, -5, 12]),
            product(&[&[0, 2], &[-1, 1], &[-1, 3], &q]),
            product(&[&[0, 0, 1], &q, &q]),
        ],
    )
}

/// `(2x^2 - 2x + 1) F^2 + (x - 2) F + x + 1`.
pub fn minpoly_f() -> PolyRelation {
    PolyRelation::new(
        "minpoly-F",
        vec![xpoly(&[1, 1]), xpoly(&[-2, 1]), xpoly(&[1, -2, 2])],
    )
}

/// Conjectured cubic for the counting series of `I(010,102)`.
pub fn conjecture_g() -> PolyRelation {
    PolyRelation::new(
        "conjecture-010-102",
        vec![
            negate(product(&[&[-1, 2], &[-1, 1], &[-1, 1]])),
            negate(xpoly(&[1, -6, 11, -8, 1])),
            product(&[&[0, 2], &[-1, 1], &[1, -2, 2]]),
            product(&[&[0, 1], &[1, -1, 1], &[-1, 1], &[-1, 1]]),
        ],
    )
}

/// Counts as an integer series of order `counts.len() - 1`.
pub fn series_from_counts<T: Clone + Into<BigInt>>(counts: &[T]) -> TruncatedSeries {
    let order = counts.len().saturating_sub(1);
    TruncatedSeries::from_integers(counts.iter().cloned(), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_of_wrong_series() {
        let s = TruncatedSeries::from_integers([1, 1], 6);
        // x(1+x)^2 - (1+x) + 1 = 2x^2 + x^3
        let r = minpoly_a().evaluate(&s);
        assert_eq!(r, TruncatedSeries::from_integers([0, 0, 2, 1], 6));
        assert_eq!(minpoly_a().residual(&s), Residual::NonzeroAt(2));
    }

    #[test]
    fn catalan_satisfies_minpoly_a() {
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430];
        assert_eq!(
            minpoly_a().residual(&series_from_counts(&catalan)),
            Residual::ZeroThrough(8)
        );
    }

    #[test]
    fn quartic_coefficients_expand_as_displayed() {
        let b = minpoly_b();
        assert_eq!(b.degree(), 4);
        assert_eq!(b.coeffs[4], xpoly(&[0, 0, 1, -4, 8, -8, 4]));
        assert_eq!(b.coeffs[3], xpoly(&[0, 2, -12, 26, -28, 12]));
        assert_eq!(b.coeffs[1], xpoly(&[0, -1, 10, -27, 18]));
    }

    #[test]
    fn roots_by_iteration() {
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430];
        assert_eq!(
            minpoly_a().series_root(1, 8).unwrap(),
            series_from_counts(&catalan)
        );
        let g = conjecture_g().series_root(1, 9).unwrap();
        let want = [1i64, 1, 2, 5, 15, 51, 186, 707, 2763, 11024];
        assert_eq!(g, series_from_counts(&want));
        assert!(minpoly_f().series_root(1, 4).is_err());
        assert!(minpoly_a().series_root(2, 4).is_err());
    }

    #[test]
    fn cubic_constant_term_cancels() {
        let g = conjecture_g();
        assert_eq!(g.coeffs[0][0], BigInt::from(1));
        assert_eq!(g.coeffs[1][0], BigInt::from(-1));
        let s = TruncatedSeries::from_integers([1, 1], 1);
        assert!(g.residual(&s).is_zero());
    }
}
