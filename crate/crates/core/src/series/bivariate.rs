//! Truncated series in `x` whose coefficients are polynomials in `u`.
//!
//! Every series built here comes from counting data, so coefficients stay
//! integral and are stored as `BigInt`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Polynomial in `u`, lowest degree first.
pub type UPoly = Vec<BigInt>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn upoly_add(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out: UPoly = (0..a.len().max(b.len()))
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(&mut out);
    out
}

fn upoly_mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

/// `sum_n terms[n](u) x^n`, known through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    terms: Vec<UPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            terms: vec![Vec::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = BivariateSeries::zero(order);
        s.terms[0] = vec![BigInt::one()];
        s
    }

    /// `terms[n][k]` is the coefficient of `x^n u^k`; missing degrees are zero.
    pub fn from_terms(mut terms: Vec<UPoly>, order: usize) -> Self {
        terms.resize(order + 1, Vec::new());
        terms.truncate(order + 1);
        terms.iter_mut().for_each(trim);
        BivariateSeries { terms }
    }

    /// Sum of `c x^i u^j` over the given triples.
    pub fn from_monomials(monomials: &[(i64, usize, usize)], order: usize) -> Self {
        let mut s = BivariateSeries::zero(order);
        for &(c, i, j) in monomials {
            if i <= order {
                let t = &mut s.terms[i];
                if t.len() <= j {
                    t.resize(j + 1, BigInt::zero());
                }
                t[j] += c;
                trim(t);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &[BigInt] {
        &self.terms[n]
    }

    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        self.terms
            .get(n)
            .and_then(|t| t.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    /// Largest `u`-degree at each `x`-degree, `None` for a zero term.
    pub fn u_degrees(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.terms.iter().map(|t| t.len().checked_sub(1))
    }

    /// First `(x-degree, u-degree)` with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.terms
            .iter()
            .enumerate()
            .find_map(|(n, t)| t.iter().position(|c| !c.is_zero()).map(|k| (n, k)))
    }

    pub fn mul_u(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.is_empty() {
                    Vec::new()
                } else {
                    std::iter::once(BigInt::zero())
                        .chain(t.iter().cloned())
                        .collect()
                }
            })
            .collect();
        BivariateSeries { terms }
    }

    /// Multiplies by `x`, dropping the term that falls past the order.
    pub fn mul_x(&self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        terms.push(Vec::new());
        terms.extend(self.terms[..self.order()].iter().cloned());
        BivariateSeries { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = BivariateSeries::zero(order);
        for (i, a) in self.terms.iter().enumerate().take(order + 1) {
            if a.is_empty() {
                continue;
            }
            for (j, b) in other.terms.iter().enumerate().take(order + 1 - i) {
                if !b.is_empty() {
                    out.terms[i + j] = upoly_add(&out.terms[i + j], &upoly_mul(a, b));
                }
            }
        }
        out
    }

    /// `f(x, 1)` as a series in `x` alone.
    pub fn at_u1(&self) -> TruncatedSeries {
        TruncatedSeries::from_integers(
            self.terms.iter().map(|t| t.iter().sum::<BigInt>()),
            self.order(),
        )
    }

    /// `f(x, 1)` kept as a bivariate series constant in `u`.
    pub fn at_u1_lifted(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut p = vec![t.iter().sum::<BigInt>()];
                trim(&mut p);
                p
            })
            .collect();
        BivariateSeries { terms }
    }
}

/// The discrete derivative `(f(x,1) - f(x,u)) / (1 - u)`, by synthetic
/// division of each `x`-coefficient by `u - 1`.
pub fn phi(f: &BivariateSeries) -> Result<BivariateSeries> {
    let mut terms = Vec::with_capacity(f.terms.len());
    for (n, p) in f.terms.iter().enumerate() {
        if p.len() <= 1 {
            terms.push(Vec::new());
            continue;
        }
        // p(u) - p(1) = (u - 1) q(u); the constant term of p(u) - p(1) is
        // p_0 - p(1), which must equal -q_0.
        let mut q = vec![BigInt::zero(); p.len() - 1];
        let mut acc = BigInt::zero();
        for k in (1..p.len()).rev() {
            acc += &p[k];
            q[k - 1] = acc.clone();
        }
        let p1: BigInt = p.iter().sum();
        if &p[0] - &p1 + &q[0] != BigInt::zero() {
            return Err(Error::Series(format!(
                "discrete derivative leaves a remainder at x^{n}"
            )));
        }
        trim(&mut q);
        terms.push(q);
    }
    Ok(BivariateSeries { terms })
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        let terms = (0..=order)
            .map(|n| upoly_add(&self.terms[n], &rhs.terms[n]))
            .collect();
        BivariateSeries { terms }
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        let terms = self
            .terms
            .iter()
            .map(|t| t.iter().map(|c| -c).collect())
            .collect();
        BivariateSeries { terms }
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self + &(-rhs)
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, t) in self.terms.iter().enumerate() {
            for (k, c) in t.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{c}")?;
                match n {
                    0 => {}
                    1 => f.write_str("*x")?,
                    _ => write!(f, "*x^{n}")?,
                }
                match k {
                    0 => {}
                    1 => f.write_str("*u")?,
                    _ => write!(f, "*u^{k}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> UPoly {
        let mut p: UPoly = c.iter().map(|&v| BigInt::from(v)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn worked_example() {
        let f = BivariateSeries::from_terms(vec![vec![], poly(&[1, 1, 3]), poly(&[0, 2, 4, 1])], 2);
        let want = BivariateSeries::from_terms(vec![vec![], poly(&[4, 3]), poly(&[7, 5, 1])], 2);
        assert_eq!(phi(&f).unwrap(), want);
    }

    #[test]
    fn phi_of_constant_and_power() {
        let c = BivariateSeries::from_terms(vec![poly(&[5]), poly(&[-2])], 1);
        assert!(phi(&c).unwrap().is_zero());
        let u3 = BivariateSeries::from_monomials(&[(1, 0, 3)], 0);
        assert_eq!(phi(&u3).unwrap().term(0), poly(&[1, 1, 1]).as_slice());
    }

    #[test]
    fn products_truncate() {
        let a = BivariateSeries::from_monomials(&[(1, 0, 0), (1, 1, 1)], 3);
        let sq = a.mul(&a);
        assert_eq!(
            sq,
            BivariateSeries::from_monomials(&[(1, 0, 0), (2, 1, 1), (1, 2, 2)], 3)
        );
        assert_eq!(a.mul_x().mul_x().mul_x().mul_x(), BivariateSeries::zero(3));
        assert_eq!(
            sq.at_u1().to_integers().unwrap(),
            [1, 2, 1, 0].map(BigInt::from).to_vec()
        );
        assert_eq!(sq.to_string(), "1 + 2*x*u + 1*x^2*u^2");
    }

    fn arbitrary() -> impl Strategy<Value = BivariateSeries> {
        prop::collection::vec(prop::collection::vec(-50i64..50, 0..7), 1..6)
            .prop_map(|rows| BivariateSeries::from_terms(rows.iter().map(|r| poly(r)).collect(), 4))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn phi_is_linear(f in arbitrary(), g in arbitrary()) {
            let lhs = phi(&(&f + &g)).unwrap();
            let rhs = &phi(&f).unwrap() + &phi(&g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn phi_inverts_multiplication_by_one_minus_u(f in arbitrary()) {
            // (1 - u) phi(f) = f(x,1) - f(x,u)
            let d = phi(&f).unwrap();
            let lhs = &d - &d.mul_u();
            prop_assert_eq!(lhs, &f.at_u1_lifted() - &f);
        }
    }
}
