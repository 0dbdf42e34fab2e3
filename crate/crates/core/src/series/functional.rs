//! Fixed-point iteration of the functional equations for the two-statistic
//! systems, with `u` marking `k` and `v` marking `ℓ`:
//!
//! ```text
//! F = 1 + xu (F(u,1) + (F - F(u,1))/(v-1) + (F - F(v,v))/(u-v))      011-201
//! G = 1 + xu (G      + (G - G(u,1))/(v-1) + (G(u,1) - G(v,1))/(u-v))  010-100-120-210
//! ```
//!
//! Only the `u = v = 1` specialisations of the two solutions are claimed to
//! agree; the full solutions differ.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::BigCount;
use crate::succession::SystemId;

/// Polynomial in `u` and `v`: `rows[i][j]` multiplies `u^i v^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    rows: Vec<Vec<BigInt>>,
}

fn trim_row(row: &mut Vec<BigInt>) {
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
}

impl Poly2 {
    fn normalized(mut rows: Vec<Vec<BigInt>>) -> Self {
        rows.iter_mut().for_each(trim_row);
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Poly2 { rows }
    }

    pub fn one() -> Self {
        Poly2 {
            rows: vec![vec![BigInt::one()]],
        }
    }

    /// A polynomial in `v` alone.
    fn in_v(coeffs: Vec<BigInt>) -> Self {
        Poly2::normalized(vec![coeffs])
    }

    /// A polynomial in `u` alone.
    fn in_u(coeffs: Vec<BigInt>) -> Self {
        Poly2::normalized(coeffs.into_iter().map(|c| vec![c]).collect())
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn u_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn v_degree(&self) -> Option<usize> {
        self.rows
            .iter()
            .filter_map(|r| r.len().checked_sub(1))
            .max()
    }

    /// Nonzero coefficients as `(i, j, c)` for `c u^i v^j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let rows = (0..self.rows.len().max(other.rows.len()))
            .map(|i| {
                let a = self.rows.get(i).map_or(&[][..], Vec::as_slice);
                let b = other.rows.get(i).map_or(&[][..], Vec::as_slice);
                (0..a.len().max(b.len()))
                    .map(|j| {
                        a.get(j).cloned().unwrap_or_default()
                            + b.get(j).cloned().unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        Poly2::normalized(rows)
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.neg())
    }

    pub fn mul_u(&self) -> Poly2 {
        if self.is_zero() {
            return Poly2::default();
        }
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        rows.push(Vec::new());
        rows.extend(self.rows.iter().cloned());
        Poly2 { rows }
    }

    /// `p(u, 1)`.
    pub fn at_v1(&self) -> Poly2 {
        Poly2::in_u(self.rows.iter().map(|r| r.iter().sum()).collect())
    }

    /// `p(v, v)`.
    pub fn at_u_eq_v(&self) -> Poly2 {
        let width = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| i + r.len())
            .max()
            .unwrap_or(0);
        let mut out = vec![BigInt::zero(); width];
        for (i, j, c) in self.terms() {
            out[i + j] += c;
        }
        Poly2::in_v(out)
    }

    /// `p(v, 1)`.
    pub fn at_u_to_v_v1(&self) -> Poly2 {
        Poly2::in_v(self.rows.iter().map(|r| r.iter().sum()).collect())
    }

    pub fn at_u1_v1(&self) -> BigInt {
        self.rows.iter().flatten().sum()
    }

    /// Exact quotient by `v - 1`.
    pub fn div_v_minus_1(&self) -> Result<Poly2> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.is_empty() {
                rows.push(Vec::new());
                continue;
            }
            // r = (v - 1) q: q_{j-1} = r_j + q_j from the top, remainder r_0 + q_0
            let mut q = vec![BigInt::zero(); r.len() - 1];
            let mut acc = BigInt::zero();
            for j in (1..r.len()).rev() {
                acc += &r[j];
                q[j - 1] = acc.clone();
            }
            if !(&r[0] + acc).is_zero() {
                return Err(Error::Series(format!(
                    "division by v-1 leaves a remainder in the u^{i} row"
                )));
            }
            rows.push(q);
        }
        Ok(Poly2::normalized(rows))
    }

    /// Exact quotient by `u - v`, by Horner's rule in `u` over `Z[v]`.
    pub fn div_u_minus_v(&self) -> Result<Poly2> {
        if self.is_zero() {
            return Ok(Poly2::default());
        }
        let d = self.rows.len() - 1;
        let mut q: Vec<Vec<BigInt>> = vec![Vec::new(); d];
        let mut carry: Vec<BigInt> = Vec::new();
        for i in (0..=d).rev() {
            // carry = rows[i] + v * q_i, with q_d = 0
            let row = &self.rows[i];
            let mut next = vec![BigInt::zero(); row.len().max(carry.len() + 1)];
            for (j, c) in row.iter().enumerate() {
                next[j] += c;
            }
            for (j, c) in carry.iter().enumerate() {
                next[j + 1] += c;
            }
            trim_row(&mut next);
            if i == 0 {
                if !next.is_empty() {
                    return Err(Error::Series("division by u-v leaves a remainder".into()));
                }
            } else {
                q[i - 1] = next.clone();
            }
            carry = next;
        }
        Ok(Poly2::normalized(q))
    }
}

/// `sum_n terms[n](u, v) x^n`, known through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivariateSeries {
    terms: Vec<Poly2>,
}

impl TrivariateSeries {
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &Poly2 {
        &self.terms[n]
    }

    /// Coefficients of `x^n` at `u = v = 1`.
    pub fn at_u1_v1(&self) -> Vec<BigInt> {
        self.terms.iter().map(Poly2::at_u1_v1).collect()
    }
}

/// The bracketed part of the right-hand side, applied to one `x`-coefficient.
fn bracket(system: SystemId, s: &Poly2) -> Result<Poly2> {
    let s_u1 = s.at_v1();
    let by_v = s.sub(&s_u1).div_v_minus_1()?;
    match system {
        SystemId::Avoid011201 => {
            let by_uv = s.sub(&s.at_u_eq_v()).div_u_minus_v()?;
            Ok(s_u1.add(&by_v).add(&by_uv))
        }
        SystemId::Avoid010100120210 => {
            let by_uv = s_u1.sub(&s.at_u_to_v_v1()).div_u_minus_v()?;
            Ok(s.add(&by_v).add(&by_uv))
        }
        SystemId::Avoid201210 => unreachable!(),
    }
}

fn apply_rhs(system: SystemId, s: &TrivariateSeries, order: usize) -> Result<TrivariateSeries> {
    let mut terms = Vec::with_capacity(order + 1);
    terms.push(Poly2::one());
    for n in 1..=order {
        let prev = s.terms.get(n - 1).cloned().unwrap_or_default();
        terms.push(bracket(system, &prev)?.mul_u());
    }
    Ok(TrivariateSeries { terms })
}

/// Solves the functional equation of `system` through `x^n_max` by iterating
/// `S -> RHS(S)` from `S = 1`.
pub fn fe_series(system: SystemId, n_max: usize) -> Result<TrivariateSeries> {
    if system == SystemId::Avoid201210 {
        return Err(Error::Series(
            "201-210 is described by a system of three equations, not a single one".into(),
        ));
    }
    let mut s = TrivariateSeries {
        terms: vec![Poly2::one()],
    };
    // after m rounds the first m + 1 coefficients are final
    for _ in 0..n_max {
        s = apply_rhs(system, &s, n_max)?;
    }
    if apply_rhs(system, &s, n_max)? != s {
        return Err(Error::Series(
            "iteration did not reach a fixed point".into(),
        ));
    }
    for (n, t) in s.terms.iter().enumerate() {
        if t.u_degree().is_some_and(|d| d > n) || t.v_degree().is_some_and(|d| d > n) {
            return Err(Error::Series(format!(
                "degree in u or v exceeds {n} at x^{n}"
            )));
        }
    }
    Ok(s)
}

/// Counting sequence of the class through `n_max`, from the functional
/// equation.
pub fn iterate_fe(system: SystemId, n_max: usize) -> Result<Vec<BigCount>> {
    fe_series(system, n_max)?
        .at_u1_v1()
        .into_iter()
        .map(|c| match c.into_parts() {
            (Sign::Minus, m) => Err(Error::Series(format!("negative count -{m}"))),
            (_, m) => Ok(m),
        })
        .collect()
}
