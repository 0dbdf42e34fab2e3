//! The catalytic system for `I(201,210)`:
//!
//! ```text
//! A = 1 + xu (A + Φ(A))
//! B = xu (2B + Φ(B) + C)
//! C = xu (Φ(u Φ(A + B)) + Φ(C) + C)
//! ```
//!
//! with `A`, `B`, `C` the generating functions of the `(k,F,F)`, `(k,T,F)` and
//! `(k,T,T)` states, `u` marking `k`.

use std::fmt;

use num_bigint::BigInt;

use super::bivariate::{phi, BivariateSeries, UPoly};
use super::TruncatedSeries;
use crate::oracle::BigCount;
use crate::succession::CommitmentLevels;

/// The first place an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemViolation {
    pub equation: &'static str,
    pub x_degree: usize,
    pub u_degree: usize,
}

impl fmt::Display for SystemViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at x^{} u^{}",
            self.equation, self.x_degree, self.u_degree
        )
    }
}

impl std::error::Error for SystemViolation {}

/// `A`, `B`, `C` through `x^n_max`, read off the rule counts.
pub fn commitment_series(n_max: usize) -> [BivariateSeries; 3] {
    let mut ff = Vec::with_capacity(n_max + 1);
    let mut tf = Vec::with_capacity(n_max + 1);
    let mut tt = Vec::with_capacity(n_max + 1);
    let lift = |v: &[BigCount]| -> UPoly { v.iter().cloned().map(BigInt::from).collect() };
    let mut level = CommitmentLevels::axiom();
    for n in 0..=n_max {
        if n > 0 {
            level = level.step();
        }
        ff.push(lift(level.ff()));
        tf.push(lift(level.tf()));
        tt.push(lift(level.tt()));
    }
    [
        BivariateSeries::from_terms(ff, n_max),
        BivariateSeries::from_terms(tf, n_max),
        BivariateSeries::from_terms(tt, n_max),
    ]
}

/// `A(x,1)`, `B(x,1)`, `C(x,1)` through `x^n_max`.
pub fn commitment_slices(n_max: usize) -> [TruncatedSeries; 3] {
    commitment_series(n_max).map(|s| s.at_u1())
}

fn vanishes(equation: &'static str, s: &BivariateSeries) -> Result<(), SystemViolation> {
    match s.first_nonzero() {
        None => Ok(()),
        Some((x_degree, u_degree)) => Err(SystemViolation {
            equation,
            x_degree,
            u_degree,
        }),
    }
}

fn phi_or_violation(
    equation: &'static str,
    f: &BivariateSeries,
) -> Result<BivariateSeries, SystemViolation> {
    phi(f).map_err(|_| SystemViolation {
        equation,
        x_degree: 0,
        u_degree: 0,
    })
}

/// Checks the three functional equations and their cleared-denominator forms
/// `P1..P4` on arbitrary `A`, `B`, `C` of a common order.
pub fn check_system(
    a: &BivariateSeries,
    b: &BivariateSeries,
    c: &BivariateSeries,
) -> Result<(), SystemViolation> {
    let order = a.order().min(b.order()).min(c.order());
    for (equation, s) in [
        ("u-degree of A", a),
        ("u-degree of B", b),
        ("u-degree of C", c),
    ] {
        for (n, d) in s.u_degrees().enumerate() {
            if let Some(d) = d.filter(|&d| d > n) {
                return Err(SystemViolation {
                    equation,
                    x_degree: n,
                    u_degree: d,
                });
            }
        }
    }
    let mono = |m: &[(i64, usize, usize)]| BivariateSeries::from_monomials(m, order);
    let xu = mono(&[(1, 1, 1)]);

    let phi_a = phi_or_violation("A equation", a)?;
    let phi_b = phi_or_violation("B equation", b)?;
    let phi_c = phi_or_violation("C equation", c)?;
    let d = phi_or_violation("C equation", &(a + b))?;
    let phi_ud = phi_or_violation("C equation", &d.mul_u())?;

    let rhs_a = &BivariateSeries::one(order) + &xu.mul(&(a + &phi_a));
    vanishes("A equation", &(a - &rhs_a))?;
    let rhs_b = xu.mul(&(&(&(b + b) + &phi_b) + c));
    vanishes("B equation", &(b - &rhs_b))?;
    let rhs_c = xu.mul(&(&(&phi_ud + &phi_c) + c));
    vanishes("C equation", &(c - &rhs_c))?;

    let (a1, b1, c1, d1) = (
        a.at_u1_lifted(),
        b.at_u1_lifted(),
        c.at_u1_lifted(),
        d.at_u1_lifted(),
    );
    let kernel = mono(&[(1, 0, 0), (-1, 0, 1), (1, 1, 2)]); // 1 - u + xu^2

    let p1 = &(&kernel.mul(a) - &xu.mul(&a1)) + &mono(&[(1, 0, 1), (-1, 0, 0)]);
    vanishes("P1", &p1)?;

    // 1 - u - xu + 2xu^2, and xu(u - 1)
    let kernel_b = mono(&[(1, 0, 0), (-1, 0, 1), (-1, 1, 1), (2, 1, 2)]);
    let p2 = &(&kernel_b.mul(b) - &xu.mul(&b1)) + &mono(&[(1, 1, 2), (-1, 1, 1)]).mul(c);
    vanishes("P2", &p2)?;

    let p3 = &(&(&kernel.mul(c) - &xu.mul(&c1)) + &mono(&[(1, 1, 2)]).mul(&d)) - &xu.mul(&d1);
    vanishes("P3", &p3)?;

    let p4 = &(&(&(&d - &d.mul_u()) + a) + b) - &(&a1 + &b1);
    vanishes("P4", &p4)
}

/// Builds `A`, `B`, `C` from the rule counts and checks the system through
/// `x^n_max`.
pub fn check_system_201_210(n_max: usize) -> Result<(), SystemViolation> {
    let [a, b, c] = commitment_series(n_max);
    check_system(&a, &b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::count_sequence;
    use crate::sequence::Basis;

    #[test]
    fn holds_through_low_orders() {
        assert_eq!(check_system_201_210(0), Ok(()));
        assert_eq!(check_system_201_210(8), Ok(()));
        let [a, b, c] = commitment_series(0);
        assert_eq!(a, BivariateSeries::one(0));
        assert!(b.is_zero() && c.is_zero());
    }

    #[test]
    fn perturbed_count_is_caught() {
        let [a, b, c] = commitment_series(8);
        let mut terms: Vec<UPoly> = (0..=8).map(|n| b.term(n).to_vec()).collect();
        terms[5][2] += 1;
        let bumped = BivariateSeries::from_terms(terms, 8);
        let err = check_system(&a, &bumped, &c).unwrap_err();
        assert_eq!(err.equation, "B equation");
        assert_eq!(err.x_degree, 5);
    }

    #[test]
    fn opposite_sign_in_p2_fails() {
        // with -xu(u-1)C the identity breaks as soon as C is nonzero
        let [_, b, c] = commitment_series(6);
        let xu = BivariateSeries::from_monomials(&[(1, 1, 1)], 6);
        let kernel_b =
            BivariateSeries::from_monomials(&[(1, 0, 0), (-1, 0, 1), (-1, 1, 1), (2, 1, 2)], 6);
        let wrong = &(&kernel_b.mul(&b) - &xu.mul(&b.at_u1_lifted()))
            - &BivariateSeries::from_monomials(&[(1, 1, 2), (-1, 1, 1)], 6).mul(&c);
        assert!(wrong.first_nonzero().is_some());
    }

    #[test]
    fn ff_slice_counts_i_10() {
        let [a1, _, _] = commitment_slices(10);
        let basis = Basis::from_words(&["10"]).unwrap();
        let want: Vec<BigInt> = count_sequence(&basis, 10)
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(a1.to_integers().unwrap(), want);
    }
}
