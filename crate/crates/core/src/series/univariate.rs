use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Power series in `x` with exact rational coefficients known through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Coefficients of `x^0..=x^(len-1)`; an empty vector is treated as the
    /// zero series of order 0.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::monomial(order, 0, BigRational::one())
    }

    /// `c x^power`, truncated.
    pub fn monomial(order: usize, power: usize, c: BigRational) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Integer coefficients, padded with zeros (or cut) to `order`.
    pub fn from_integers<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut v: Vec<BigRational> = coeffs
            .into_iter()
            .take(order + 1)
            .map(|c| BigRational::from_integer(c.into()))
            .collect();
        v.resize(order + 1, BigRational::zero());
        TruncatedSeries::new(v)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: BigRational) {
        self.coeffs[i] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut v = self.coeffs.clone();
        v.resize(order + 1, BigRational::zero());
        TruncatedSeries::new(v)
    }

    /// Multiplies by `x^k`; the order is unchanged.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut v = vec![BigRational::zero(); n];
        if k < n {
            v[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        TruncatedSeries::new(v)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, failing on the first fractional one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Series(format!(
                        "coefficient of x^{i} is {c}, not an integer"
                    )))
                }
            })
            .collect()
    }

    fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Quotient through the smaller of the two orders. The divisor's constant
    /// term must be nonzero.
    pub fn div(&self, divisor: &TruncatedSeries) -> Result<Self> {
        let b0 = divisor.coeff(0);
        if b0.is_zero() {
            return Err(Error::Series(
                "division by a series with zero constant term".into(),
            ));
        }
        let order = self.order().min(divisor.order());
        let inv_b0 = b0.recip();
        let tail: Vec<(usize, &BigRational)> =
            divisor.nonzero_terms().filter(|(i, _)| *i > 0).collect();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for &(i, b) in tail.iter().take_while(|(i, _)| *i <= n) {
                acc -= b * &q[n - i];
            }
            q.push(acc * &inv_b0);
        }
        Ok(TruncatedSeries::new(q))
    }

    /// Square root with constant term 1, solved order by order from
    /// `2 r_n = s_n - sum_{0<i<n} r_i r_{n-i}`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::Series(format!(
                "square root needs constant term 1, found {}",
                self.coeff(0)
            )));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut r: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &r[i] * &r[n - i];
            }
            r.push(acc * &half);
        }
        Ok(TruncatedSeries::new(r))
    }

    /// Square root with constant term 1 via `2 s r' = s' r`, which gives
    /// `2n r_n = sum_{j>=1} (3j - 2n) s_j r_{n-j}`. Costs `O(order · terms(s))`,
    /// so it is linear for polynomial input.
    pub fn sqrt_sparse(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::Series(format!(
                "square root needs constant term 1, found {}",
                self.coeff(0)
            )));
        }
        let terms: Vec<(usize, &BigRational)> =
            self.nonzero_terms().filter(|(j, _)| *j > 0).collect();
        let mut r: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for &(j, s) in terms.iter().take_while(|(j, _)| *j <= n) {
                let w = BigInt::from(3 * j as i64 - 2 * n as i64);
                acc += s * &r[n - j] * BigRational::from_integer(w);
            }
            r.push(acc / BigRational::from_integer(BigInt::from(2 * n)));
        }
        Ok(TruncatedSeries::new(r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = TruncatedSeries::one(self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        // counting series are integral; skip the gcd work rationals would do
        if self.is_integral() && rhs.is_integral() {
            let a: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = rhs.coeffs.iter().map(|c| c.to_integer()).collect();
            let mut out = vec![BigInt::zero(); order + 1];
            for (i, ai) in a.iter().enumerate().take(order + 1) {
                if ai.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
                    out[i + j] += ai * bj;
                }
            }
            return TruncatedSeries::new(out.into_iter().map(BigRational::from_integer).collect());
        }
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, ai) in self.nonzero_terms().take_while(|(i, _)| *i <= order) {
            for (j, bj) in rhs.nonzero_terms().take_while(|(j, _)| i + j <= order) {
                out[i + j] += ai * bj;
            }
        }
        TruncatedSeries::new(out)
    }
}

/// `1 + 2*x - 3/2*x^3`, zero terms omitted.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.nonzero_terms() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
