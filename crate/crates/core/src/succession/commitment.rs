//! Rules for `I(201,210)` with states `(k, ℓ, c)`.
//!
//! `k` is the bounce, `ℓ` records whether a little value was ever committed
//! to, `c` whether a commitment is still open. Placing a larger left-to-right
//! maximum may commit to a future little value; the committed value itself is
//! not part of the state, only the number of ways to choose it (the
//! `k - i + 1` multiplicity). Accepted states have no open commitment.

use std::fmt;

use num_traits::Zero;

use super::{collapse, LevelVector, RuleSystem};
use crate::oracle::BigCount;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State201210 {
    pub k: usize,
    pub ell: bool,
    pub c: bool,
}

impl State201210 {
    pub const fn new(k: usize, ell: bool, c: bool) -> Self {
        State201210 { k, ell, c }
    }
}

fn flag(b: bool) -> char {
    if b {
        'T'
    } else {
        'F'
    }
}

impl fmt::Display for State201210 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, flag(self.ell), flag(self.c))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Avoid201210;

impl RuleSystem for Avoid201210 {
    type Label = State201210;

    fn axiom(&self) -> State201210 {
        State201210::new(0, false, false)
    }

    fn successors(&self, s: &State201210) -> Vec<(State201210, u64)> {
        let k = s.k;
        let mut out = Vec::new();
        match (s.ell, s.c) {
            (false, false) => {
                // repeat the big value
                out.push((State201210::new(k + 1, false, false), 1));
                for i in 1..=k {
                    // larger big value, no commitment
                    out.push((State201210::new(i, false, false), 1));
                    // larger big value, committing to one of k - i + 1 little values
                    out.push((State201210::new(i, true, true), (k - i + 1) as u64));
                }
            }
            (true, false) => {
                // repeat the big value, or repeat the little value
                out.push((State201210::new(k + 1, true, false), 2));
                for i in 1..=k {
                    out.push((State201210::new(i, true, false), 1));
                    out.push((State201210::new(i, true, true), (k - i + 1) as u64));
                }
            }
            (true, true) => {
                out.push((State201210::new(k + 1, true, true), 1));
                // place the committed little value
                out.push((State201210::new(k + 1, true, false), 1));
                for i in 1..=k {
                    out.push((State201210::new(i, true, true), 1));
                }
            }
            (false, true) => unreachable!("state {s} is never produced"),
        }
        collapse(out)
    }

    fn accepts(&self, s: &State201210) -> bool {
        !s.c
    }
}

/// Dense level: one count vector per flag combination, indexed by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommitmentLevels {
    depth: usize,
    ff: Vec<BigCount>,
    tf: Vec<BigCount>,
    tt: Vec<BigCount>,
}

fn suffix_sums(v: &[BigCount]) -> Vec<BigCount> {
    let mut out = vec![BigCount::zero(); v.len() + 1];
    for i in (0..v.len()).rev() {
        out[i] = &out[i + 1] + &v[i];
    }
    out
}

fn at(v: &[BigCount], i: usize) -> Option<&BigCount> {
    v.get(i).filter(|c| !c.is_zero())
}

impl CommitmentLevels {
    pub fn axiom() -> Self {
        CommitmentLevels {
            depth: 0,
            ff: vec![BigCount::from(1u32)],
            tf: vec![BigCount::zero()],
            tt: vec![BigCount::zero()],
        }
    }

    pub fn at_depth(n: usize) -> Self {
        let mut level = CommitmentLevels::axiom();
        for _ in 0..n {
            level = level.step();
        }
        level
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `P_n(k, F, F)` for `k = 0..=n`.
    pub fn ff(&self) -> &[BigCount] {
        &self.ff
    }

    /// `P_n(k, T, F)` for `k = 0..=n`.
    pub fn tf(&self) -> &[BigCount] {
        &self.tf
    }

    /// `P_n(k, T, T)` for `k = 0..=n`.
    pub fn tt(&self) -> &[BigCount] {
        &self.tt
    }

    pub fn accepted_total(&self) -> BigCount {
        self.ff.iter().chain(&self.tf).sum()
    }

    /// One application of the rules, using suffix sums for the ranged
    /// productions and a suffix sum of suffix sums for the `k - i + 1`
    /// weights.
    pub fn step(&self) -> Self {
        let len = self.ff.len();
        let suf_ff = suffix_sums(&self.ff);
        let suf_tf = suffix_sums(&self.tf);
        let suf_tt = suffix_sums(&self.tt);
        let open: Vec<BigCount> = suf_ff.iter().zip(&suf_tf).map(|(a, b)| a + b).collect();
        // weighted[i] = sum_{k >= i} (k - i + 1) (ff[k] + tf[k])
        let weighted = suffix_sums(&open[..len]);

        let mut ff = vec![BigCount::zero(); len + 1];
        let mut tf = vec![BigCount::zero(); len + 1];
        let mut tt = vec![BigCount::zero(); len + 1];
        for i in 1..=len {
            let prev = i - 1;
            ff[i] = &self.ff[prev] + &suf_ff[i];
            tf[i] = (&self.tf[prev] << 1usize) + &suf_tf[i] + &self.tt[prev];
            tt[i] = &self.tt[prev] + &suf_tt[i] + &weighted[i];
        }
        CommitmentLevels {
            depth: self.depth + 1,
            ff,
            tf,
            tt,
        }
    }

    pub fn to_level(&self) -> LevelVector<State201210> {
        let mut level = LevelVector::new(self.depth);
        for k in 0..self.ff.len() {
            if let Some(c) = at(&self.ff, k) {
                level.add(State201210::new(k, false, false), c.clone());
            }
            if let Some(c) = at(&self.tf, k) {
                level.add(State201210::new(k, true, false), c.clone());
            }
            if let Some(c) = at(&self.tt, k) {
                level.add(State201210::new(k, true, true), c.clone());
            }
        }
        level
    }

    pub fn from_level(level: &LevelVector<State201210>) -> Self {
        let width = level
            .iter()
            .map(|(s, _)| s.k + 1)
            .max()
            .unwrap_or(0)
            .max(level.depth() + 1);
        let mut out = CommitmentLevels {
            depth: level.depth(),
            ff: vec![BigCount::zero(); width],
            tf: vec![BigCount::zero(); width],
            tt: vec![BigCount::zero(); width],
        };
        for (s, c) in level.iter() {
            let slot = match (s.ell, s.c) {
                (false, false) => &mut out.ff,
                (true, false) => &mut out.tf,
                (true, true) => &mut out.tt,
                (false, true) => panic!("state {s} cannot occur"),
            };
            slot[s.k] += c;
        }
        out
    }
}

/// Same contract as [`super::step`] for [`Avoid201210`], in `O(n)` big-integer
/// additions.
pub fn step_fast_201_210(level: &LevelVector<State201210>) -> LevelVector<State201210> {
    CommitmentLevels::from_level(level).step().to_level()
}
