//! Two-statistic rules `(k, ℓ)` for `I(011,201)` and `I(010,100,120,210)`.
//!
//! `k` is the bounce and `ℓ` the number of still-usable values below the
//! maximum. Both systems start at `(0,0)` and every state is accepted: a path
//! places one entry per step and never leaves anything owed.

use std::fmt;

use num_traits::Zero;

use super::{collapse, LevelVector, RuleSystem, SystemId};
use crate::oracle::BigCount;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State2Int {
    pub k: usize,
    pub ell: usize,
}

impl State2Int {
    pub const fn new(k: usize, ell: usize) -> Self {
        State2Int { k, ell }
    }
}

impl fmt::Display for State2Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.ell)
    }
}

/// `(k,ℓ) → (k+1,0); (i, ℓ+k−i) for 1 ≤ i ≤ k; (k+1,i) for 0 ≤ i < ℓ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Avoid011201;

impl RuleSystem for Avoid011201 {
    type Label = State2Int;

    fn axiom(&self) -> State2Int {
        State2Int::new(0, 0)
    }

    fn successors(&self, s: &State2Int) -> Vec<(State2Int, u64)> {
        let (k, ell) = (s.k, s.ell);
        let zero = std::iter::once((State2Int::new(k + 1, 0), 1));
        let new_max = (1..=k).map(|i| (State2Int::new(i, ell + k - i), 1));
        let below = (0..ell).map(|i| (State2Int::new(k + 1, i), 1));
        collapse(zero.chain(new_max).chain(below))
    }

    fn accepts(&self, _: &State2Int) -> bool {
        true
    }
}

/// `(k,ℓ) → (k+1,ℓ); (k+1,i) for 0 ≤ i < ℓ; (i, k−i) for 1 ≤ i ≤ k`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Avoid010100120210;

impl RuleSystem for Avoid010100120210 {
    type Label = State2Int;

    fn axiom(&self) -> State2Int {
        State2Int::new(0, 0)
    }

    fn successors(&self, s: &State2Int) -> Vec<(State2Int, u64)> {
        let (k, ell) = (s.k, s.ell);
        let same = std::iter::once((State2Int::new(k + 1, ell), 1));
        let below = (0..ell).map(|i| (State2Int::new(k + 1, i), 1));
        let new_max = (1..=k).map(|i| (State2Int::new(i, k - i), 1));
        collapse(same.chain(below).chain(new_max))
    }

    fn accepts(&self, _: &State2Int) -> bool {
        true
    }
}

/// Dense level `grid[k][ℓ]`; rows grow on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStatLevels {
    system: SystemId,
    depth: usize,
    grid: Vec<Vec<BigCount>>,
}

fn add_at(grid: &mut Vec<Vec<BigCount>>, k: usize, ell: usize, value: &BigCount) {
    if value.is_zero() {
        return;
    }
    if grid.len() <= k {
        grid.resize_with(k + 1, Vec::new);
    }
    let row = &mut grid[k];
    if row.len() <= ell {
        row.resize(ell + 1, BigCount::zero());
    }
    row[ell] += value;
}

/// `out[i] = sum of row[j] for j > i`, for `i` in `0..row.len()`.
fn strict_suffix_sums(row: &[BigCount]) -> Vec<BigCount> {
    let mut out = vec![BigCount::zero(); row.len()];
    let mut acc = BigCount::zero();
    for i in (0..row.len()).rev() {
        out[i] = acc.clone();
        acc += &row[i];
    }
    out
}

impl TwoStatLevels {
    /// Panics for [`SystemId::Avoid201210`], which is not a two-statistic system.
    pub fn axiom(system: SystemId) -> Self {
        assert!(
            system != SystemId::Avoid201210,
            "201-210 uses commitment states"
        );
        TwoStatLevels {
            system,
            depth: 0,
            grid: vec![vec![BigCount::from(1u32)]],
        }
    }

    pub fn at_depth(system: SystemId, n: usize) -> Self {
        let mut level = TwoStatLevels::axiom(system);
        for _ in 0..n {
            level = level.step();
        }
        level
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn total(&self) -> BigCount {
        self.grid.iter().flatten().sum()
    }

    pub fn step(&self) -> Self {
        let grid = match self.system {
            SystemId::Avoid011201 => self.step_011_201(),
            SystemId::Avoid010100120210 => self.step_010_100_120_210(),
            SystemId::Avoid201210 => unreachable!(),
        };
        TwoStatLevels {
            system: self.system,
            depth: self.depth + 1,
            grid,
        }
    }

    fn step_011_201(&self) -> Vec<Vec<BigCount>> {
        let mut next = Vec::new();
        for (k, row) in self.grid.iter().enumerate() {
            let row_sum: BigCount = row.iter().sum();
            add_at(&mut next, k + 1, 0, &row_sum);
            for (i, s) in strict_suffix_sums(row).iter().enumerate() {
                add_at(&mut next, k + 1, i, s);
            }
        }
        // (k,ℓ) → (i, ℓ+k−i) keeps k+ℓ fixed: target (i,j) collects the
        // anti-diagonal k+ℓ = i+j over sources with k ≥ i.
        let max_diag = self
            .grid
            .iter()
            .enumerate()
            .map(|(k, row)| k + row.len())
            .max()
            .unwrap_or(0);
        for diag in 1..max_diag {
            let mut acc = BigCount::zero();
            for k in (1..=diag.min(self.grid.len() - 1)).rev() {
                if let Some(c) = self.grid[k].get(diag - k) {
                    acc += c;
                }
                add_at(&mut next, k, diag - k, &acc);
            }
        }
        next
    }

    fn step_010_100_120_210(&self) -> Vec<Vec<BigCount>> {
        let mut next = Vec::new();
        for (k, row) in self.grid.iter().enumerate() {
            for (ell, (c, s)) in row.iter().zip(strict_suffix_sums(row)).enumerate() {
                add_at(&mut next, k + 1, ell, &(c + s));
            }
            let row_sum: BigCount = row.iter().sum();
            for i in 1..=k {
                add_at(&mut next, i, k - i, &row_sum);
            }
        }
        next
    }

    pub fn to_level(&self) -> LevelVector<State2Int> {
        let mut level = LevelVector::new(self.depth);
        for (k, row) in self.grid.iter().enumerate() {
            for (ell, c) in row.iter().enumerate() {
                level.add(State2Int::new(k, ell), c.clone());
            }
        }
        level
    }

    pub fn from_level(system: SystemId, level: &LevelVector<State2Int>) -> Self {
        let mut grid = Vec::new();
        for (s, c) in level.iter() {
            add_at(&mut grid, s.k, s.ell, c);
        }
        TwoStatLevels {
            system,
            depth: level.depth(),
            grid,
        }
    }
}

/// Same contract as [`super::step`] for [`Avoid011201`].
pub fn step_fast_011_201(level: &LevelVector<State2Int>) -> LevelVector<State2Int> {
    TwoStatLevels::from_level(SystemId::Avoid011201, level)
        .step()
        .to_level()
}

/// Same contract as [`super::step`] for [`Avoid010100120210`].
pub fn step_fast_010_100_120_210(level: &LevelVector<State2Int>) -> LevelVector<State2Int> {
    TwoStatLevels::from_level(SystemId::Avoid010100120210, level)
        .step()
        .to_level()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::succession::step;
    use proptest::prelude::*;

    fn st(k: usize, ell: usize) -> State2Int {
        State2Int::new(k, ell)
    }

    #[test]
    fn duplicate_productions_collapse() {
        // (k+1,0) arises from both the zero entry and the i = 0 below-max entry
        let succ = Avoid011201.successors(&st(1, 2));
        assert!(succ.contains(&(st(2, 0), 2)));
        assert!(succ.contains(&(st(2, 1), 1)));
        assert!(succ.contains(&(st(1, 2), 1)));
        assert_eq!(succ.len(), 3);
    }

    #[test]
    fn fast_matches_generic_to_depth_50() {
        let mut a = LevelVector::axiom(&Avoid011201);
        let mut b = LevelVector::axiom(&Avoid010100120210);
        let mut da = TwoStatLevels::axiom(SystemId::Avoid011201);
        let mut db = TwoStatLevels::axiom(SystemId::Avoid010100120210);
        for _ in 0..50 {
            a = step(&Avoid011201, &a);
            b = step(&Avoid010100120210, &b);
            da = da.step();
            db = db.step();
            assert_eq!(da.to_level(), a);
            assert_eq!(db.to_level(), b);
            let d = a.depth();
            assert!(a
                .iter()
                .chain(b.iter())
                .all(|(s, _)| s.k <= d && s.ell <= d));
        }
    }

    #[test]
    fn empty_level_stays_empty() {
        assert!(step_fast_011_201(&LevelVector::new(3)).is_empty());
        assert!(step_fast_010_100_120_210(&LevelVector::new(3)).is_empty());
    }

    fn arbitrary_level() -> impl Strategy<Value = LevelVector<State2Int>> {
        prop::collection::vec((0usize..8, 0usize..8, 1u64..1000), 0..12).prop_map(|cells| {
            let mut level = LevelVector::new(8);
            for (k, ell, c) in cells {
                level.add(st(k, ell), BigCount::from(c));
            }
            level
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn fast_matches_generic_on_arbitrary_levels(level in arbitrary_level()) {
            prop_assert_eq!(step_fast_011_201(&level), step(&Avoid011201, &level));
            prop_assert_eq!(step_fast_010_100_120_210(&level), step(&Avoid010100120210, &level));
        }
    }
}
