//! Succession rules and their level-by-level counts.
//!
//! A [`RuleSystem`] rewrites a label into a multiset of labels. Counting the
//! paths of length `n` from the axiom, and summing over accepted labels, gives
//! the size of the class at length `n`. [`step`] applies a system to a whole
//! level generically; each concrete system also has a dense, prefix-summed
//! update that does the same work in time linear in the number of states.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::oracle::BigCount;
use crate::sequence::Basis;

mod commitment;
mod diagram;
mod two_stat;

pub use commitment::{step_fast_201_210, Avoid201210, CommitmentLevels, State201210};
pub use diagram::{emit_diagram, Diagram, DiagramEdge, DiagramNode};
pub use two_stat::{
    step_fast_010_100_120_210, step_fast_011_201, Avoid010100120210, Avoid011201, State2Int,
    TwoStatLevels,
};

pub trait RuleSystem {
    type Label: Clone + Ord + fmt::Debug + fmt::Display;

    fn axiom(&self) -> Self::Label;

    /// Successor labels with multiplicities; each label appears at most once.
    fn successors(&self, label: &Self::Label) -> Vec<(Self::Label, u64)>;

    /// Whether paths ending at `label` count as complete objects.
    fn accepts(&self, label: &Self::Label) -> bool;
}

/// Path counts per label at one depth. Labels with count zero are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelVector<L: Ord> {
    depth: usize,
    counts: BTreeMap<L, BigCount>,
}

impl<L: Ord + Clone> LevelVector<L> {
    pub fn new(depth: usize) -> Self {
        LevelVector {
            depth,
            counts: BTreeMap::new(),
        }
    }

    pub fn singleton(depth: usize, label: L, count: BigCount) -> Self {
        let mut level = LevelVector::new(depth);
        level.add(label, count);
        level
    }

    pub fn axiom<S: RuleSystem<Label = L>>(system: &S) -> Self {
        LevelVector::singleton(0, system.axiom(), BigCount::from(1u32))
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn add(&mut self, label: L, count: BigCount) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(label).or_default() += count;
    }

    pub fn get(&self, label: &L) -> BigCount {
        self.counts.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &BigCount)> {
        self.counts.iter()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigCount {
        self.counts.values().sum()
    }

    pub fn accepted_total<S: RuleSystem<Label = L>>(&self, system: &S) -> BigCount {
        self.counts
            .iter()
            .filter(|(l, _)| system.accepts(l))
            .map(|(_, c)| c)
            .sum()
    }
}

/// Generic one-level update: every (label, count) pushes `count * mult` to
/// each successor.
pub fn step<S: RuleSystem>(system: &S, level: &LevelVector<S::Label>) -> LevelVector<S::Label> {
    let mut next = LevelVector::new(level.depth + 1);
    for (label, count) in level.iter() {
        for (succ, mult) in system.successors(label) {
            next.add(succ, count * BigCount::from(mult));
        }
    }
    next
}

/// Merges repeated labels of a successor list into multiplicities.
pub(crate) fn collapse<L: Ord>(items: impl IntoIterator<Item = (L, u64)>) -> Vec<(L, u64)> {
    let mut merged: BTreeMap<L, u64> = BTreeMap::new();
    for (label, mult) in items {
        if mult > 0 {
            *merged.entry(label).or_default() += mult;
        }
    }
    merged.into_iter().collect()
}

/// The three classes that have succession rules here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemId {
    Avoid201210,
    Avoid011201,
    Avoid010100120210,
}

impl SystemId {
    pub const ALL: [SystemId; 3] = [
        SystemId::Avoid201210,
        SystemId::Avoid011201,
        SystemId::Avoid010100120210,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::Avoid201210 => "201-210",
            SystemId::Avoid011201 => "011-201",
            SystemId::Avoid010100120210 => "010-100-120-210",
        }
    }

    pub fn basis(self) -> Basis {
        Basis::from_words(&self.name().split('-').collect::<Vec<_>>())
            .expect("system names are valid patterns")
    }

    pub fn from_basis(basis: &Basis) -> Option<SystemId> {
        SystemId::ALL
            .into_iter()
            .find(|id| id.basis().same_set(basis))
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown system {0:?}; expected one of 201-210, 011-201, 010-100-120-210")]
pub struct UnknownSystem(pub String);

impl FromStr for SystemId {
    type Err = UnknownSystem;

    fn from_str(s: &str) -> Result<Self, UnknownSystem> {
        SystemId::ALL
            .into_iter()
            .find(|id| id.name() == s.trim())
            .ok_or_else(|| UnknownSystem(s.to_string()))
    }
}

/// `[|I_0|, ..., |I_{n_max}|]` for the class, via the dense updates.
pub fn counting_sequence(system: SystemId, n_max: usize) -> Vec<BigCount> {
    match system {
        SystemId::Avoid201210 => {
            let mut level = CommitmentLevels::axiom();
            let mut out = vec![level.accepted_total()];
            for _ in 0..n_max {
                level = level.step();
                out.push(level.accepted_total());
            }
            out
        }
        SystemId::Avoid011201 | SystemId::Avoid010100120210 => {
            let mut level = TwoStatLevels::axiom(system);
            let mut out = vec![level.total()];
            for _ in 0..n_max {
                level = level.step();
                out.push(level.total());
            }
            out
        }
    }
}

pub fn count_via_rules(system: SystemId, n: usize) -> BigCount {
    match system {
        SystemId::Avoid201210 => CommitmentLevels::at_depth(n).accepted_total(),
        _ => TwoStatLevels::at_depth(system, n).total(),
    }
}

/// The full depth-`n` level as `(label, count)` pairs in label order.
pub fn state_profile(system: SystemId, n: usize) -> Vec<(String, BigCount)> {
    fn render<L: Ord + Clone + fmt::Display>(level: &LevelVector<L>) -> Vec<(String, BigCount)> {
        level
            .iter()
            .map(|(l, c)| (l.to_string(), c.clone()))
            .collect()
    }
    match system {
        SystemId::Avoid201210 => render(&CommitmentLevels::at_depth(n).to_level()),
        _ => render(&TwoStatLevels::at_depth(system, n).to_level()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn system_names_round_trip() {
        for id in SystemId::ALL {
            assert_eq!(id.name().parse::<SystemId>().unwrap(), id);
            assert_eq!(SystemId::from_basis(&id.basis()), Some(id));
        }
        assert!("201".parse::<SystemId>().is_err());
        let b = Basis::from_words(&["210", "201"]).unwrap();
        assert_eq!(SystemId::from_basis(&b), Some(SystemId::Avoid201210));
    }

    #[test]
    fn counts_from_rules() {
        assert_eq!(count_via_rules(SystemId::Avoid201210, 3), n(6));
        assert_eq!(count_via_rules(SystemId::Avoid201210, 7), n(3720));
        assert_eq!(count_via_rules(SystemId::Avoid201210, 10), n(983072));
        assert_eq!(count_via_rules(SystemId::Avoid011201, 5), n(51));
        for id in SystemId::ALL {
            assert_eq!(count_via_rules(id, 0), n(1));
        }
    }

    #[test]
    fn counting_sequence_matches_pointwise() {
        for id in SystemId::ALL {
            let seq = counting_sequence(id, 12);
            for (i, c) in seq.iter().enumerate() {
                assert_eq!(c, &count_via_rules(id, i));
            }
        }
    }

    #[test]
    fn rules_match_oracle() {
        let limits = [
            (SystemId::Avoid201210, 12),
            (SystemId::Avoid011201, 11),
            (SystemId::Avoid010100120210, 11),
        ];
        for (id, limit) in limits {
            let rules = counting_sequence(id, limit);
            let brute = oracle::count_sequence(&id.basis(), limit);
            assert_eq!(rules, brute, "{id}");
        }
    }

    #[test]
    fn wilf_equivalence_evidence() {
        assert_eq!(
            counting_sequence(SystemId::Avoid011201, 200),
            counting_sequence(SystemId::Avoid010100120210, 200)
        );
    }

    #[test]
    fn ff_slice_counts_i10() {
        let i10 = oracle::count_sequence(&Basis::from_words(&["10"]).unwrap(), 10);
        for depth in 0..=10 {
            let level = CommitmentLevels::at_depth(depth).to_level();
            let ff: BigCount = level
                .iter()
                .filter(|(s, _)| !s.ell && !s.c)
                .map(|(_, c)| c)
                .sum();
            assert_eq!(ff, i10[depth]);
        }
    }

    #[test]
    fn profiles() {
        let p = state_profile(SystemId::Avoid201210, 0);
        assert_eq!(p, vec![("(0,F,F)".to_string(), n(1))]);
        let p = state_profile(SystemId::Avoid201210, 1);
        assert_eq!(p, vec![("(1,F,F)".to_string(), n(1))]);
        let p = state_profile(SystemId::Avoid011201, 0);
        assert_eq!(p, vec![("(0,0)".to_string(), n(1))]);
    }

    #[test]
    fn generic_step_on_empty_level() {
        let empty: LevelVector<State201210> = LevelVector::new(4);
        let next = step(&Avoid201210, &empty);
        assert!(next.is_empty());
        assert_eq!(next.depth(), 5);
    }
}
