//! Brute-force enumeration of `I_n(B)` by pruned backtracking.
//!
//! Prefixes are extended one entry at a time, values ascending. A prefix of an
//! avoider is an avoider, so a branch is cut the moment the new entry completes
//! an occurrence of some basis pattern. Each node carries the set of values
//! that would complete an occurrence if appended next; extending by `y` only
//! adds the completions of partial occurrences whose last entry is `y`.

use num_bigint::BigUint;

use crate::sequence::{Basis, InversionSequence};

pub type BigCount = BigUint;

/// Values at or above this bound cannot be represented in a forbidden-set mask.
pub const MAX_ORACLE_LENGTH: usize = 128;

type ValueSet = u128;

fn values_above(lo: i64) -> ValueSet {
    if lo < 0 {
        !0
    } else if lo >= 127 {
        0
    } else {
        !0u128 << (lo + 1)
    }
}

fn values_below(hi: Option<u32>) -> ValueSet {
    match hi {
        None => !0,
        Some(h) if h >= 128 => !0,
        Some(h) => (1u128 << h) - 1,
    }
}

struct Pruner<'a> {
    patterns: Vec<&'a [u32]>,
}

impl<'a> Pruner<'a> {
    fn new(basis: &'a Basis) -> Self {
        Pruner {
            patterns: basis.patterns().iter().map(|p| p.letters()).collect(),
        }
    }

    /// Values forbidden as the very first entry.
    fn root(&self) -> ValueSet {
        if self.patterns.iter().any(|p| p.len() == 1) {
            !0
        } else {
            0
        }
    }

    /// Values newly forbidden after `word` whose last entry was just appended.
    fn completions_ending_at_last(&self, word: &[u32]) -> ValueSet {
        let mut out = 0;
        for p in &self.patterns {
            if p.len() >= 2 {
                out |= completions(word, p);
            }
        }
        out
    }
}

/// Values `x` such that `word · x` has an occurrence of `pattern` whose
/// second-to-last entry is the last entry of `word`.
fn completions(word: &[u32], pattern: &[u32]) -> ValueSet {
    let k = pattern.len();
    let anchor = word.len() - 1;
    let head = &pattern[..k - 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(k - 1);
    let mut out = 0;

    fn forbid(word: &[u32], pattern: &[u32], chosen: &[usize]) -> ValueSet {
        let last = pattern[pattern.len() - 1];
        let mut lo: i64 = -1;
        let mut hi: Option<u32> = None;
        for (&pos, &p) in chosen.iter().zip(pattern) {
            let w = word[pos];
            if p == last {
                return if w < 128 { 1u128 << w } else { 0 };
            }
            if p < last {
                lo = lo.max(w as i64);
            } else {
                hi = Some(hi.map_or(w, |h| h.min(w)));
            }
        }
        values_above(lo) & values_below(hi)
    }

    fn extend(
        word: &[u32],
        pattern: &[u32],
        head: &[u32],
        anchor: usize,
        chosen: &mut Vec<usize>,
        out: &mut ValueSet,
    ) {
        let t = chosen.len();
        if t + 1 == head.len() {
            chosen.push(anchor);
            *out |= forbid(word, pattern, chosen);
            chosen.pop();
            return;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        let end = anchor + t + 2 - head.len();
        for i in start..end {
            let v = word[i];
            let consistent = chosen
                .iter()
                .zip(head)
                .all(|(&j, &p)| word[j].cmp(&v) == p.cmp(&head[t]))
                && v.cmp(&word[anchor]) == head[t].cmp(&head[head.len() - 1]);
            if consistent {
                chosen.push(i);
                extend(word, pattern, head, anchor, chosen, out);
                chosen.pop();
            }
        }
    }

    if anchor + 1 >= head.len() {
        extend(word, pattern, head, anchor, &mut chosen, &mut out);
    }
    out
}

/// Depth-first walk over all avoiders of length at most `n_max`, calling
/// `visit` on every prefix (including the empty one).
fn walk<F: FnMut(&[u32])>(basis: &Basis, n_max: usize, mut visit: F) {
    assert!(
        n_max < MAX_ORACLE_LENGTH,
        "brute force is limited to length {}",
        MAX_ORACLE_LENGTH - 1
    );
    let pruner = Pruner::new(basis);
    let mut word: Vec<u32> = Vec::with_capacity(n_max);

    fn go<F: FnMut(&[u32])>(
        pruner: &Pruner,
        word: &mut Vec<u32>,
        forbidden: ValueSet,
        n_max: usize,
        visit: &mut F,
    ) {
        visit(word);
        let n = word.len();
        if n == n_max {
            return;
        }
        for x in 0..=n as u32 {
            if forbidden >> x & 1 == 1 {
                continue;
            }
            word.push(x);
            let next = forbidden | pruner.completions_ending_at_last(word);
            go(pruner, word, next, n_max, visit);
            word.pop();
        }
    }

    go(&pruner, &mut word, pruner.root(), n_max, &mut visit);
}

/// `[|I_0(B)|, ..., |I_{n_max}(B)|]` from a single backtracking pass.
pub fn count_sequence(basis: &Basis, n_max: usize) -> Vec<BigCount> {
    let mut counts = vec![0u64; n_max + 1];
    walk(basis, n_max, |w| counts[w.len()] += 1);
    counts.into_iter().map(BigCount::from).collect()
}

pub fn count_avoiders(basis: &Basis, n: usize) -> BigCount {
    let mut count = 0u64;
    walk(basis, n, |w| {
        if w.len() == n {
            count += 1
        }
    });
    BigCount::from(count)
}

/// All members of `I_n(B)` in lexicographic order.
pub fn list_avoiders(basis: &Basis, n: usize) -> Vec<InversionSequence> {
    let mut out = Vec::new();
    walk(basis, n, |w| {
        if w.len() == n {
            out.push(InversionSequence::from_entries_unchecked(w.to_vec()))
        }
    });
    out
}

/// Every inversion sequence of length `n`, in lexicographic order.
pub fn inversion_sequences(n: usize) -> InversionSequences {
    InversionSequences {
        current: Some(vec![0; n]),
    }
}

pub struct InversionSequences {
    current: Option<Vec<u32>>,
}

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let out = self.current.clone()?;
        let word = self.current.as_mut().unwrap();
        // odometer with digit i running over 0..=i
        let mut i = word.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if (word[i] as usize) < i {
                word[i] += 1;
                word[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
        Some(InversionSequence::from_entries_unchecked(out))
    }
}
