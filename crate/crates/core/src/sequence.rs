//! Inversion sequences, inversion patterns and classical containment.
//!
//! Storage is 0-indexed, so the inversion bound reads `entries[i] <= i`.
//! Positions in user-facing messages are 1-indexed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{format_word, parse_word};

/// A word `e` with `0 <= e[i] <= i` at every 0-indexed position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence(Vec<u32>);

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some((i, &v)) = entries.iter().enumerate().find(|(i, &v)| v as usize > *i) {
            return Err(Error::NotAnInversionSequence {
                word: format_word(&entries),
                position: i + 1,
                value: v,
            });
        }
        Ok(InversionSequence(entries))
    }

    pub fn empty() -> Self {
        InversionSequence(Vec::new())
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(is_inversion_sequence(&entries));
        InversionSequence(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_value(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Length minus maximum value; 0 for the empty sequence.
    pub fn bounce(&self) -> usize {
        match self.max_value() {
            Some(m) => self.0.len() - m as usize,
            None => 0,
        }
    }

    /// Appends `value`, failing if it would break the inversion bound.
    pub fn push(&mut self, value: u32) -> Result<()> {
        if value as usize > self.0.len() {
            return Err(Error::NotAnInversionSequence {
                word: format_word(&self.0),
                position: self.0.len() + 1,
                value,
            });
        }
        self.0.push(value);
        Ok(())
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InversionSequence::new(parse_word(s)?)
    }
}

/// A word that uses every value between 0 and its maximum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(missing) = first_missing_value(&letters) {
            return Err(Error::NotAPattern {
                word: format_word(&letters),
                missing,
            });
        }
        Ok(Pattern(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(parse_word(s)?)
    }
}

/// A duplicate-free set of nonempty patterns, kept in first-seen order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Basis(Vec<Pattern>);

impl Basis {
    pub fn new(patterns: impl IntoIterator<Item = Pattern>) -> Result<Self> {
        let mut out: Vec<Pattern> = Vec::new();
        for p in patterns {
            if p.is_empty() {
                return Err(Error::EmptyPattern);
            }
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(Basis(out))
    }

    /// Parses each word as a pattern, e.g. `["201", "210"]`.
    pub fn from_words<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        Basis::new(
            words
                .iter()
                .map(|w| w.as_ref().parse::<Pattern>())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order-insensitive comparison.
    pub fn same_set(&self, other: &Basis) -> bool {
        self.0.len() == other.0.len() && self.0.iter().all(|p| other.0.contains(p))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(Pattern::to_string).collect();
        write!(f, "{{{}}}", words.join(","))
    }
}

fn first_missing_value(word: &[u32]) -> Option<u32> {
    let max = *word.iter().max()?;
    let mut seen = vec![false; max as usize + 1];
    for &v in word {
        seen[v as usize] = true;
    }
    seen.iter().position(|s| !s).map(|i| i as u32)
}

/// Replaces every entry by the rank of its value among the distinct values.
pub fn standardize(word: &[u32]) -> Pattern {
    let mut values = word.to_vec();
    values.sort_unstable();
    values.dedup();
    Pattern(
        word.iter()
            .map(|v| values.binary_search(v).unwrap() as u32)
            .collect(),
    )
}

pub fn is_inversion_sequence(word: &[u32]) -> bool {
    word.iter().enumerate().all(|(i, &v)| (v as usize) <= i)
}

pub fn is_valid_pattern(word: &[u32]) -> bool {
    first_missing_value(word).is_none()
}

/// Classical containment of `pattern` in an arbitrary word.
///
/// Positions are chosen left to right; each new position must agree with the
/// pattern on its comparisons against every earlier chosen position.
pub(crate) fn word_contains(word: &[u32], pattern: &[u32]) -> bool {
    fn extend(word: &[u32], pattern: &[u32], chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        // leave room for the rest of the pattern
        let end = word.len() + t + 1 - pattern.len();
        for i in start..end {
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&j, &p)| word[j].cmp(&word[i]) == p.cmp(&pattern[t]));
            if consistent {
                chosen.push(i);
                if extend(word, pattern, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > word.len() {
        return false;
    }
    extend(word, pattern, &mut Vec::with_capacity(pattern.len()))
}

pub fn contains(e: &InversionSequence, p: &Pattern) -> Result<bool> {
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(word_contains(e.entries(), p.letters()))
}

pub fn avoids(e: &InversionSequence, basis: &Basis) -> bool {
    basis
        .patterns()
        .iter()
        .all(|p| !word_contains(e.entries(), p.letters()))
}

/// True iff, below and to the right of every left-to-right maximum, only one
/// value occurs. Equivalent to avoiding both 201 and 210.
pub fn structure_check_201_210(e: &InversionSequence) -> bool {
    let w = e.entries();
    let mut running_max = None;
    for (i, &v) in w.iter().enumerate() {
        if running_max.is_none_or(|m| v >= m) {
            running_max = Some(v);
            let mut below = w[i + 1..].iter().filter(|&&x| x < v);
            if let Some(&first) = below.next() {
                if below.any(|&x| x != first) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    pub big_value: Option<u32>,
    pub little_value: Option<u32>,
    pub bounce: usize,
}

pub fn structure_profile(e: &InversionSequence) -> Result<StructureProfile> {
    if !structure_check_201_210(e) {
        return Err(Error::NotAvoider(e.to_string()));
    }
    let w = e.entries();
    let Some(big) = e.max_value() else {
        return Ok(StructureProfile {
            big_value: None,
            little_value: None,
            bounce: 0,
        });
    };
    let first_big = w.iter().position(|&v| v == big).unwrap();
    let little_value = w[first_big + 1..].iter().copied().find(|&v| v < big);
    Ok(StructureProfile {
        big_value: Some(big),
        little_value,
        bounce: e.bounce(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> InversionSequence {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(standardize(&[4, 3, 4, 7, 1, 9, 9, 3]), pat("21230441"));
        assert_eq!(standardize(&[]), Pattern::default());
        assert_eq!(standardize(&[5, 5, 5]), pat("000"));
    }

    #[test]
    fn inversion_sequence_examples() {
        assert!(is_inversion_sequence(&parse_word("0002034").unwrap()));
        assert!(!is_inversion_sequence(&[1]));
        assert!(is_inversion_sequence(&parse_word("0023136638899").unwrap()));
        assert!(is_inversion_sequence(&[]));
        let err = "02".parse::<InversionSequence>().unwrap_err();
        assert!(matches!(
            err,
            Error::NotAnInversionSequence {
                position: 2,
                value: 2,
                ..
            }
        ));
    }

    #[test]
    fn pattern_examples() {
        assert!(is_valid_pattern(&[1, 0, 1]));
        assert!(!is_valid_pattern(&[2, 0, 2]));
        assert!(is_valid_pattern(&[0]));
        assert!(is_valid_pattern(&[]));
        assert_eq!(
            "202".parse::<Pattern>().unwrap_err(),
            Error::NotAPattern {
                word: "202".into(),
                missing: 1
            }
        );
    }

    #[test]
    fn containment_examples() {
        let e = seq("0002034");
        assert!(contains(&e, &pat("102")).unwrap());
        assert!(!contains(&e, &pat("011")).unwrap());
        assert!(contains(&e, &standardize(e.entries())).unwrap());
        assert_eq!(contains(&e, &Pattern::default()), Err(Error::EmptyPattern));
        assert!(!contains(&seq("00"), &pat("000")).unwrap());
    }

    #[test]
    fn structure_examples() {
        assert!(structure_check_201_210(&seq("00002204535377896966")));
        assert!(!structure_check_201_210(&seq("00201")));
        assert!(structure_check_201_210(&InversionSequence::empty()));
    }

    #[test]
    fn profile_examples() {
        let p = structure_profile(&seq("00002204535377896966")).unwrap();
        assert_eq!(
            p,
            StructureProfile {
                big_value: Some(9),
                little_value: Some(6),
                bounce: 11
            }
        );
        let p = structure_profile(&seq("0023136638899")).unwrap();
        assert_eq!(p.big_value, Some(9));
        assert_eq!(p.little_value, None);
        assert_eq!(structure_profile(&seq("000121")).unwrap().bounce, 4);
        let p = structure_profile(&InversionSequence::empty()).unwrap();
        assert_eq!(
            p,
            StructureProfile {
                big_value: None,
                little_value: None,
                bounce: 0
            }
        );
        assert!(matches!(
            structure_profile(&seq("00201")),
            Err(Error::NotAvoider(_))
        ));
    }

    #[test]
    fn basis_rejects_empty_and_dedups() {
        assert_eq!(Basis::new([Pattern::default()]), Err(Error::EmptyPattern));
        let b = Basis::from_words(&["201", "210", "201"]).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.same_set(&Basis::from_words(&["210", "201"]).unwrap()));
    }

    #[test]
    fn push_respects_bound() {
        let mut e = InversionSequence::empty();
        e.push(0).unwrap();
        assert!(e.push(2).is_err());
        e.push(1).unwrap();
        assert_eq!(e.to_string(), "01");
    }

    fn inversion_sequence() -> impl Strategy<Value = InversionSequence> {
        (0usize..10)
            .prop_flat_map(|n| (0..n).map(|i| 0..=i as u32).collect::<Vec<_>>())
            .prop_map(InversionSequence::from_entries_unchecked)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn standardize_is_idempotent(w in prop::collection::vec(0u32..20, 0..12)) {
            let once = standardize(&w);
            prop_assert_eq!(standardize(once.letters()), once.clone());
            prop_assert!(is_valid_pattern(once.letters()));
        }

        #[test]
        fn standardize_preserves_order(w in prop::collection::vec(0u32..20, 0..12)) {
            let s = standardize(&w);
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    prop_assert_eq!(w[i].cmp(&w[j]), s.letters()[i].cmp(&s.letters()[j]));
                }
            }
        }

        #[test]
        fn containment_survives_appending(e in inversion_sequence(), p in prop::sample::select(vec!["10", "011", "201", "210", "102", "0101"])) {
            let p = pat(p);
            if contains(&e, &p).unwrap() {
                for x in 0..=e.len() as u32 {
                    let mut longer = e.clone();
                    longer.push(x).unwrap();
                    prop_assert!(contains(&longer, &p).unwrap());
                }
            }
        }

        #[test]
        fn profile_bounce_is_length_minus_max(e in inversion_sequence()) {
            if let Ok(p) = structure_profile(&e) {
                if let Some(b) = p.big_value {
                    prop_assert_eq!(p.bounce, e.len() - b as usize);
                }
            }
        }
    }
}
