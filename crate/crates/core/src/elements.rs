//! Sets of ring elements, addressed by table index.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A subset of `{0, .., universe - 1}` stored as a bitset.
///
/// Ordering is by cardinality first and then by the sorted element list, which
/// is the canonical order used for ideal inventories.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for x in 0..universe {
            set.insert(x);
        }
        set
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(x);
        set
    }

    /// Panics if an element is outside the universe.
    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, elements: I) -> Self {
        let mut set = Self::empty(universe);
        for x in elements {
            set.insert(x);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / 64] & (1u64 << (x % 64)) != 0
    }

    /// Returns `true` if `x` was not already present.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.universe,
            "element {x} outside universe of size {}",
            self.universe
        );
        let mask = 1u64 << (x % 64);
        let fresh = self.words[x / 64] & mask == 0;
        self.words[x / 64] |= mask;
        fresh
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.universe {
            return false;
        }
        let mask = 1u64 << (x % 64);
        let present = self.words[x / 64] & mask != 0;
        self.words[x / 64] &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.zip_words(other).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.zip_words(other).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & !b)
    }

    fn zip_words<'a>(&'a self, other: &'a Self) -> impl Iterator<Item = (u64, u64)> + 'a {
        assert_eq!(self.universe, other.universe, "element sets over different universes");
        self.words.iter().copied().zip(other.words.iter().copied())
    }

    fn combine(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        let words = self.zip_words(other).map(|(a, b)| op(a, b)).collect();
        Self {
            universe: self.universe,
            words,
        }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}
